#include <mcbound/circuit.hpp>

#include <mcbound/errors.hpp>

#include <bit>
#include <string>
#include <utility>

namespace mcbound
{

namespace
{

void check_term( const term& t )
{
  if ( t.type == term::kind::input && ( t.index == 0u || t.index > circuit::max_inputs ) )
    throw invalid_structure( "input index " + std::to_string( t.index ) + " out of range" );
  if ( t.type == term::kind::gate && ( t.index == 0u || t.index > circuit::max_gates ) )
    throw invalid_structure( "gate index " + std::to_string( t.index ) + " out of range" );
}

bool parity( uint64_t word )
{
  return std::popcount( word ) & 1;
}

const xor_set top_only{ 0u, true, {} };

} // namespace

xor_set xor_set::of( std::initializer_list<term> terms )
{
  xor_set s;
  for ( const auto& t : terms )
  {
    if ( !s.contains( t ) )
      s.flip( t );
  }
  return s;
}

bool xor_set::contains( const term& t ) const noexcept
{
  switch ( t.type )
  {
  case term::kind::input:
    return t.index >= 1u && t.index <= 32u && ( ( inputs >> ( t.index - 1u ) ) & 1u );
  case term::kind::top:
    return top;
  case term::kind::gate:
    return t.index >= 1u && t.index <= gate_set::capacity && gates.contains( t.index );
  }
  return false;
}

void xor_set::flip( const term& t )
{
  check_term( t );
  switch ( t.type )
  {
  case term::kind::input:
    inputs ^= uint32_t{ 1 } << ( t.index - 1u );
    break;
  case term::kind::top:
    top = !top;
    break;
  case term::kind::gate:
    gates = gates ^ gate_set::of( { t.index } );
    break;
  }
}

std::vector<term> xor_set::terms() const
{
  std::vector<term> out;
  for ( uint32_t b = inputs; b != 0u; b &= b - 1u )
    out.push_back( term::input( static_cast<unsigned>( std::countr_zero( b ) ) + 1u ) );
  if ( top )
    out.push_back( term::top() );
  for ( auto g : gates.members() )
    out.push_back( term::gate( g ) );
  return out;
}

circuit::circuit( unsigned num_inputs, std::vector<and_gate> gates, xor_set output )
    : num_inputs_( num_inputs ), gates_( std::move( gates ) ), output_( output )
{
  if ( num_inputs_ > max_inputs )
    throw capacity_error( "circuit arity " + std::to_string( num_inputs_ ) + " exceeds the supported maximum of " +
                          std::to_string( max_inputs ) );
  if ( gates_.size() > max_gates )
    throw capacity_error( "circuit with " + std::to_string( gates_.size() ) + " gates exceeds the maximum of " +
                          std::to_string( max_gates ) );

  const uint32_t input_mask = num_inputs_ >= 32u ? ~uint32_t{ 0 } : ( uint32_t{ 1 } << num_inputs_ ) - 1u;
  auto check = [&]( const xor_set& s, gate_set allowed, const std::string& where ) {
    if ( s.inputs & ~input_mask )
      throw invalid_structure( where + " reads an input beyond x" + std::to_string( num_inputs_ ) );
    if ( !s.gates.is_subset_of( allowed ) )
      throw invalid_structure( where + " reads gate " + std::to_string( ( s.gates - allowed ).max_gate() ) +
                               ", which is not available there" );
  };
  for ( unsigned i = 1; i <= gates_.size(); ++i )
  {
    const auto where = "gate " + std::to_string( i );
    check( gates_[i - 1u].left, gate_set::first( i - 1u ), where );
    check( gates_[i - 1u].right, gate_set::first( i - 1u ), where );
  }
  check( output_, gate_set::first( num_gates() ), "output" );
}

bool eval( const circuit& c, uint64_t assignment )
{
  uint32_t values = 0;
  auto fold = [&]( const xor_set& s ) {
    return parity( s.inputs & assignment ) != ( s.top != parity( s.gates.bits() & values ) );
  };
  for ( unsigned i = 0; i < c.num_gates(); ++i )
  {
    const auto& g = c.gates()[i];
    if ( fold( g.left ) && fold( g.right ) )
      values |= uint32_t{ 1 } << i;
  }
  return fold( c.output() );
}

bool eval( const circuit& c, std::span<const bool> assignment )
{
  if ( assignment.size() != c.num_inputs() )
    throw contract_error( "assignment has " + std::to_string( assignment.size() ) + " bits, circuit has " +
                          std::to_string( c.num_inputs() ) + " inputs" );
  uint64_t packed = 0;
  for ( std::size_t j = 0; j < assignment.size(); ++j )
  {
    if ( assignment[j] )
      packed |= uint64_t{ 1 } << j;
  }
  return eval( c, packed );
}

truth_table compute_truth_table( const circuit& c )
{
  const unsigned n = c.num_inputs();
  std::vector<truth_table> inputs;
  for ( unsigned j = 1; j <= n; ++j )
    inputs.push_back( truth_table::nth_var( n, j ) );
  std::vector<truth_table> values;

  auto fold = [&]( const xor_set& s ) {
    auto tt = truth_table::constant( n, s.top );
    for ( uint32_t b = s.inputs; b != 0u; b &= b - 1u )
      tt ^= inputs[std::countr_zero( b )];
    for ( uint32_t b = s.gates.bits(); b != 0u; b &= b - 1u )
      tt ^= values[std::countr_zero( b )];
    return tt;
  };
  for ( const auto& g : c.gates() )
    values.push_back( fold( g.left ) & fold( g.right ) );
  return fold( c.output() );
}

topology topology_of( const circuit& c )
{
  std::vector<gate_inputs> gates;
  gates.reserve( c.num_gates() );
  for ( const auto& g : c.gates() )
    gates.push_back( { g.left.gates, g.right.gates } );
  return topology( std::move( gates ) );
}

bool is_negation_normal( const circuit& c )
{
  for ( const auto& g : c.gates() )
  {
    if ( g.left.top && g.right.top )
      return false;
  }
  return true;
}

circuit negation_normalize( const circuit& c )
{
  auto gates = c.gates();
  auto output = c.output();
  for ( unsigned i = 1; i <= gates.size(); ++i )
  {
    auto& g = gates[i - 1u];
    if ( !g.left.top || !g.right.top )
      continue;
    g.left.top = false;
    g.right.top = false;
    const xor_set delta = g.left ^ g.right ^ top_only;
    auto absorb = [&]( xor_set& s ) {
      if ( s.gates.contains( i ) )
        s = s ^ delta;
    };
    for ( unsigned j = i + 1u; j <= gates.size(); ++j )
    {
      absorb( gates[j - 1u].left );
      absorb( gates[j - 1u].right );
    }
    absorb( output );
  }
  return circuit( c.num_inputs(), std::move( gates ), output );
}

circuit apply( const circuit& c, const relabeling& r )
{
  if ( r.source.size() != c.num_gates() || r.swapped.size() != c.num_gates() )
    throw contract_error( "relabeling size does not match the circuit" );
  const auto inv = r.new_index();
  auto remap = [&]( xor_set s ) {
    s.gates = s.gates.mapped( inv );
    return s;
  };
  std::vector<and_gate> gates( c.num_gates() );
  for ( unsigned p = 0; p < c.num_gates(); ++p )
  {
    const auto& g = c.gate( r.source[p] );
    and_gate image{ remap( g.left ), remap( g.right ) };
    gates[p] = r.swapped[p] ? image.swapped() : image;
  }
  return circuit( c.num_inputs(), std::move( gates ), remap( c.output() ) );
}

circuit well_layer_normalize( const circuit& c )
{
  return apply( c, well_layer_normalize_traced( topology_of( c ) ).mapping );
}

circuit minimalize_circuit( const circuit& c )
{
  const auto layers = layering( topology_of( c ) );
  if ( !is_well_layered( topology_of( c ), layers ) )
    throw contract_error( "minimalize_circuit requires a well-layered topology" );

  auto gates = c.gates();
  auto with_gates = []( gate_set g, const xor_set& linear ) { return xor_set{ linear.inputs, linear.top, g }; };

  /* every rewrite keeps the union of the gate parts, hence the layering */
  for ( unsigned i = 1; i <= gates.size(); ++i )
  {
    auto& g = gates[i - 1u];
    const auto lg = g.left.gates;
    const auto rg = g.right.gates;
    const auto a = g.left.linear();
    const auto b = g.right.linear();
    const auto sum = a ^ b ^ top_only;

    if ( !lg.empty() && lg.is_subset_of( rg ) )
    {
      g.right = with_gates( rg - lg, sum );
      continue;
    }
    if ( !rg.empty() && rg.is_subset_of( lg ) )
    {
      g.left = with_gates( lg - rg, sum );
    }
    else
    {
      const auto shared = lg & rg;
      if ( shared.empty() )
        continue;
      const auto only_left = lg - rg;
      const auto only_right = rg - lg;
      if ( only_left < shared && only_left < only_right )
        g = { with_gates( shared | only_left, a ), with_gates( only_left | only_right, sum ) };
      else if ( only_right < shared && only_right < only_left )
        g = { with_gates( only_left | only_right, sum ), with_gates( shared | only_right, b ) };
      else
        continue;
    }

    const auto m = layers.layer_of( i );
    if ( m > 0u && !g.left.gates.intersects( layers.layer( m - 1u ) ) )
      g = g.swapped();
  }
  return circuit( c.num_inputs(), std::move( gates ), c.output() );
}

} // namespace mcbound
