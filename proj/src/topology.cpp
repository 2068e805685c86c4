#include <mcbound/topology.hpp>

#include <mcbound/errors.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcbound
{

gate_set gate_set::of( std::initializer_list<unsigned> gates )
{
  uint32_t bits = 0;
  for ( auto g : gates )
  {
    if ( g == 0u || g > capacity )
      throw invalid_structure( "gate index " + std::to_string( g ) + " out of range" );
    bits |= uint32_t{ 1 } << ( g - 1u );
  }
  return gate_set( bits );
}

unsigned gate_set::size() const noexcept
{
  return static_cast<unsigned>( std::popcount( bits_ ) );
}

unsigned gate_set::max_gate() const noexcept
{
  return static_cast<unsigned>( std::bit_width( bits_ ) );
}

std::vector<unsigned> gate_set::members() const
{
  std::vector<unsigned> out;
  for ( uint32_t b = bits_; b != 0u; b &= b - 1u )
    out.push_back( static_cast<unsigned>( std::countr_zero( b ) ) + 1u );
  return out;
}

gate_set gate_set::mapped( std::span<const unsigned> new_index ) const
{
  uint32_t out = 0;
  for ( uint32_t b = bits_; b != 0u; b &= b - 1u )
  {
    const auto g = static_cast<unsigned>( std::countr_zero( b ) ) + 1u;
    out |= uint32_t{ 1 } << ( new_index[g] - 1u );
  }
  return gate_set( out );
}

topology::topology( std::vector<gate_inputs> gates )
    : gates_( std::move( gates ) )
{
  if ( gates_.size() > max_gates )
    throw capacity_error( "topology with " + std::to_string( gates_.size() ) + " gates exceeds the maximum of " +
                          std::to_string( max_gates ) );
  for ( unsigned i = 1; i <= gates_.size(); ++i )
  {
    const auto& g = gates_[i - 1u];
    if ( !( g.left | g.right ).is_subset_of( gate_set::first( i - 1u ) ) )
      throw invalid_structure( "gate " + std::to_string( i ) + " reads a gate that is not strictly earlier" );
  }
}

topology topology::extended( std::span<const gate_inputs> extra ) const
{
  auto gates = gates_;
  gates.insert( gates.end(), extra.begin(), extra.end() );
  return topology( std::move( gates ) );
}

layer_partition::layer_partition( std::vector<gate_set> layers )
    : layers_( std::move( layers ) )
{
  gate_set seen;
  for ( auto s : layers_ )
  {
    if ( s.empty() )
      throw invalid_structure( "empty layer" );
    if ( s.intersects( seen ) )
      throw invalid_structure( "layers overlap" );
    seen = seen | s;
  }
}

std::size_t layer_partition::layer_of( unsigned g ) const
{
  for ( std::size_t m = 0; m < layers_.size(); ++m )
  {
    if ( layers_[m].contains( g ) )
      return m;
  }
  throw contract_error( "gate " + std::to_string( g ) + " is not in any layer" );
}

relabeling relabeling::identity( unsigned num_gates )
{
  relabeling r;
  r.source.resize( num_gates );
  for ( unsigned p = 0; p < num_gates; ++p )
    r.source[p] = p + 1u;
  r.swapped.assign( num_gates, false );
  return r;
}

std::vector<unsigned> relabeling::new_index() const
{
  std::vector<unsigned> inv( source.size() + 1u, 0u );
  for ( unsigned p = 0; p < source.size(); ++p )
  {
    if ( source[p] == 0u || source[p] > source.size() || inv[source[p]] != 0u )
      throw contract_error( "relabeling is not a permutation" );
    inv[source[p]] = p + 1u;
  }
  return inv;
}

topology apply( const topology& t, const relabeling& r )
{
  if ( r.source.size() != t.num_gates() || r.swapped.size() != t.num_gates() )
    throw contract_error( "relabeling size does not match the topology" );
  const auto inv = r.new_index();
  std::vector<gate_inputs> gates( t.num_gates() );
  for ( unsigned p = 0; p < t.num_gates(); ++p )
  {
    const auto& g = t.gate( r.source[p] );
    gate_inputs image{ g.left.mapped( inv ), g.right.mapped( inv ) };
    gates[p] = r.swapped[p] ? image.swapped() : image;
  }
  return topology( std::move( gates ) );
}

layer_partition layering( const topology& t )
{
  std::vector<gate_set> layers;
  gate_set current;
  for ( unsigned i = 1; i <= t.num_gates(); ++i )
  {
    const auto& g = t.gate( i );
    if ( !current.intersects( g.left | g.right ) )
    {
      current = current | gate_set::of( { i } );
    }
    else
    {
      layers.push_back( current );
      current = gate_set::of( { i } );
    }
  }
  if ( !current.empty() )
    layers.push_back( current );
  return layer_partition( std::move( layers ) );
}

namespace
{

/* smallest gate violating the well-layered condition, 0 if none */
unsigned first_violation( const topology& t, const layer_partition& layers )
{
  for ( std::size_t m = 1; m < layers.num_layers(); ++m )
  {
    const auto previous = layers.layer( m - 1u );
    for ( auto g : layers.layer( m ).members() )
    {
      if ( !t.gate( g ).left.intersects( previous ) )
        return g;
    }
  }
  return 0u;
}

} // namespace

bool is_well_layered( const topology& t, const layer_partition& layers )
{
  return first_violation( t, layers ) == 0u;
}

bool is_well_layered( const topology& t )
{
  return is_well_layered( t, layering( t ) );
}

normalized_topology well_layer_normalize_traced( const topology& t )
{
  const unsigned k = t.num_gates();
  auto current = t;
  auto mapping = relabeling::identity( k );

  /* each step repairs the smallest violating gate and never breaks a smaller one */
  for ( unsigned step = 0; step <= 2u * k + 1u; ++step )
  {
    const auto layers = layering( current );
    const unsigned i = first_violation( current, layers );
    if ( i == 0u )
      return { std::move( current ), std::move( mapping ) };

    const auto previous = layers.layer( layers.layer_of( i ) - 1u );
    auto gates = current.gates();
    if ( gates[i - 1u].right.intersects( previous ) )
    {
      gates[i - 1u] = gates[i - 1u].swapped();
      mapping.swapped[i - 1u] = !mapping.swapped[i - 1u];
      current = topology( std::move( gates ) );
      continue;
    }

    const auto& moving = gates[i - 1u];
    const unsigned j = ( moving.left | moving.right ).max_gate();

    /* gate i moves to position j+1, gates j+1..i-1 shift up by one */
    relabeling step_map = relabeling::identity( k );
    step_map.source[j] = i;
    for ( unsigned z = j + 1u; z < i; ++z )
      step_map.source[z] = z;
    if ( j != 0u && moving.right.contains( j ) )
      step_map.swapped[j] = true;

    current = apply( current, step_map );

    relabeling composed;
    composed.source.resize( k );
    composed.swapped.resize( k );
    for ( unsigned p = 0; p < k; ++p )
    {
      const unsigned from = step_map.source[p] - 1u;
      composed.source[p] = mapping.source[from];
      composed.swapped[p] = mapping.swapped[from] != step_map.swapped[p];
    }
    mapping = std::move( composed );
  }
  throw std::logic_error( "well-layering normalization did not converge" );
}

topology well_layer_normalize( const topology& t )
{
  return well_layer_normalize_traced( t ).result;
}

bool is_minimal_gate( const gate_inputs& g )
{
  if ( !g.left.empty() && g.left.is_subset_of( g.right ) )
    return false;
  if ( !g.right.empty() && g.right.is_subset_of( g.left ) )
    return false;
  const auto shared = g.left & g.right;
  if ( !shared.empty() )
    return shared < g.left - g.right && shared < g.right - g.left;
  return true;
}

bool is_minimal( const topology& t )
{
  return std::all_of( t.gates().begin(), t.gates().end(), []( const auto& g ) { return is_minimal_gate( g ); } );
}

} // namespace mcbound
