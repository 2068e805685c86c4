#include <mcbound/oracle.hpp>

#include <mcbound/errors.hpp>
#include <mcbound/generate.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace mcbound
{

namespace
{

uint64_t saturating_mul( uint64_t a, uint64_t b )
{
  if ( a != 0u && b > UINT64_MAX / a )
    return UINT64_MAX;
  return a * b;
}

uint64_t saturating_pow( uint64_t base, unsigned e )
{
  uint64_t r = 1;
  for ( unsigned i = 0; i < e; ++i )
    r = saturating_mul( r, base );
  return r;
}

/* image of `bits` when gate g becomes gate perm[g-1]+1 */
uint32_t permute_bits( uint32_t bits, std::span<const unsigned> perm )
{
  uint32_t out = 0;
  for ( unsigned g = 0; bits != 0u; ++g, bits >>= 1u )
  {
    if ( bits & 1u )
      out |= uint32_t{ 1 } << perm[g];
  }
  return out;
}

} // namespace

void enumerate_raw_topologies( unsigned k, const std::function<void( const topology& )>& visit )
{
  if ( k > raw_topology_max_gates )
    throw capacity_error( "raw topology enumeration supports at most " + std::to_string( raw_topology_max_gates ) +
                          " gates, got " + std::to_string( k ) );
  const unsigned total_bits = k * k - k;
  std::vector<gate_inputs> gates( k );
  for ( uint64_t code = 0; code < ( uint64_t{ 1 } << total_bits ); ++code )
  {
    /* gate i takes 2(i-1) consecutive bits of the code: i-1 for L, then i-1 for R */
    uint64_t rest = code;
    for ( unsigned i = 1; i <= k; ++i )
    {
      const uint64_t mask = ( uint64_t{ 1 } << ( i - 1u ) ) - 1u;
      const auto left = static_cast<uint32_t>( rest & mask );
      rest >>= ( i - 1u );
      const auto right = static_cast<uint32_t>( rest & mask );
      rest >>= ( i - 1u );
      gates[i - 1u] = { gate_set( left ), gate_set( right ) };
    }
    visit( topology( gates ) );
  }
}

std::vector<topology> raw_topologies( unsigned k )
{
  std::vector<topology> out;
  enumerate_raw_topologies( k, [&]( const topology& t ) { out.push_back( t ); } );
  return out;
}

bool oracle_well_layered( const topology& t )
{
  std::vector<uint32_t> layers{ 0u };
  std::vector<std::size_t> layer_of( t.num_gates() + 1u, 0u );
  for ( unsigned i = 1; i <= t.num_gates(); ++i )
  {
    const uint32_t inputs = t.gate( i ).left.bits() | t.gate( i ).right.bits();
    if ( ( inputs & layers.back() ) != 0u )
      layers.push_back( 0u );
    layers.back() |= uint32_t{ 1 } << ( i - 1u );
    layer_of[i] = layers.size() - 1u;
  }
  for ( unsigned i = 1; i <= t.num_gates(); ++i )
  {
    if ( layer_of[i] > 0u && ( t.gate( i ).left.bits() & layers[layer_of[i] - 1u] ) == 0u )
      return false;
  }
  return true;
}

bool oracle_minimal( const topology& t )
{
  for ( const auto& g : t.gates() )
  {
    const uint32_t l = g.left.bits();
    const uint32_t r = g.right.bits();
    if ( l != 0u && ( l & ~r ) == 0u )
      return false;
    if ( r != 0u && ( r & ~l ) == 0u )
      return false;
    const uint32_t x = l & r;
    if ( x != 0u && !( x < ( l & ~r ) && x < ( r & ~l ) ) )
      return false;
  }
  return true;
}

std::vector<topology> well_layered_minimal_topologies( unsigned k )
{
  std::vector<topology> out;
  enumerate_raw_topologies( k, [&]( const topology& t ) {
    if ( oracle_well_layered( t ) && oracle_minimal( t ) )
      out.push_back( t );
  } );
  return out;
}

std::vector<uint64_t> orbit_key( const topology& t )
{
  const unsigned k = t.num_gates();
  std::vector<unsigned> perm( k );
  std::iota( perm.begin(), perm.end(), 0u );
  std::vector<uint64_t> best;
  std::vector<uint64_t> image( k );
  do
  {
    for ( unsigned i = 0; i < k; ++i )
    {
      const uint64_t a = permute_bits( t.gates()[i].left.bits(), perm );
      const uint64_t b = permute_bits( t.gates()[i].right.bits(), perm );
      image[perm[i]] = ( std::min( a, b ) << 32u ) | std::max( a, b );
    }
    if ( best.empty() || image < best )
      best = image;
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return best;
}

bool brute_equivalent( const topology& a, const topology& b )
{
  return a.num_gates() == b.num_gates() && orbit_key( a ) == orbit_key( b );
}

std::vector<std::vector<std::size_t>> brute_equiv_classes( std::span<const topology> ts )
{
  std::map<std::pair<unsigned, std::vector<uint64_t>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for ( std::size_t p = 0; p < ts.size(); ++p )
  {
    auto [it, inserted] = index.try_emplace( { ts[p].num_gates(), orbit_key( ts[p] ) }, classes.size() );
    if ( inserted )
      classes.emplace_back();
    classes[it->second].push_back( p );
  }
  return classes;
}

function_set::function_set( unsigned num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars > max_arity )
    throw capacity_error( "function sets are dense bitsets and support at most " + std::to_string( max_arity ) +
                          " inputs" );
  bits_.assign( std::max<uint64_t>( 1u, universe_size() / 64u ), 0u );
}

void function_set::insert( uint64_t table )
{
  table &= universe_size() - 1u;
  bits_[table >> 6u] |= uint64_t{ 1 } << ( table & 63u );
}

bool function_set::contains( uint64_t table ) const
{
  if ( table >= universe_size() )
    return false;
  return ( bits_[table >> 6u] >> ( table & 63u ) ) & 1u;
}

bool function_set::contains( const truth_table& tt ) const
{
  return tt.num_vars() == num_vars_ && contains( tt.words()[0] );
}

std::size_t function_set::size() const
{
  std::size_t total = 0;
  for ( auto w : bits_ )
    total += static_cast<std::size_t>( std::popcount( w ) );
  return total;
}

bool function_set::is_subset_of( const function_set& other ) const
{
  if ( other.num_vars_ != num_vars_ )
    return false;
  for ( std::size_t i = 0; i < bits_.size(); ++i )
  {
    if ( bits_[i] & ~other.bits_[i] )
      return false;
  }
  return true;
}

uint64_t exhaustive_circuit_count( unsigned n, unsigned k, std::size_t num_topologies, bool negation_normal_only )
{
  const uint64_t per_gate = saturating_mul( negation_normal_only ? 3u : 4u, saturating_pow( 2u, 2u * n ) );
  const uint64_t per_topology = saturating_mul( saturating_pow( per_gate, k ), saturating_pow( 2u, n + k + 1u ) );
  return saturating_mul( per_topology, num_topologies );
}

function_set exhaustive_function_set( unsigned n, unsigned k, std::span<const topology> topologies,
                                      bool negation_normal_only, uint64_t budget )
{
  if ( n > function_set::max_arity )
    throw contract_error( "exhaustive_function_set supports at most " + std::to_string( function_set::max_arity ) +
                          " inputs" );
  for ( const auto& t : topologies )
  {
    if ( t.num_gates() != k )
      throw contract_error( "topology with " + std::to_string( t.num_gates() ) + " gates passed for k=" +
                            std::to_string( k ) );
  }
  const uint64_t required = exhaustive_circuit_count( n, k, topologies.size(), negation_normal_only );
  if ( required > budget )
    throw capacity_error( "exhaustive search needs " + std::to_string( required ) + " circuits, budget is " +
                          std::to_string( budget ) );

  function_set out( n );
  const unsigned rows = 1u << n;
  const uint64_t ones = rows == 64u ? ~uint64_t{ 0 } : ( uint64_t{ 1 } << rows ) - 1u;

  /* linear[s]: XOR of the inputs in bits 0..n-1 of s, plus T if bit n is set */
  std::vector<uint64_t> linear( std::size_t{ 1 } << ( n + 1u ), 0u );
  for ( std::size_t s = 0; s < linear.size(); ++s )
  {
    uint64_t v = ( s >> n ) & 1u ? ones : 0u;
    for ( unsigned j = 0; j < n; ++j )
    {
      if ( ( s >> j ) & 1u )
      {
        for ( unsigned row = 0; row < rows; ++row )
        {
          if ( ( row >> j ) & 1u )
            v ^= uint64_t{ 1 } << row;
        }
      }
    }
    linear[s] = v;
  }

  /* T on neither, left, right, or both inputs */
  const unsigned top_choices = negation_normal_only ? 3u : 4u;
  const uint64_t input_subsets = uint64_t{ 1 } << n;

  for ( const auto& t : topologies )
  {
    std::vector<uint64_t> value( k, 0u );
    auto xor_gates = [&]( gate_set s ) {
      uint64_t v = 0;
      for ( auto g : s.members() )
        v ^= value[g - 1u];
      return v;
    };
    auto outputs = [&]() {
      for ( uint32_t s = 0; s < ( uint32_t{ 1 } << k ); ++s )
      {
        uint64_t gx = 0;
        for ( unsigned g = 0; g < k; ++g )
        {
          if ( ( s >> g ) & 1u )
            gx ^= value[g];
        }
        for ( auto lin : linear )
          out.insert( lin ^ gx );
      }
    };
    auto assign = [&]( auto&& self, unsigned i ) -> void {
      if ( i == k )
      {
        outputs();
        return;
      }
      const auto& g = t.gates()[i];
      const uint64_t lg = xor_gates( g.left );
      const uint64_t rg = xor_gates( g.right );
      for ( uint64_t a = 0; a < input_subsets; ++a )
      {
        for ( uint64_t b = 0; b < input_subsets; ++b )
        {
          for ( unsigned top = 0; top < top_choices; ++top )
          {
            const uint64_t left = linear[a | ( uint64_t{ top & 1u } << n )] ^ lg;
            const uint64_t right = linear[b | ( uint64_t{ ( top >> 1u ) & 1u } << n )] ^ rg;
            value[i] = left & right;
            self( self, i + 1u );
          }
        }
      }
    };
    assign( assign, 0u );
  }
  return out;
}

bool verify_completeness_small( unsigned n, unsigned k, uint64_t budget )
{
  const auto raw = raw_topologies( k );
  std::vector<topology> representatives;
  if ( k == 0u )
    representatives.emplace_back();
  else
    representatives = generate( k ).members;

  const auto everything = exhaustive_function_set( n, k, raw, false, budget );
  const auto normal = exhaustive_function_set( n, k, representatives, true, budget );
  return everything == normal;
}

} // namespace mcbound
