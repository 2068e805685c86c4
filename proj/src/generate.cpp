#include <mcbound/generate.hpp>

#include <mcbound/canonical.hpp>
#include <mcbound/errors.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

namespace mcbound
{

namespace
{

/* gate sequence of at most 7 gates, one byte per input set, compared like the sequence itself */
struct packed_topology
{
  uint64_t hi{ 0 };
  uint64_t lo{ 0 };

  friend bool operator==( const packed_topology&, const packed_topology& ) = default;
  friend auto operator<=>( const packed_topology&, const packed_topology& ) = default;
};

struct packed_hash
{
  std::size_t operator()( const packed_topology& p ) const noexcept
  {
    uint64_t h = p.hi * 0x9e3779b97f4a7c15ull;
    h ^= p.lo + 0x7f4a7c159e3779b9ull + ( h << 6 ) + ( h >> 2 );
    return static_cast<std::size_t>( h ^ ( h >> 31 ) );
  }
};

void put_byte( packed_topology& p, unsigned position, uint64_t value )
{
  if ( position < 8u )
    p.hi |= value << ( 8u * ( 7u - position ) );
  else
    p.lo |= value << ( 8u * ( 15u - position ) );
}

uint32_t get_byte( const packed_topology& p, unsigned position )
{
  const uint64_t word = position < 8u ? p.hi : p.lo;
  const unsigned shift = position < 8u ? 8u * ( 7u - position ) : 8u * ( 15u - position );
  return static_cast<uint32_t>( ( word >> shift ) & 0xffu );
}

packed_topology pack( const topology& t )
{
  packed_topology p;
  for ( unsigned i = 0; i < t.num_gates(); ++i )
  {
    put_byte( p, 2u * i, t.gates()[i].left.bits() );
    put_byte( p, 2u * i + 1u, t.gates()[i].right.bits() );
  }
  return p;
}

topology unpack( const packed_topology& p, unsigned k )
{
  std::vector<gate_inputs> gates( k );
  for ( unsigned i = 0; i < k; ++i )
    gates[i] = { gate_set( get_byte( p, 2u * i ) ), gate_set( get_byte( p, 2u * i + 1u ) ) };
  return topology( std::move( gates ) );
}

/* canonical form -> least generated member of the class */
using class_map = std::unordered_map<packed_topology, packed_topology, packed_hash>;

void record( class_map& classes, const packed_topology& key, const packed_topology& member )
{
  auto [it, inserted] = classes.try_emplace( key, member );
  if ( !inserted && member < it->second )
    it->second = member;
}

void merge_into( class_map& target, const class_map& source )
{
  for ( const auto& [key, member] : source )
    record( target, key, member );
}

struct level_output
{
  std::vector<class_map> classes;
  std::vector<std::vector<topology>> partial;
  std::size_t candidates{ 0 };
};

/*
  Grows `parent` by one new layer. A layer that completes a topology is
  enumerated as a non-decreasing gate sequence; a layer that later gates will
  read is enumerated in every order, because its labels feed the order-based
  minimality test of those later gates.
*/
void extend( const topology& parent, unsigned max_k, bool keep_partial, level_output& out )
{
  const auto options = admissible_gates( parent );
  std::vector<gate_inputs> gates = parent.gates();

  auto completed = [&]( auto&& self, std::size_t from ) -> void {
    for ( std::size_t o = from; o < options.size(); ++o )
    {
      gates.push_back( options[o] );
      const topology candidate( gates );
      record( out.classes[gates.size()], pack( canonical_form( candidate ) ), pack( candidate ) );
      ++out.candidates;
      if ( gates.size() < max_k )
        self( self, o );
      gates.pop_back();
    }
  };
  completed( completed, 0u );

  if ( !keep_partial )
    return;
  auto partial = [&]( auto&& self ) -> void {
    for ( const auto& option : options )
    {
      gates.push_back( option );
      if ( gates.size() < max_k )
      {
        out.partial[gates.size()].emplace_back( gates );
        self( self );
      }
      gates.pop_back();
    }
  };
  partial( partial );
}

std::vector<packed_topology> sorted_keys( const class_map& classes )
{
  std::vector<packed_topology> keys;
  keys.reserve( classes.size() );
  for ( const auto& entry : classes )
    keys.push_back( entry.first );
  std::sort( keys.begin(), keys.end() );
  return keys;
}

} // namespace

std::vector<gate_inputs> admissible_gates( const topology& t )
{
  const auto layers = layering( t );
  std::vector<gate_inputs> out;
  if ( layers.num_layers() == 0u )
    return out;
  const auto last = layers.layers().back();
  const uint32_t limit = uint32_t{ 1 } << t.num_gates();
  for ( uint32_t l = 0; l < limit; ++l )
  {
    const gate_set left( l );
    if ( !left.intersects( last ) )
      continue;
    for ( uint32_t r = 0; r < limit; ++r )
    {
      const gate_inputs g{ left, gate_set( r ) };
      if ( is_minimal_gate( g ) )
        out.push_back( g );
    }
  }
  return out;
}

std::vector<topology_set> generate_up_to( unsigned max_k, const generate_params& params )
{
  if ( max_k > generate_max_gates )
  {
    throw capacity_error( "generate supports at most " + std::to_string( generate_max_gates ) + " gates, got " +
                          std::to_string( max_k ) );
  }
  const bool keep_partial = !params.prune_partial;
  std::vector<class_map> classes( max_k + 1u );
  std::vector<std::vector<topology>> partial( max_k + 1u );
  for ( unsigned width = 1; width <= max_k; ++width )
  {
    const topology seed{ std::vector<gate_inputs>( width ) };
    record( classes[width], pack( seed ), pack( seed ) );
    if ( keep_partial && width < max_k )
      partial[width].push_back( seed );
  }

  const unsigned workers = std::max( 1u, params.workers );
  for ( unsigned g = 1; g < max_k; ++g )
  {
    std::vector<topology> parents;
    if ( keep_partial )
    {
      parents = std::move( partial[g] );
      std::sort( parents.begin(), parents.end() );
    }
    else
    {
      for ( const auto& key : sorted_keys( classes[g] ) )
        parents.push_back( unpack( classes[g].at( key ), g ) );
    }

    std::vector<level_output> local( workers );
    for ( auto& l : local )
    {
      l.classes.resize( max_k + 1u );
      l.partial.resize( max_k + 1u );
    }
    auto work = [&]( unsigned w ) {
      for ( std::size_t p = w; p < parents.size(); p += workers )
        extend( parents[p], max_k, keep_partial, local[w] );
    };
    if ( workers == 1u )
    {
      work( 0u );
    }
    else
    {
      std::vector<std::jthread> pool;
      for ( unsigned w = 0; w < workers; ++w )
        pool.emplace_back( work, w );
    }

    generate_progress progress;
    progress.gates = g;
    progress.parents = parents.size();
    for ( auto& l : local )
    {
      progress.candidates += l.candidates;
      for ( unsigned size = g + 1u; size <= max_k; ++size )
      {
        merge_into( classes[size], l.classes[size] );
        auto& target = partial[size];
        target.insert( target.end(), std::make_move_iterator( l.partial[size].begin() ),
                       std::make_move_iterator( l.partial[size].end() ) );
      }
    }
    if ( params.on_progress )
    {
      progress.classes.assign( max_k + 1u, 0u );
      for ( unsigned size = 1; size <= max_k; ++size )
        progress.classes[size] = classes[size].size();
      params.on_progress( progress );
    }
  }

  std::vector<topology_set> result;
  for ( unsigned size = 1; size <= max_k; ++size )
  {
    topology_set set{ size, {} };
    for ( const auto& key : sorted_keys( classes[size] ) )
      set.members.push_back( unpack( classes[size].at( key ), size ) );
    result.push_back( std::move( set ) );
  }
  return result;
}

topology_set generate( unsigned k, const generate_params& params )
{
  if ( k == 0u )
    return {};
  auto all = generate_up_to( k, params );
  return std::move( all.back() );
}

} // namespace mcbound
