#include <mcbound/canonical.hpp>

#include <mcbound/errors.hpp>

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

namespace mcbound
{

namespace
{

std::vector<unsigned> gate_depths( const topology& t )
{
  std::vector<unsigned> depth( t.num_gates() + 1u, 0u );
  for ( unsigned i = 1; i <= t.num_gates(); ++i )
  {
    unsigned d = 0;
    for ( auto g : ( t.gate( i ).left | t.gate( i ).right ).members() )
      d = std::max( d, depth[g] );
    depth[i] = d + 1u;
  }
  return depth;
}

bool same_unordered( const gate_inputs& x, const gate_inputs& y )
{
  return x == y || x == y.swapped();
}

class bijection_search
{
public:
  bijection_search( const topology& a, const topology& b )
      : a_( a ), b_( b ), depth_a_( gate_depths( a ) ), depth_b_( gate_depths( b ) ),
        image_( a.num_gates() + 1u, 0u ), used_( b.num_gates() + 1u, false )
  {
  }

  bool run() { return extend( 1u ); }

private:
  /* gates of `a` are assigned in index order, so all inputs of gate i already have images */
  bool extend( unsigned i )
  {
    if ( i > a_.num_gates() )
      return true;
    const auto& g = a_.gate( i );
    const gate_inputs mapped{ g.left.mapped( image_ ), g.right.mapped( image_ ) };
    for ( unsigned j = 1; j <= b_.num_gates(); ++j )
    {
      if ( used_[j] || depth_a_[i] != depth_b_[j] || !same_unordered( mapped, b_.gate( j ) ) )
        continue;
      used_[j] = true;
      image_[i] = j;
      if ( extend( i + 1u ) )
        return true;
      used_[j] = false;
      image_[i] = 0u;
    }
    return false;
  }

  const topology& a_;
  const topology& b_;
  std::vector<unsigned> depth_a_;
  std::vector<unsigned> depth_b_;
  std::vector<unsigned> image_;
  std::vector<bool> used_;
};

class canonical_search
{
public:
  canonical_search( const topology& t, const layer_partition& layers )
      : t_( t ), layers_( layers.layers() )
  {
    for ( auto s : layers_ )
      members_.push_back( s.members() );
    start_.push_back( 0u );
    for ( const auto& m : members_ )
      start_.push_back( start_.back() + static_cast<unsigned>( m.size() ) );
    new_index_.fill( 0u );
  }

  topology run()
  {
    descend( 0u );
    return topology( std::vector<gate_inputs>( best_.begin(), best_.begin() + t_.num_gates() ) );
  }

private:
  using keyed_gate = std::pair<gate_inputs, unsigned>;

  void descend( std::size_t m )
  {
    if ( m == layers_.size() )
    {
      if ( !have_best_ || std::lexicographical_compare( current_.begin(), current_.begin() + start_[m], best_.begin(),
                                                        best_.begin() + start_[m] ) )
      {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }

    std::vector<keyed_gate> row;
    row.reserve( members_[m].size() );
    for ( auto g : members_[m] )
    {
      const auto& gate = t_.gate( g );
      gate_inputs image{ gate.left.mapped( new_index_ ), gate.right.mapped( new_index_ ) };
      const bool may_swap = m == 0u || gate.right.intersects( layers_[m - 1u] );
      if ( may_swap && image.swapped() < image )
        image = image.swapped();
      row.emplace_back( image, g );
    }
    std::sort( row.begin(), row.end() );

    const unsigned base = start_[m];
    for ( std::size_t p = 0; p < row.size(); ++p )
      current_[base + p] = row[p].first;

    /* the best sequence may change while siblings are explored, so compare the whole prefix */
    const auto end = start_[m + 1u];
    if ( have_best_ && std::lexicographical_compare( best_.begin(), best_.begin() + end, current_.begin(),
                                                     current_.begin() + end ) )
      return;

    /* labels of the last layer are never read, so its tie order is irrelevant */
    if ( m + 1u == layers_.size() )
    {
      descend( m + 1u );
      return;
    }

    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for ( std::size_t p = 0; p < row.size(); )
    {
      std::size_t q = p + 1u;
      while ( q < row.size() && row[q].first == row[p].first )
        ++q;
      if ( q - p > 1u )
        ties.emplace_back( p, q );
      p = q;
    }
    permute_ties( m, row, ties, 0u );
  }

  void permute_ties( std::size_t m, std::vector<keyed_gate>& row,
                     const std::vector<std::pair<std::size_t, std::size_t>>& ties, std::size_t tie )
  {
    if ( tie == ties.size() )
    {
      for ( std::size_t p = 0; p < row.size(); ++p )
        new_index_[row[p].second] = start_[m] + static_cast<unsigned>( p ) + 1u;
      descend( m + 1u );
      return;
    }
    const auto [lo, hi] = ties[tie];
    auto cmp_gate = []( const keyed_gate& x, const keyed_gate& y ) { return x.second < y.second; };
    std::sort( row.begin() + lo, row.begin() + hi, cmp_gate );
    do
    {
      permute_ties( m, row, ties, tie + 1u );
    } while ( std::next_permutation( row.begin() + lo, row.begin() + hi, cmp_gate ) );
  }

  const topology& t_;
  const std::vector<gate_set>& layers_;
  std::vector<std::vector<unsigned>> members_;
  std::vector<unsigned> start_;
  std::array<unsigned, topology::max_gates + 1u> new_index_{};
  std::array<gate_inputs, topology::max_gates> current_{};
  std::array<gate_inputs, topology::max_gates> best_{};
  bool have_best_{ false };
};

} // namespace

bool equivalent( const topology& a, const topology& b )
{
  if ( a.num_gates() != b.num_gates() )
    return false;
  return bijection_search( a, b ).run();
}

topology canonical_form( const topology& t )
{
  const auto layers = layering( t );
  if ( !is_well_layered( t, layers ) )
    throw contract_error( "canonical_form requires a well-layered topology" );
  return canonical_search( t, layers ).run();
}

} // namespace mcbound
