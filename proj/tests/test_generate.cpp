#include "fixtures.hpp"

#include <mcbound/canonical.hpp>
#include <mcbound/errors.hpp>
#include <mcbound/generate.hpp>
#include <mcbound/oracle.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace mcbound;
using namespace mcbound::test;

namespace
{

std::set<std::vector<uint64_t>> oracle_class_keys( unsigned k )
{
  const auto candidates = well_layered_minimal_topologies( k );
  std::set<std::vector<uint64_t>> keys;
  for ( const auto& c : brute_equiv_classes( candidates ) )
    keys.insert( orbit_key( candidates[c.front()] ) );
  return keys;
}

} // namespace

TEST( Generate, SmallCounts )
{
  EXPECT_EQ( generate( 1 ).size(), 1u );
  EXPECT_EQ( generate( 2 ).size(), 2u );
  EXPECT_EQ( generate( 3 ).size(), 8u );
}

TEST( Generate, ZeroGatesAndCapacity )
{
  EXPECT_EQ( generate( 0 ).size(), 0u );
  EXPECT_THROW( generate( generate_max_gates + 1u ), capacity_error );
}

TEST( Generate, MembersAreMinimalWellLayeredAndDistinct )
{
  for ( unsigned k = 1; k <= 5; ++k )
  {
    const auto set = generate( k );
    EXPECT_EQ( set.k, k );
    std::set<topology> canonical;
    for ( const auto& t : set.members )
    {
      ASSERT_EQ( t.num_gates(), k );
      ASSERT_TRUE( is_minimal( t ) );
      ASSERT_TRUE( is_well_layered( t ) );
      ASSERT_TRUE( canonical.insert( canonical_form( t ) ).second );
    }
  }
}

TEST( Generate, CoversEveryOracleClassExactlyOnce )
{
  for ( unsigned k = 1; k <= 5; ++k )
  {
    const auto expected = oracle_class_keys( k );
    std::set<std::vector<uint64_t>> seen;
    for ( const auto& t : generate( k ).members )
    {
      const auto key = orbit_key( t );
      ASSERT_TRUE( expected.contains( key ) ) << "k=" << k;
      ASSERT_TRUE( seen.insert( key ).second ) << "k=" << k;
    }
    EXPECT_EQ( seen.size(), expected.size() ) << "k=" << k;
  }
}

TEST( Generate, FourGateCountFromOracle )
{
  EXPECT_EQ( oracle_class_keys( 4 ).size(), 85u );
  EXPECT_EQ( generate( 4 ).size(), 85u );
}

TEST( Generate, IndependentOfWorkerCount )
{
  const auto reference = generate( 5 );
  for ( unsigned workers : { 2u, 3u, 8u } )
  {
    generate_params p;
    p.workers = workers;
    EXPECT_EQ( generate( 5, p ), reference ) << workers;
  }
  EXPECT_EQ( generate( 5 ), reference );
}

TEST( Generate, UpToMatchesSingleRuns )
{
  const auto all = generate_up_to( 4 );
  ASSERT_EQ( all.size(), 4u );
  for ( unsigned k = 1; k <= 4; ++k )
    EXPECT_EQ( all[k - 1u], generate( k ) );
}

TEST( Generate, ProgressIsReported )
{
  std::vector<unsigned> levels;
  generate_params p;
  p.on_progress = [&]( const generate_progress& progress ) {
    levels.push_back( progress.gates );
    EXPECT_EQ( progress.classes.size(), 5u );
  };
  generate( 4, p );
  EXPECT_EQ( levels, ( std::vector<unsigned>{ 1, 2, 3 } ) );
}

TEST( Generate, PrunedPartialsLoseClasses )
{
  generate_params p;
  p.prune_partial = true;
  const auto pruned = generate( 4, p );
  const auto full = generate( 4 );
  EXPECT_LT( pruned.size(), full.size() );
  std::set<topology> full_canonical;
  for ( const auto& t : full.members )
    full_canonical.insert( canonical_form( t ) );
  for ( const auto& t : pruned.members )
    EXPECT_TRUE( full_canonical.contains( canonical_form( t ) ) );
}

TEST( Generate, AdmissibleGatesReadTheLastLayerAndAreMinimal )
{
  const auto t = majority4_well_layered();
  const auto options = admissible_gates( t );
  ASSERT_FALSE( options.empty() );
  EXPECT_TRUE( std::is_sorted( options.begin(), options.end() ) );
  std::size_t expected = 0;
  for ( uint32_t l = 0; l < 16u; ++l )
    for ( uint32_t r = 0; r < 16u; ++r )
    {
      const gate_inputs g{ gate_set( l ), gate_set( r ) };
      if ( g.left.intersects( gate_set::of( { 3, 4 } ) ) && is_minimal_gate( g ) )
        ++expected;
    }
  EXPECT_EQ( options.size(), expected );
  for ( const auto& g : options )
    EXPECT_TRUE( is_well_layered( t.extended( std::span( &g, 1u ) ) ) );
}
