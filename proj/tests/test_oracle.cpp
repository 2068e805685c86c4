#include "fixtures.hpp"

#include <mcbound/circuit.hpp>
#include <mcbound/errors.hpp>
#include <mcbound/generate.hpp>
#include <mcbound/oracle.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace mcbound;
using namespace mcbound::test;

TEST( Oracle, RawTopologyCounts )
{
  const std::vector<std::size_t> expected{ 1, 1, 4, 64, 4096, 1048576 };
  for ( unsigned k = 0; k <= raw_topology_max_gates; ++k )
  {
    std::size_t count = 0;
    std::set<topology> distinct;
    enumerate_raw_topologies( k, [&]( const topology& t ) {
      ++count;
      if ( k <= 4u )
      {
        distinct.insert( t );
      }
    } );
    EXPECT_EQ( count, expected[k] );
    if ( k <= 4u )
    {
      EXPECT_EQ( distinct.size(), count );
    }
  }
  EXPECT_THROW( enumerate_raw_topologies( raw_topology_max_gates + 1u, []( const topology& ) {} ), capacity_error );
}

TEST( Oracle, ClassCountsOfWellLayeredMinimalTopologies )
{
  EXPECT_EQ( brute_equiv_classes( well_layered_minimal_topologies( 3 ) ).size(), 8u );
  EXPECT_EQ( brute_equiv_classes( well_layered_minimal_topologies( 4 ) ).size(), 85u );
}

TEST( Oracle, SingletonIsOneClass )
{
  const std::vector<topology> one{ majority4_topology() };
  EXPECT_EQ( brute_equiv_classes( one ).size(), 1u );
}

TEST( Oracle, MajorityReorderingIsEquivalent )
{
  EXPECT_TRUE( brute_equivalent( majority4_topology(), majority4_reordered() ) );
  EXPECT_FALSE( brute_equivalent( topo( { gi( {}, {} ), gi( { 1 }, {} ) } ), topo( { gi( {}, {} ), gi( {}, {} ) } ) ) );
}

TEST( Oracle, OneGateComputesAllOfTwoInputs )
{
  const std::vector<topology> one{ topo( { gi( {}, {} ) } ) };
  const auto fs = exhaustive_function_set( 2, 1, one, false );
  EXPECT_EQ( fs.size(), 16u );
}

TEST( Oracle, ThreeInputsNeedTwoGates )
{
  const auto one = exhaustive_function_set( 3, 1, generate( 1 ).members, true );
  const auto two = exhaustive_function_set( 3, 2, generate( 2 ).members, true );
  EXPECT_LT( one.size(), 256u );
  EXPECT_EQ( two.size(), 256u );
  /* x1x2 + x1x3 + x2x3 = (x1 + x2)(x1 + x3) + x1 */
  EXPECT_TRUE( one.contains( threshold_function( 3, 2 ) ) );
}

TEST( Oracle, FunctionSetMatchesDirectEvaluation )
{
  /* every circuit on the single 1-gate topology with n = 2, evaluated one by one */
  function_set direct( 2 );
  for ( uint32_t a = 0; a < 8; ++a )
    for ( uint32_t b = 0; b < 8; ++b )
      for ( uint32_t o = 0; o < 16; ++o )
      {
        xor_set l{ a & 3u, ( a & 4u ) != 0u, {} };
        xor_set r{ b & 3u, ( b & 4u ) != 0u, {} };
        xor_set out{ o & 3u, ( o & 4u ) != 0u, ( o & 8u ) ? gate_set::of( { 1 } ) : gate_set() };
        const circuit c( 2u, { { l, r } }, out );
        direct.insert( compute_truth_table( c ).words()[0] );
      }
  const std::vector<topology> one{ topo( { gi( {}, {} ) } ) };
  EXPECT_EQ( exhaustive_function_set( 2, 1, one, false ), direct );
}

TEST( Oracle, NegationNormalCircuitsLoseNothing )
{
  for ( unsigned n = 1; n <= 2; ++n )
    for ( unsigned k = 0; k <= 2; ++k )
    {
      const auto raw = raw_topologies( k );
      EXPECT_EQ( exhaustive_function_set( n, k, raw, true ), exhaustive_function_set( n, k, raw, false ) )
          << n << ' ' << k;
    }
}

TEST( Oracle, MoreGatesNeverComputeLess )
{
  const auto one = exhaustive_function_set( 2, 1, generate( 1 ).members, true );
  const auto two = exhaustive_function_set( 2, 2, generate( 2 ).members, true );
  EXPECT_TRUE( one.is_subset_of( two ) );
  const auto zero = exhaustive_function_set( 2, 0, std::vector<topology>{ topology() }, true );
  EXPECT_EQ( zero.size(), 8u );
  EXPECT_TRUE( zero.is_subset_of( one ) );
}

TEST( Oracle, Completeness )
{
  EXPECT_TRUE( verify_completeness_small( 2, 2 ) );
  EXPECT_TRUE( verify_completeness_small( 1, 1 ) );
  EXPECT_TRUE( verify_completeness_small( 2, 0 ) );
}

TEST( Oracle, BudgetIsEnforced )
{
  EXPECT_EQ( exhaustive_circuit_count( 3, 2, 2, true ), 2u * ( 3u * 64u ) * ( 3u * 64u ) * 64u );
  try
  {
    exhaustive_function_set( 3, 2, generate( 2 ).members, true, 1000 );
    ADD_FAILURE() << "budget not enforced";
  }
  catch ( const capacity_error& e )
  {
    EXPECT_NE( std::string( e.what() ).find( std::to_string( exhaustive_circuit_count( 3, 2, 2, true ) ) ),
               std::string::npos );
  }
  EXPECT_THROW( exhaustive_function_set( 5, 0, std::vector<topology>{ topology() }, true ), contract_error );
}
