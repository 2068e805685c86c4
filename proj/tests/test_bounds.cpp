#include <mcbound/bounds.hpp>
#include <mcbound/errors.hpp>

#include <gtest/gtest.h>

using namespace mcbound;

namespace
{

big_count pow2( unsigned e )
{
  big_count r = 1;
  for ( unsigned i = 0; i < e; ++i )
    r *= 2;
  return r;
}

big_count pow3( unsigned e )
{
  big_count r = 1;
  for ( unsigned i = 0; i < e; ++i )
    r *= 3;
  return r;
}

} // namespace

TEST( Bounds, AllTopologies )
{
  EXPECT_EQ( lemma15_bound( 7, 6 ), pow2( 140 ) );
  EXPECT_EQ( lemma15_bound( 1, 0 ), 4 );
  EXPECT_EQ( lemma15_bound( 3, 2 ), pow2( 24 ) );
}

TEST( Bounds, TopologyCount )
{
  EXPECT_EQ( topology_count_bound( 3 ), 64 );
  EXPECT_EQ( topology_count_bound( 1 ), 1 );
  EXPECT_EQ( topology_count_bound( 6 ), pow2( 30 ) );
  EXPECT_EQ( topology_count_bound( 0 ), 1 );
}

TEST( Bounds, CircuitsPerTopology )
{
  EXPECT_EQ( circuits_per_topology( 7, 6 ), pow2( 110 ) );
  EXPECT_EQ( circuits_per_topology( 1, 0 ), 4 );
}

TEST( Bounds, NegationNormal )
{
  EXPECT_EQ( negnormal_bound( 7, 6 ), pow3( 6 ) * pow2( 98 ) );
  EXPECT_EQ( negnormal_bound( 7, 0 ), 256 );
}

TEST( Bounds, Corollary )
{
  EXPECT_EQ( corollary_bound( 7, 6 ), pow3( 6 ) * pow2( 128 ) );
  EXPECT_GT( corollary_bound( 7, 6 ), pow2( 137 ) );
  EXPECT_EQ( corollary_bound( 2, 0 ), 8 );
}

TEST( Bounds, Refined )
{
  EXPECT_EQ( refined_bound( 7, 6, 555709 ), 555709 * pow3( 6 ) * pow2( 98 ) );
  EXPECT_LT( refined_bound( 7, 6, 555709 ), pow2( 128 ) );
  EXPECT_EQ( refined_bound( 5, 3, 1 ), negnormal_bound( 5, 3 ) );
  EXPECT_THROW( refined_bound( 5, 3, 0 ), contract_error );
}

TEST( Bounds, RefinedIsMonotoneInClassCount )
{
  for ( unsigned t = 1; t < 50; ++t )
    EXPECT_LE( refined_bound( 4, 3, t ), refined_bound( 4, 3, t + 1 ) );
}

TEST( Bounds, FunctionCount )
{
  EXPECT_EQ( b_n_size( 7 ), pow2( 128 ) );
  EXPECT_EQ( b_n_size( 1 ), 4 );
  EXPECT_EQ( b_n_size( 3 ), 256 );
  EXPECT_EQ( msb( b_n_size( b_n_max_arity ) ), uint64_t{ 1 } << b_n_max_arity );
  EXPECT_THROW( b_n_size( b_n_max_arity + 1u ), capacity_error );
}

TEST( Bounds, Identities )
{
  for ( unsigned n = 1; n <= 10; ++n )
    for ( unsigned k = 1; k <= 10; ++k )
    {
      EXPECT_EQ( topology_count_bound( k ) * circuits_per_topology( n, k ), lemma15_bound( n, k ) );
      EXPECT_EQ( corollary_bound( n, k ), topology_count_bound( k ) * negnormal_bound( n, k ) );
      EXPECT_LE( negnormal_bound( n, k ), circuits_per_topology( n, k ) );
    }
}

TEST( Bounds, ChainForSevenInputs )
{
  EXPECT_LT( refined_bound( 7, 6, 555709 ), b_n_size( 7 ) );
  EXPECT_LT( b_n_size( 7 ), corollary_bound( 7, 6 ) );
}

TEST( Bounds, ReportVerdicts )
{
  EXPECT_TRUE( pigeonhole_report( 7, 6, 555709 ).verdict );
  EXPECT_FALSE( pigeonhole_report( 7, 6, pow2( 30 ) ).verdict );
  EXPECT_FALSE( pigeonhole_report( 1, 0, 1 ).verdict );
}

TEST( Bounds, ReportText )
{
  const auto text = to_string( pigeonhole_report( 7, 6, 555709 ) );
  EXPECT_NE( text.find( "lemma15_bound = 1393796574908163946345982392040522594123776\n" ), std::string::npos );
  EXPECT_NE( text.find( "|B_n| = 340282366920938463463374607431768211456\n" ), std::string::npos );
  EXPECT_NE( text.find( "verdict: M(7) >= 7: true\n" ), std::string::npos );
}
