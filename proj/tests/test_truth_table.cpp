#include <mcbound/errors.hpp>
#include <mcbound/truth_table.hpp>

#include <gtest/gtest.h>

#include <bit>

using namespace mcbound;

TEST( TruthTable, LengthIsTwoToTheArity )
{
  for ( unsigned n = 0; n <= truth_table::max_arity; ++n )
  {
    truth_table tt( n );
    EXPECT_EQ( tt.num_bits(), uint64_t{ 1 } << n );
    EXPECT_EQ( tt.to_binary().size(), uint64_t{ 1 } << n );
  }
}

TEST( TruthTable, ArityAboveCapIsACapacityError )
{
  EXPECT_THROW( truth_table( 17u ), capacity_error );
}

TEST( TruthTable, FirstVariableIsLeastSignificant )
{
  EXPECT_EQ( truth_table::nth_var( 2, 1 ).to_binary(), "0101" );
  EXPECT_EQ( truth_table::nth_var( 2, 2 ).to_binary(), "0011" );
  EXPECT_EQ( ( truth_table::nth_var( 2, 1 ) & truth_table::nth_var( 2, 2 ) ).to_binary(), "0001" );
}

TEST( TruthTable, WideTablesAcrossWords )
{
  const auto x7 = truth_table::nth_var( 8, 7 );
  for ( uint64_t v = 0; v < x7.num_bits(); ++v )
    EXPECT_EQ( x7.get_bit( v ), ( ( v >> 6u ) & 1u ) != 0u );
  EXPECT_EQ( x7.count_ones(), 128u );
}

TEST( TruthTable, ConstantsAndXor )
{
  const auto ones = truth_table::constant( 3, true );
  EXPECT_EQ( ones.to_binary(), "11111111" );
  EXPECT_EQ( ( ones ^ ones ), truth_table( 3 ) );
  EXPECT_EQ( truth_table::constant( 0, true ).to_binary(), "1" );
}

TEST( TruthTable, ThresholdMatchesPopcount )
{
  const auto tt = threshold_function( 5, 3 );
  for ( uint64_t v = 0; v < 32; ++v )
    EXPECT_EQ( tt.get_bit( v ), std::popcount( v ) >= 3 );
}
