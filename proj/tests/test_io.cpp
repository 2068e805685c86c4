#include "fixtures.hpp"

#include <mcbound/errors.hpp>
#include <mcbound/generate.hpp>
#include <mcbound/io.hpp>
#include <mcbound/random_circuit.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace mcbound;
using namespace mcbound::test;

namespace
{

void expect_parse_error( auto&& parse, std::string_view text, std::size_t line, std::size_t column )
{
  try
  {
    parse( text );
    ADD_FAILURE() << "no parse error for:\n" << text;
  }
  catch ( const parse_error& e )
  {
    EXPECT_EQ( e.line(), line ) << e.what();
    EXPECT_EQ( e.column(), column ) << e.what();
  }
}

} // namespace

TEST( TextIo, ParsesMajorityCircuit )
{
  EXPECT_EQ( parse_circuit( majority4_text ), majority4() );
  EXPECT_EQ( to_string( majority4() ), majority4_text );
}

TEST( TextIo, CircuitRoundTrip )
{
  std::mt19937_64 rng( 3 );
  for ( int i = 0; i < 500; ++i )
  {
    const auto c = random_circuit( rng, 8u, 6u );
    ASSERT_EQ( parse_circuit( to_string( c ) ), c );
  }
}

TEST( TextIo, TruthTable )
{
  const auto tt = parse_truth_table( "tt n=2 0001\n" );
  EXPECT_EQ( tt.to_binary(), "0001" );
  EXPECT_EQ( to_string( tt ), "tt n=2 0001" );
  expect_parse_error( parse_truth_table, "tt n=2 001", 1, 11 );
  expect_parse_error( parse_truth_table, "tt n=2 00012", 1, 12 );
}

TEST( TextIo, CircuitErrorsCarryPositions )
{
  expect_parse_error( parse_circuit, "circuit n=2 k=1\ngate 1: L={g1} R={}\nout: {}\n", 2, 12 );
  expect_parse_error( parse_circuit, "circuit n=2 k=1\ngate 1: L={x3} R={}\nout: {}\n", 2, 12 );
  expect_parse_error( parse_circuit, "circuit n=2 k=1\ngate 2: L={} R={}\nout: {}\n", 2, 6 );
  expect_parse_error( parse_circuit, "circuit n=2 k=1\ngate 1: L={x1,x1} R={}\nout: {}\n", 2, 15 );
  expect_parse_error( parse_circuit, "circuit n=2 k=1\ngate 1: L={} R={}\n", 3, 1 );
  expect_parse_error( parse_circuit, "circuit n=2 k=0\nout: {g1}\n", 2, 7 );
  expect_parse_error( parse_circuit, "circuit n=2 k=0\nout: {y}\n", 2, 7 );
  expect_parse_error( parse_circuit, "circuit n=99 k=0\nout: {}\n", 1, 11 );
  expect_parse_error( parse_circuit, "circuit n=1 k=0\nout: {}\nextra\n", 3, 1 );
}

TEST( TextIo, TopologyRoundTrip )
{
  const auto t = majority4_topology();
  const auto text = to_string( t );
  EXPECT_EQ( text, "topology k=4\ngate 1: L={} R={}\ngate 2: L={} R={}\ngate 3: L={} R={2}\ngate 4: L={1} R={2}\n" );
  EXPECT_EQ( parse_topology( text ), t );
  expect_parse_error( parse_topology, "topology k=2\ngate 1: L={} R={}\ngate 2: L={2} R={}\n", 3, 12 );
}

TEST( TextIo, TopologySetRoundTrip )
{
  const auto set = generate( 4 );
  const auto text = to_string( set );
  EXPECT_EQ( text.substr( 0, text.find( '\n' ) ), "topologyset k=4 count=" + std::to_string( set.size() ) );
  EXPECT_EQ( parse_topology_set( text ), set );
  expect_parse_error( parse_topology_set, "topologyset k=2 count=1\ntopology k=1\ngate 1: L={} R={}\n", 2, 12 );
  expect_parse_error( parse_topology_set, "topologyset k=1 count=2\ntopology k=1\ngate 1: L={} R={}\n", 4, 1 );
}
