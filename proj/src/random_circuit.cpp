#include <mcbound/random_circuit.hpp>

namespace mcbound
{

circuit random_circuit( std::mt19937_64& rng, unsigned max_inputs, unsigned max_gates )
{
  const auto n = std::uniform_int_distribution<unsigned>( 1u, max_inputs )( rng );
  const auto k = std::uniform_int_distribution<unsigned>( 0u, max_gates )( rng );
  auto subset = [&]( unsigned width ) {
    return width == 0u ? uint32_t{ 0 } : static_cast<uint32_t>( rng() & ( ( uint64_t{ 1 } << width ) - 1u ) );
  };
  auto draw = [&]( unsigned gates_available ) {
    xor_set s;
    s.inputs = subset( n );
    s.top = ( rng() & 1u ) != 0u;
    s.gates = gate_set( subset( gates_available ) );
    return s;
  };
  std::vector<and_gate> gates;
  for ( unsigned i = 1; i <= k; ++i )
    gates.push_back( { draw( i - 1u ), draw( i - 1u ) } );
  return circuit( n, std::move( gates ), draw( k ) );
}

} // namespace mcbound
