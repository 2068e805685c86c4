/*!
  \file random_circuit.hpp
  \brief Seeded random circuits for property checks
*/

#pragma once

#include <mcbound/circuit.hpp>

#include <random>

namespace mcbound
{

/*!
  \brief Uniform choice of n in 1..max_inputs and k in 0..max_gates, then
  every gate input and the output drawn as uniform subsets of the available
  terms (inputs, T, earlier gates).
*/
circuit random_circuit( std::mt19937_64& rng, unsigned max_inputs, unsigned max_gates );

} // namespace mcbound
