/*!
  \file oracle.hpp
  \brief Brute-force baselines for validating the topology engine

  Nothing here uses the engine's layering, equivalence or canonicalization
  code; the definitions are implemented again directly.
*/

#pragma once

#include <mcbound/topology.hpp>
#include <mcbound/truth_table.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mcbound
{

/*! \brief Largest k accepted by enumerate_raw_topologies (2^20 topologies). */
constexpr unsigned raw_topology_max_gates = 5u;

/*! \brief Calls `visit` once for each of the 2^(k^2-k) topologies with k gates; throws capacity_error above the cap. */
void enumerate_raw_topologies( unsigned k, const std::function<void( const topology& )>& visit );
std::vector<topology> raw_topologies( unsigned k );

/*! \brief Well-layered test by a direct layer scan. */
bool oracle_well_layered( const topology& t );

/*! \brief Minimality test written out from the definition. */
bool oracle_minimal( const topology& t );

/*! \brief Raw topologies with k gates that pass oracle_well_layered and oracle_minimal. */
std::vector<topology> well_layered_minimal_topologies( unsigned k );

/*!
  \brief Orbit key under all k! gate permutations with per-gate input swaps.

  Two topologies are equivalent iff their keys are equal.
*/
std::vector<uint64_t> orbit_key( const topology& t );

bool brute_equivalent( const topology& a, const topology& b );

/*! \brief Partition of `ts` into equivalence classes, as index lists in order of first appearance. */
std::vector<std::vector<std::size_t>> brute_equiv_classes( std::span<const topology> ts );

/*! \brief Set of n-ary functions for n <= 4, as a bitset over all 2^(2^n) truth tables. */
class function_set
{
public:
  static constexpr unsigned max_arity = 4u;

  explicit function_set( unsigned num_vars );

  unsigned num_vars() const noexcept { return num_vars_; }

  /*! \brief Function given by the low 2^n bits of `table`. */
  void insert( uint64_t table );
  bool contains( uint64_t table ) const;
  bool contains( const truth_table& tt ) const;

  std::size_t size() const;

  /*! \brief 2^(2^n). */
  uint64_t universe_size() const noexcept { return uint64_t{ 1 } << ( uint64_t{ 1 } << num_vars_ ); }

  bool is_subset_of( const function_set& other ) const;

  friend bool operator==( const function_set&, const function_set& ) = default;

private:
  unsigned num_vars_;
  std::vector<uint64_t> bits_;
};

constexpr uint64_t default_circuit_budget = uint64_t{ 1 } << 28u;

/*!
  \brief Number of circuits exhaustive_function_set visits, saturated at UINT64_MAX.

  Per topology: (c * 2^(2n))^k * 2^(n+k+1), with c = 3 choices for T when
  only negation-normal circuits are built and c = 4 otherwise.
*/
uint64_t exhaustive_circuit_count( unsigned n, unsigned k, std::size_t num_topologies, bool negation_normal_only );

/*!
  \brief Every function computed by a circuit on one of `topologies`.

  Each gate input takes any subset of x_1..x_n, T is added to neither, one
  or both inputs (never both if `negation_normal_only`), and the output is
  any XOR of inputs, T and gates. Throws capacity_error if the circuit count
  exceeds `budget`, contract_error if n > 4 or a topology does not have k gates.
*/
function_set exhaustive_function_set( unsigned n, unsigned k, std::span<const topology> topologies,
                                      bool negation_normal_only, uint64_t budget = default_circuit_budget );

/*!
  \brief Unrestricted circuits on all raw topologies and negation-normal
  circuits on the generated class representatives compute the same functions.
*/
bool verify_completeness_small( unsigned n, unsigned k, uint64_t budget = default_circuit_budget );

} // namespace mcbound
