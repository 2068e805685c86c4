/*!
  \file bounds.hpp
  \brief Exact counting bounds on the functions computable with k AND gates
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mcbound
{

using big_count = boost::multiprecision::cpp_int;

/*! \brief 2^e. */
big_count power_of_two( unsigned e );

/*! \brief Functions of n inputs computable with k gates, over all topologies: 2^(k^2 + 2k + 2kn + n + 1). */
big_count lemma15_bound( unsigned n, unsigned k );

/*! \brief Topologies with k gates: 2^(k^2 - k). */
big_count topology_count_bound( unsigned k );

/*! \brief Circuits per topology: (2^(n+1))^(2k) * 2^(k+n+1). */
big_count circuits_per_topology( unsigned n, unsigned k );

/*! \brief Negation-normal circuits per topology: (3 * 2^(2n))^k * 2^(n+k+1). */
big_count negnormal_bound( unsigned n, unsigned k );

/*! \brief 3^k * 2^(k^2 + 2kn + n + 1). */
big_count corollary_bound( unsigned n, unsigned k );

/*! \brief 3^k * 2^(2kn + n + k + 1) * t for t topology classes; throws contract_error for t = 0. */
big_count refined_bound( unsigned n, unsigned k, const big_count& t );

/*! \brief Largest n for which b_n_size materializes 2^(2^n) (an 8 MiB integer). */
constexpr unsigned b_n_max_arity = 26u;

/*! \brief |B_n| = 2^(2^n); throws capacity_error above b_n_max_arity. */
big_count b_n_size( unsigned n );

struct bound_report
{
  unsigned n{ 0 };
  unsigned k{ 0 };
  big_count topology_classes;
  big_count lemma15;
  big_count topology_count;
  big_count circuits_per_topology;
  big_count negnormal;
  big_count corollary;
  big_count refined;
  big_count b_n;
  /*! \brief refined < b_n, so some function of n inputs needs more than k gates. */
  bool verdict{ false };
};

bound_report pigeonhole_report( unsigned n, unsigned k, const big_count& t );

/*! \brief One `name = value` line per bound, then `|B_n| = ...` and the verdict line. */
std::string to_string( const bound_report& r );

} // namespace mcbound
