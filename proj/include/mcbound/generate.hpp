/*!
  \file generate.hpp
  \brief Layer-by-layer generation of minimal well-layered topologies up to equivalence
*/

#pragma once

#include <mcbound/topology.hpp>

#include <cstddef>
#include <functional>
#include <vector>

namespace mcbound
{

/*! \brief Representatives of the equivalence classes of minimal well-layered topologies with k gates. */
struct topology_set
{
  unsigned k{ 0 };
  std::vector<topology> members;

  std::size_t size() const noexcept { return members.size(); }

  friend bool operator==( const topology_set&, const topology_set& ) = default;
};

struct generate_progress
{
  /*! \brief Gate count of the partial topologies just extended. */
  unsigned gates{ 0 };
  std::size_t parents{ 0 };
  std::size_t candidates{ 0 };
  /*! \brief Classes found so far, indexed by gate count (entry 0 unused). */
  std::vector<std::size_t> classes;
};

struct generate_params
{
  /*! \brief Worker threads; the result does not depend on it. */
  unsigned workers{ 1 };

  /*!
    \brief Keep a single member per class of partial topologies as well.

    Cheaper, but incomplete: a class can be unreachable from the member that
    was kept (84 instead of 85 classes at k = 4).
  */
  bool prune_partial{ false };

  std::function<void( const generate_progress& )> on_progress;
};

/*! \brief Largest gate count accepted by generate. */
constexpr unsigned generate_max_gates = 7u;

/*!
  \brief Generates one representative per class of minimal well-layered topologies.

  Topologies are grown one layer at a time from a first layer of unconnected
  gates. Every gate of a new layer reads the current last layer on its left
  input and satisfies the minimality conditions. The final layer is emitted
  in non-decreasing (left, right) order; earlier layers in every order.
  Completed topologies are merged by canonical form, and each class keeps its
  least generated member. Members are sorted by canonical form, so the result
  depends on `k` (and `prune_partial`) only.

  Returns an empty set for k = 0 and throws capacity_error above
  generate_max_gates.
*/
topology_set generate( unsigned k, const generate_params& params = {} );

/*! \brief Results of generate(1..max_k) from a single run; entry g-1 holds the g-gate classes. */
std::vector<topology_set> generate_up_to( unsigned max_k, const generate_params& params = {} );

/*! \brief All admissible gates for a new layer on top of `t`, in increasing (left, right) order. */
std::vector<gate_inputs> admissible_gates( const topology& t );

} // namespace mcbound
