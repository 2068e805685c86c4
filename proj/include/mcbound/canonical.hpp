/*!
  \file canonical.hpp
  \brief Topology equivalence and canonical representatives

  Two topologies are equivalent when a relabeling of the gates, together with
  an optional swap of each gate's inputs, maps one onto the other.
*/

#pragma once

#include <mcbound/topology.hpp>

namespace mcbound
{

/*!
  \brief Decides equivalence by a backtracking search over gate bijections.

  Works for arbitrary topologies (not only well-layered ones). Topologies with
  different gate counts are never equivalent.
*/
bool equivalent( const topology& a, const topology& b );

/*!
  \brief Class representative of a well-layered topology.

  The lexicographically least gate sequence over all relabelings that keep
  every gate in its layer and all input swaps that keep the topology
  well-layered. Gates compare by (left, right) under the bit-vector order.
  Throws contract_error for a topology that is not well-layered.
*/
topology canonical_form( const topology& t );

} // namespace mcbound
