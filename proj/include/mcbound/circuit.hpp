/*!
  \file circuit.hpp
  \brief XOR-AND circuits: evaluation, topology abstraction and function-preserving rewrites

  Every AND gate reads two XOR sets over the inputs x_1..x_n, the constant T
  and earlier gates. The circuit output is one more XOR set.
*/

#pragma once

#include <mcbound/topology.hpp>
#include <mcbound/truth_table.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace mcbound
{

/*! \brief Element of an XOR set. */
struct term
{
  enum class kind : uint8_t
  {
    input,
    top,
    gate
  };

  kind type{ kind::top };
  /*! \brief 1-based input or gate index, 0 for T. */
  unsigned index{ 0 };

  static constexpr term input( unsigned j ) { return { kind::input, j }; }
  static constexpr term top() { return { kind::top, 0u }; }
  static constexpr term gate( unsigned i ) { return { kind::gate, i }; }

  friend constexpr bool operator==( const term&, const term& ) = default;
};

/*!
  \brief Set of terms whose XOR is an AND-gate input or the circuit output.

  Stored as a linear part (input bits and T) and a gate part. Adding a term
  that is already present removes it, matching XOR cancellation.
*/
struct xor_set
{
  /*! \brief Input x_j in bit j-1. */
  uint32_t inputs{ 0 };
  bool top{ false };
  gate_set gates;

  static xor_set of( std::initializer_list<term> terms );

  bool contains( const term& t ) const noexcept;
  bool empty() const noexcept { return inputs == 0u && !top && gates.empty(); }

  /*! \brief Toggles membership of `t`. */
  void flip( const term& t );

  /*! \brief Input and T part only. */
  xor_set linear() const noexcept { return { inputs, top, {} }; }

  /*! \brief Members in the order inputs, T, gates. */
  std::vector<term> terms() const;

  xor_set operator^( const xor_set& o ) const noexcept { return { inputs ^ o.inputs, top != o.top, gates ^ o.gates }; }

  friend bool operator==( const xor_set&, const xor_set& ) = default;
};

struct and_gate
{
  xor_set left;
  xor_set right;

  and_gate swapped() const { return { right, left }; }

  friend bool operator==( const and_gate&, const and_gate& ) = default;
};

class circuit
{
public:
  static constexpr unsigned max_inputs = truth_table::max_arity;
  static constexpr unsigned max_gates = topology::max_gates;

  /*!
    \brief Validated circuit.

    Throws capacity_error above max_inputs or max_gates, and invalid_structure
    if an input index exceeds n, a gate reads itself or a later gate, or the
    output names a gate beyond k.
  */
  circuit( unsigned num_inputs, std::vector<and_gate> gates, xor_set output );

  unsigned num_inputs() const noexcept { return num_inputs_; }
  unsigned num_gates() const noexcept { return static_cast<unsigned>( gates_.size() ); }

  /*! \brief Gate `i`, 1-based. */
  const and_gate& gate( unsigned i ) const { return gates_.at( i - 1u ); }
  const std::vector<and_gate>& gates() const noexcept { return gates_; }
  const xor_set& output() const noexcept { return output_; }

  friend bool operator==( const circuit&, const circuit& ) = default;

private:
  unsigned num_inputs_;
  std::vector<and_gate> gates_;
  xor_set output_;
};

/*! \brief Output on the assignment encoded by `assignment` (x_1 in bit 0); bits beyond n are ignored. */
bool eval( const circuit& c, uint64_t assignment );

/*! \brief Output on an explicit assignment; throws contract_error unless it has exactly n entries. */
bool eval( const circuit& c, std::span<const bool> assignment );

truth_table compute_truth_table( const circuit& c );

/*! \brief Gate-to-gate wiring only; linear parts and the output are dropped. */
topology topology_of( const circuit& c );

/*! \brief No gate has T in both of its inputs. */
bool is_negation_normal( const circuit& c );

/*!
  \brief Removes T from both inputs of every gate that has it twice.

  Uses (X+T)(Y+T) = XY + X + Y + T: the gate becomes <X, Y> and every later
  set that reads it absorbs X + Y + T. Gates are processed in index order, so
  T pushed into later gates is handled when they are reached.
*/
circuit negation_normalize( const circuit& c );

/*! \brief Relabels gates as `r` does for topologies; gate references in all sets, including the output, follow. */
circuit apply( const circuit& c, const relabeling& r );

/*! \brief Same function, with a well-layered topology obtained by well_layer_normalize_traced. */
circuit well_layer_normalize( const circuit& c );

/*!
  \brief Same function and layering, with a minimal well-layered topology.

  Each violating gate is rewritten with P Q = P (P + Q + T) so that its two
  gate parts are not nested and their intersection is the least of the three
  disjoint parts. Throws contract_error unless topology_of(c) is well-layered.
*/
circuit minimalize_circuit( const circuit& c );

} // namespace mcbound
