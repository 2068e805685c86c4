/*!
  \file topology.hpp
  \brief Circuit topologies: AND gates wired only to earlier AND gates

  Gates are numbered from 1. A gate_set stores gate i in bit i-1, and the
  integer value of that bit vector is the fixed total order used by the
  minimality conditions.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mcbound
{

class gate_set
{
public:
  static constexpr unsigned capacity = 32u;

  constexpr gate_set() = default;
  constexpr explicit gate_set( uint32_t bits ) : bits_( bits ) {}

  /*! \brief Set from 1-based gate indices. */
  static gate_set of( std::initializer_list<unsigned> gates );

  /*! \brief The set {1, ..., count}. */
  static constexpr gate_set first( unsigned count )
  {
    return gate_set( count >= 32u ? ~uint32_t{ 0 } : ( uint32_t{ 1 } << count ) - 1u );
  }

  constexpr uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0u; }
  unsigned size() const noexcept;

  constexpr bool contains( unsigned gate ) const noexcept { return ( bits_ >> ( gate - 1u ) ) & 1u; }
  constexpr bool intersects( gate_set other ) const noexcept { return ( bits_ & other.bits_ ) != 0u; }
  constexpr bool is_subset_of( gate_set other ) const noexcept { return ( bits_ & ~other.bits_ ) == 0u; }

  /*! \brief Largest member, 0 for the empty set. */
  unsigned max_gate() const noexcept;

  /*! \brief Members in increasing order (1-based). */
  std::vector<unsigned> members() const;

  /*! \brief Image under a relabeling; `new_index[g]` is the new 1-based index of gate g (entry 0 unused). */
  gate_set mapped( std::span<const unsigned> new_index ) const;

  constexpr gate_set operator|( gate_set o ) const noexcept { return gate_set( bits_ | o.bits_ ); }
  constexpr gate_set operator&( gate_set o ) const noexcept { return gate_set( bits_ & o.bits_ ); }
  constexpr gate_set operator^( gate_set o ) const noexcept { return gate_set( bits_ ^ o.bits_ ); }
  /*! \brief Set difference. */
  constexpr gate_set operator-( gate_set o ) const noexcept { return gate_set( bits_ & ~o.bits_ ); }

  friend constexpr bool operator==( gate_set, gate_set ) = default;
  friend constexpr auto operator<=>( gate_set a, gate_set b ) { return a.bits_ <=> b.bits_; }

private:
  uint32_t bits_{ 0 };
};

struct gate_inputs
{
  gate_set left;
  gate_set right;

  gate_inputs swapped() const { return { right, left }; }

  friend constexpr bool operator==( const gate_inputs&, const gate_inputs& ) = default;
  friend constexpr auto operator<=>( const gate_inputs&, const gate_inputs& ) = default;
};

class topology
{
public:
  static constexpr unsigned max_gates = gate_set::capacity;

  topology() = default;

  /*! \brief Throws invalid_structure unless every gate reads only strictly earlier gates. */
  explicit topology( std::vector<gate_inputs> gates );

  unsigned num_gates() const noexcept { return static_cast<unsigned>( gates_.size() ); }

  /*! \brief Gate `i`, 1-based. */
  const gate_inputs& gate( unsigned i ) const { return gates_.at( i - 1u ); }

  const std::vector<gate_inputs>& gates() const noexcept { return gates_; }

  /*! \brief Copy with `extra` appended as new gates; validated like the constructor. */
  topology extended( std::span<const gate_inputs> extra ) const;

  friend bool operator==( const topology&, const topology& ) = default;
  friend auto operator<=>( const topology&, const topology& ) = default;

private:
  std::vector<gate_inputs> gates_;
};

/*! \brief Ordered partition of the gates into layers S_1..S_l. */
class layer_partition
{
public:
  layer_partition() = default;
  explicit layer_partition( std::vector<gate_set> layers );

  const std::vector<gate_set>& layers() const noexcept { return layers_; }
  std::size_t num_layers() const noexcept { return layers_.size(); }
  gate_set layer( std::size_t index ) const { return layers_.at( index ); }

  /*! \brief 0-based layer index of gate `g` (1-based). */
  std::size_t layer_of( unsigned g ) const;

  friend bool operator==( const layer_partition&, const layer_partition& ) = default;

private:
  std::vector<gate_set> layers_;
};

/*!
  \brief Gate relabeling with optional per-gate input swap.

  Position p (0-based) of the result holds original gate `source[p]`
  (1-based); if `swapped[p]` its left and right inputs are exchanged.
*/
struct relabeling
{
  std::vector<unsigned> source;
  std::vector<bool> swapped;

  static relabeling identity( unsigned num_gates );

  /*! \brief Inverse table: entry g (1-based) is the new index of original gate g. */
  std::vector<unsigned> new_index() const;

  friend bool operator==( const relabeling&, const relabeling& ) = default;
};

/*! \brief Applies a relabeling; throws invalid_structure if the result is not a valid topology. */
topology apply( const topology& t, const relabeling& r );

/*! \brief Maximal layering by a single scan in gate order. */
layer_partition layering( const topology& t );

/*! \brief Every gate beyond the first layer has a left input in the layer right before its own. */
bool is_well_layered( const topology& t );
bool is_well_layered( const topology& t, const layer_partition& layers );

struct normalized_topology
{
  topology result;
  relabeling mapping;
};

/*! \brief Equivalent well-layered topology, together with the relabeling that produces it. */
normalized_topology well_layer_normalize_traced( const topology& t );
topology well_layer_normalize( const topology& t );

bool is_minimal_gate( const gate_inputs& g );
bool is_minimal( const topology& t );

} // namespace mcbound
