/*!
  \file truth_table.hpp
  \brief Dense truth tables of n-ary Boolean functions

  Bit v of a table is f(v), where the assignment x_1..x_n is read from v with
  x_1 as the least-significant bit.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcbound
{

class truth_table
{
public:
  static constexpr unsigned max_arity = 16u;

  /*! \brief All-zero table on `num_vars` inputs; throws capacity_error above max_arity. */
  explicit truth_table( unsigned num_vars );

  /*! \brief Table from the low 2^n bits of `bits` (n <= 6). */
  static truth_table from_word( unsigned num_vars, uint64_t bits );

  static truth_table constant( unsigned num_vars, bool value );

  /*! \brief Table of the projection x_var (1-based). */
  static truth_table nth_var( unsigned num_vars, unsigned var );

  unsigned num_vars() const noexcept { return num_vars_; }
  uint64_t num_bits() const noexcept { return uint64_t{ 1 } << num_vars_; }

  bool get_bit( uint64_t index ) const;
  void set_bit( uint64_t index, bool value );

  std::size_t count_ones() const;

  const std::vector<uint64_t>& words() const noexcept { return words_; }

  /*! \brief Bits 0..2^n-1 as '0'/'1' characters, index 0 first. */
  std::string to_binary() const;

  truth_table& operator^=( const truth_table& other );
  truth_table& operator&=( const truth_table& other );

  friend bool operator==( const truth_table&, const truth_table& ) = default;
  friend auto operator<=>( const truth_table& a, const truth_table& b )
  {
    if ( a.num_vars_ != b.num_vars_ )
      return a.num_vars_ <=> b.num_vars_;
    return a.words_ <=> b.words_;
  }

private:
  void mask_tail();

  unsigned num_vars_;
  std::vector<uint64_t> words_;
};

truth_table operator^( truth_table a, const truth_table& b );
truth_table operator&( truth_table a, const truth_table& b );

/*! \brief Table with bit v set iff at least `threshold` of the n input bits of v are 1. */
truth_table threshold_function( unsigned num_vars, unsigned threshold );

} // namespace mcbound
