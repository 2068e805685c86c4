#include <mcbound/truth_table.hpp>

#include <mcbound/errors.hpp>

#include <bit>

namespace mcbound
{

truth_table::truth_table( unsigned num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars > max_arity )
  {
    throw capacity_error( "truth table arity " + std::to_string( num_vars ) + " exceeds the supported maximum of " +
                          std::to_string( max_arity ) );
  }
  words_.assign( num_vars <= 6u ? 1u : ( std::size_t{ 1 } << ( num_vars - 6u ) ), 0u );
}

truth_table truth_table::from_word( unsigned num_vars, uint64_t bits )
{
  if ( num_vars > 6u )
    throw contract_error( "from_word requires at most 6 variables" );
  truth_table tt( num_vars );
  tt.words_[0] = bits;
  tt.mask_tail();
  return tt;
}

truth_table truth_table::constant( unsigned num_vars, bool value )
{
  truth_table tt( num_vars );
  if ( value )
  {
    for ( auto& w : tt.words_ )
      w = ~uint64_t{ 0 };
    tt.mask_tail();
  }
  return tt;
}

truth_table truth_table::nth_var( unsigned num_vars, unsigned var )
{
  if ( var == 0u || var > num_vars )
    throw contract_error( "variable index out of range" );
  truth_table tt( num_vars );
  for ( uint64_t v = 0; v < tt.num_bits(); ++v )
  {
    if ( ( v >> ( var - 1u ) ) & 1u )
      tt.set_bit( v, true );
  }
  return tt;
}

bool truth_table::get_bit( uint64_t index ) const
{
  return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u;
}

void truth_table::set_bit( uint64_t index, bool value )
{
  const uint64_t mask = uint64_t{ 1 } << ( index & 63u );
  if ( value )
    words_[index >> 6u] |= mask;
  else
    words_[index >> 6u] &= ~mask;
}

std::size_t truth_table::count_ones() const
{
  std::size_t total = 0;
  for ( auto w : words_ )
    total += static_cast<std::size_t>( std::popcount( w ) );
  return total;
}

std::string truth_table::to_binary() const
{
  std::string out;
  out.reserve( num_bits() );
  for ( uint64_t v = 0; v < num_bits(); ++v )
    out.push_back( get_bit( v ) ? '1' : '0' );
  return out;
}

truth_table& truth_table::operator^=( const truth_table& other )
{
  if ( other.num_vars_ != num_vars_ )
    throw contract_error( "arity mismatch in truth table XOR" );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] ^= other.words_[i];
  return *this;
}

truth_table& truth_table::operator&=( const truth_table& other )
{
  if ( other.num_vars_ != num_vars_ )
    throw contract_error( "arity mismatch in truth table AND" );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    words_[i] &= other.words_[i];
  return *this;
}

void truth_table::mask_tail()
{
  if ( num_vars_ < 6u )
    words_[0] &= ( uint64_t{ 1 } << num_bits() ) - 1u;
}

truth_table operator^( truth_table a, const truth_table& b )
{
  a ^= b;
  return a;
}

truth_table operator&( truth_table a, const truth_table& b )
{
  a &= b;
  return a;
}

truth_table threshold_function( unsigned num_vars, unsigned threshold )
{
  truth_table tt( num_vars );
  for ( uint64_t v = 0; v < tt.num_bits(); ++v )
  {
    if ( static_cast<unsigned>( std::popcount( v ) ) >= threshold )
      tt.set_bit( v, true );
  }
  return tt;
}

} // namespace mcbound
