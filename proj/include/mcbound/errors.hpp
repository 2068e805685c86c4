/*!
  \file errors.hpp
  \brief Exception types shared by all mcbound modules
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcbound
{

/*! \brief A size or resource limit (arity, gate count, enumeration budget) was exceeded. */
class capacity_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief An operation was called outside of its documented domain. */
class contract_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/*! \brief A value violates the structural invariants of its type. */
class invalid_structure : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Malformed text input; carries a 1-based line and column. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::size_t column, const std::string& message )
      : std::runtime_error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace mcbound
