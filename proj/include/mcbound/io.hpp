/*!
  \file io.hpp
  \brief Text formats for truth tables, circuits, topologies and topology sets

  \code
  tt n=2 0001

  circuit n=2 k=1
  gate 1: L={x1} R={x2,T}
  out: {g1}

  topology k=2
  gate 1: L={} R={}
  gate 2: L={1} R={}

  topologyset k=1 count=1
  topology k=1
  gate 1: L={} R={}
  \endcode

  Topologies of a set are separated by blank lines. Parsers throw parse_error
  with the 1-based line and column of the first offending character.
*/

#pragma once

#include <mcbound/circuit.hpp>
#include <mcbound/generate.hpp>
#include <mcbound/topology.hpp>
#include <mcbound/truth_table.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace mcbound
{

std::string to_string( const truth_table& tt );
std::string to_string( const circuit& c );
std::string to_string( const topology& t );
std::string to_string( const topology_set& s );

truth_table parse_truth_table( std::string_view text );
circuit parse_circuit( std::string_view text );
topology parse_topology( std::string_view text );
topology_set parse_topology_set( std::string_view text );

/*! \brief Whole file as a string; throws std::runtime_error if it cannot be read. */
std::string read_file( const std::filesystem::path& path );

/*! \brief Replaces the file contents; throws std::runtime_error on failure. */
void write_file( const std::filesystem::path& path, std::string_view contents );

} // namespace mcbound
