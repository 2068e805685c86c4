/*!
  \file cli.hpp
  \brief Command-line front end

  Commands: generate, table2, prove, verify, eval. Results go to `out`,
  diagnostics to `err`. Exit status 0 means the command's success condition
  holds, 1 a failed check (mismatch, false verdict, failed suite), 2 a usage,
  input or capacity error.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcbound
{

/*! \brief Class counts of minimal well-layered topologies as published for k = 1..6. */
inline const std::vector<unsigned long long> published_class_counts{ 1, 2, 8, 88, 3564, 555709 };

/*! \brief Runs one command; `args` excludes the program name. */
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace mcbound
