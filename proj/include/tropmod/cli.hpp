#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropmod::cli {

/// Runs one command line (without the program name). Writes one JSON
/// document to out. Returns 0 on success, 1 for domain errors, 2 for usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

/// Names of all subcommands, in help order.
std::vector<std::string> command_names();

}  // namespace tropmod::cli
