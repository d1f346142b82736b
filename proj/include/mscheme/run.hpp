#pragma once

#include <string>

#include "mscheme/config.hpp"

namespace mscheme {

/// Executes a validated RunSpec: runs the command, writes the CSV output and
/// prints a one-line summary to stdout. Module errors propagate as exceptions.
void execute(const RunSpec& spec);

/// Maps an exception to the CLI's documented exit code.
int exit_code_for(const std::exception& ex);

/// Exit-code table for --help and README.
std::string exit_code_table();

}  // namespace mscheme
