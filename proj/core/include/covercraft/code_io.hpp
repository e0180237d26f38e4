#pragma once

// Code text format: one word per line as a '0'/'1' string, all lines of
// equal length.  Blank lines and lines starting with '#' are ignored.
// Duplicate lines are rejected with the offending line number.
//
// An empty code cannot carry its length in data lines, so the writer
// always emits a "# n=<length>" comment first; the reader honours that
// directive when (and only when) no data lines follow, and checks it
// for consistency otherwise.

#include <iosfwd>
#include <string>

#include "covercraft/hypercube.hpp"

namespace covercraft {

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

}  // namespace covercraft
