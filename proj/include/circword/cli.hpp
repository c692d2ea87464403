#pragma once

// Command-line front end. run() takes the argument list (without the
// program name) and writes to the given streams, so tests can drive
// the full CLI surface in-process.
//
// Exit codes: 0 success / no violations, 1 verify violations found,
// 2 usage or parse error.

#include <iosfwd>
#include <string>
#include <vector>

namespace circword::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace circword::cli
