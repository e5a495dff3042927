#pragma once

#include <iosfwd>

namespace eqidx::cli {

/// Runs the command line; returns the process exit code (0 success, 1 domain
/// or input error, 2 usage error).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eqidx::cli
