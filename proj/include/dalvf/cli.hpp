#pragma once

#include <iosfwd>

namespace dalvf::cli {

/// Parse and run one command-line invocation, writing results to `out` and
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error (e.g. a
/// violated Assumption 1), 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dalvf::cli
