#pragma once

#include <iosfwd>

namespace vafw {

/// Command-line entry point. Exit 0 on success, 1 on a domain error
/// (diagnostic on `err`), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vafw
