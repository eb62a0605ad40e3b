#pragma once

#include <iosfwd>

namespace heightlab::cli {

/// Full command-line front end. Exit status: 0 success or verified,
/// 1 verification mismatch, 2 usage error, 3 computational error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heightlab::cli
