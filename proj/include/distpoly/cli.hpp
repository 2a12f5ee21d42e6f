#pragma once

#include <iosfwd>

namespace distpoly {

/// Exit codes: 0 success, 1 a mathematical check failed on a tree,
/// 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distpoly
