#pragma once

#include <iosfwd>

namespace heckeforge::cli {

// Exit codes: 0 success, 1 invariant or verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heckeforge::cli
