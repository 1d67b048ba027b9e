#pragma once

#include <iosfwd>

namespace dspec::cli {

// Exit codes: 0 success, 1 a reproduction check failed (`paper`), 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dspec::cli
