// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.
#pragma once

#include <ostream>

namespace unimod {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unimod
