#pragma once

#include <iosfwd>

namespace nichols {

// Exit codes: 0 all pass, 1 unexpected failure, 2 usage or parse error, 3 budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nichols
