#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfsim {

/// ssgraph entry point. args[0] is the program name. Returns 0 when every
/// check passed or was inapplicable, 1 when a check failed, 2 on input,
/// usage or cap errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace selfsim
