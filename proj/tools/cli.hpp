#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pacert {

/// Exit codes: 0 success, 2 invalid input, 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pacert
