#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace designiso {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 = success / positive answer, 1 = negative answer
/// (invalid design, non-isomorphic), 2 = usage or precondition error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace designiso
