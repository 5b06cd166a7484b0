#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqf {

/// Command dispatch for the tqf tool. Exit codes: 0 success, 1 negative
/// mathematical answer (not represented / verification failed), 2 usage
/// error, 3 internal or search failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqf
