#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contactkit {

// Entry point shared by the binary and in-process tests. Returns the process
// exit code: 0 affirmative, 1 negative verdict, 2 input/domain error,
// 3 precision exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace contactkit
