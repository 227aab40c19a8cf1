#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace szf {

/// Entry point of the `szf` tool. `args` excludes the program name. Returns 0 on success,
/// 1 when a computation or input error occurs and 2 on a usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szf
