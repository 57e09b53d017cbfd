#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar {

/// Entry point behind the planar-perfect binary. Exit codes: 0 for a Perfect
/// verdict (and for every successful non-check command), 1 for NotPerfect,
/// 2 for invalid input or usage.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planar
