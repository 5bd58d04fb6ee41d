#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehn::cli {

/// Dispatch a command line (without argv[0]). Returns the process exit code;
/// failures emit a machine-readable error object on err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dehn::cli
