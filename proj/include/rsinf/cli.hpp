#pragma once

#include <ostream>
#include <span>
#include <string>

namespace rsinf::cli {

// Runs one command line (without the program name). Results go to `out`;
// usage text goes to `err`. Returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rsinf::cli
