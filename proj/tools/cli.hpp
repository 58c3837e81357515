#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace premon::cli {

  // Runs the premon command line on args (without the program name).
  // Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace premon::cli
