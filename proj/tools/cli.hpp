#ifndef FFACT_TOOLS_CLI_HPP_
#define FFACT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ffact::cli {

  //! Runs the command line `args` (without the program name). JSON results
  //! go to out, diagnostics to err.
  //!
  //! Returns 0 on success, 1 if a checked property fails and 2 for
  //! malformed input.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ffact::cli

#endif  // FFACT_TOOLS_CLI_HPP_
