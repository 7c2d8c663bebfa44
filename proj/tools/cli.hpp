#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hanoi::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

// Runs one command line (args excludes the program name). Standard input is
// read when a file argument is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace hanoi::cli
