#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnpg::cli {

enum ExitCode : int {
  kSolved = 0,
  kInputError = 1,
  kNoPsne = 2,
  kNotApplicable = 3,
};

// Runs one command. `args` excludes the program name. Input named "-" is
// read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bnpg::cli
