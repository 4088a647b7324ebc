#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrcomp {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitNonconformant = 4,
};

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qrcomp
