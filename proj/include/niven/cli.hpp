#pragma once

// Command-line front end. `run` parses arguments (without the program
// name), dispatches, and writes JSON or text to `out`, diagnostics to `err`.

#include <ostream>
#include <string>
#include <vector>

#include "niven/cyclotomic.hpp"

namespace niven::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kCapExceeded = 4,
  kInternal = 5,
};

inline constexpr const char* kSchemaVersion = "niven-output/1";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        PsiTable& table = PsiTable::shared());

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Cross-module identities up to index max_n, reading Psi values from `table`.
std::vector<VerifyCheck> verify(unsigned max_n, PsiTable& table = PsiTable::shared());

}  // namespace niven::cli
