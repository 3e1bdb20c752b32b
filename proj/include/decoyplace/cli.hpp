#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decoyplace::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kMissingInput = 2,
  kParseError = 3,
  kEmptyCorpus = 4,
  kNoTraces = 5,
};

/// Runs one command (`infer`, `place`, `routers`, `analyze`, `synth`,
/// `report`). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decoyplace::cli
