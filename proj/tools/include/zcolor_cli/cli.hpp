#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zcolor/json_io.hpp"

namespace zcolor::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Writes exactly one JSON
/// document (or help text) to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

struct CorpusReport {
  Json json;
  bool ok = true;
};

/// Checks every .pd file in `dir` against its optional .json sidecar.
CorpusReport run_corpus(const std::string& dir);

}  // namespace zcolor::cli
