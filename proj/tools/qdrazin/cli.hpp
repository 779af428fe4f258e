#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdrazin/json_io.hpp"

namespace qdrazin::cli {

enum class Format { kJson, kPretty };

struct JobOptions {
  Format format = Format::kJson;
  bool self_check = true;
  bool lambda_sweep = false;
};

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseFailure = 2,
  kValidationFailure = 3,
  kCapExceeded = 4,
  kInternalFailure = 5,
};

/// Runs one command on an already-parsed input document and returns the
/// report. Library exceptions propagate.
Json run_job(const std::string& command, const Json& input, const JobOptions& options);

/// Serialises a report; both forms end with a newline.
std::string render(const Json& report, Format format);

/// Full front end: argument parsing, file I/O, error reporting. Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdrazin::cli
