#pragma once

// Named verification suites behind `sct verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace sct {

struct CheckResult {
  std::string id;
  bool passed = true;
  std::string detail;  // witness on failure, a short census otherwise
  double millis = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One line per check and a summary line; timings are left out when
  /// `timings` is false so that reports compare byte for byte.
  std::string render(bool timings) const;
};

struct VerifyOptions {
  std::vector<std::string> corpus_files;  // extra inputs; empty = builtin only
  int dim = -1;                           // suite default when negative
  int max_size = -1;
  int count = -1;
  std::uint32_t seed = 1;
  int max_len = 4;
  int max_width = 2;
};

const std::vector<std::string>& suite_ids();

/// Throws ParameterError for an unknown suite and InputError/SyntaxError for
/// unreadable corpus files.
SuiteReport run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace sct
