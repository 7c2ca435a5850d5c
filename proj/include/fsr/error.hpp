#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fsr {

/// Raised on violated operation preconditions and bad input data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant breaks; maps to CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One problem found while validating a workspace document.
struct Issue {
  std::string path;    // e.g. "fuzzy_soft_sets[1].sets.cheap[3]"
  std::string reason;  // e.g. "grade 1.2 outside [0, 1]"
};

/// Carries every issue found in one validation pass.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Issue> issues)
      : Error(summarize(issues)), issues_(std::move(issues)) {}

  const std::vector<Issue>& issues() const { return issues_; }

 private:
  static std::string summarize(const std::vector<Issue>& issues) {
    std::string out = std::to_string(issues.size()) + " issue(s):";
    for (const auto& issue : issues) out += "\n  " + issue.path + ": " + issue.reason;
    return out;
  }

  std::vector<Issue> issues_;
};

}  // namespace fsr
