#pragma once

#include <stdexcept>
#include <string>

namespace subdirac {

/// Library-wide exception. `code()` is a stable kebab-case identifier
/// ("backend-mismatch", "not-a-solution", ...) that callers and tests match on;
/// `what()` adds a human-readable detail.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace subdirac
