#pragma once

#include <stdexcept>
#include <string>

namespace mkp {

/// Failure with a stable machine-readable code such as "sign-mismatch".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + code + ": " + message
                                    : code + ": " + message),
        code_(std::move(code)),
        line_(line) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }

private:
  std::string code_;
  int line_;
};

}  // namespace mkp
