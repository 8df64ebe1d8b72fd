#pragma once

#include <stdexcept>
#include <string>

namespace rca {

/// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorKind {
  InvalidArgument,
  LengthMismatch,
  InvalidMode,
  StreamTooShort,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace rca
