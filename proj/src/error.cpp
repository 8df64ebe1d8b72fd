#include "rca/error.hpp"

namespace rca {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::InvalidMode: return "invalid-mode";
    case ErrorKind::StreamTooShort: return "stream-too-short";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace rca
