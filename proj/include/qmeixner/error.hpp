#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmeixner {

enum class ErrorCode {
  InvalidParams,
  Pole,
  Degenerate,
  NoSignChange,
  Unresolved,
  NodeCollision,
  SizeMismatch,
  TailNotBounded,
  Unsupported,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "INVALID_PARAMS";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::NoSignChange: return "NO_SIGN_CHANGE";
    case ErrorCode::Unresolved: return "UNRESOLVED";
    case ErrorCode::NodeCollision: return "NODE_COLLISION";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::TailNotBounded: return "TAIL_NOT_BOUNDED";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmeixner
