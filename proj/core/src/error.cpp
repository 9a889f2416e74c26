#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::WorkBoundExceeded: return "WorkBoundExceeded";
    case ErrorCode::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace nsg
