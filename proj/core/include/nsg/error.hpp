#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorCode {
  InvalidTuple,          // empty tuple or a generator < 1
  NotCoprime,            // gcd of the generators is not 1
  Degenerate,            // a generator equals 1 where a proper semigroup is required
  WorkBoundExceeded,     // oracle effort would exceed the configured cap
  HypothesisUnverified,  // a closed form was asked for outside its hypothesis
  InvalidParams,         // family parameters violate their constraints
  RegimeMismatch,        // operation needs a parameter regime that does not hold
  ArithmeticOverflow,    // exact 64-bit arithmetic would overflow
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// command-line tool maps onto its exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsg
