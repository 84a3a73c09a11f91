#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorCode {
  EmptyGenerators,
  GcdNotOne,
  IsAllOfN,
  NotAdditivelyClosed,
  NotAMember,
  ZeroModulus,
  ShiftNotInDomain,
  ShiftNotInSemigroup,
  ShiftTooLarge,
  NotContractible,
  BadParameters,
  NotRepresentable,
  TooLarge,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Raised for every precondition violation in the library. The code is stable
// and is what tests and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsg
