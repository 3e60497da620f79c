#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpl {

// One code per error class named in the module contracts.
enum class Errc {
  ZeroDivisor,
  DivisionFails,
  VariableMismatch,
  ExponentOverflow,
  IndexOutOfRange,
  NotSkewSymmetric,
  NotPalindromic,
  NotPeriod1,
  NonLaurentIterate,
  ZeroEncountered,
  TermLimitExceeded,
  ZeroScale,
  AlgebraicZCase,
  ZeroTuple,
  ZeroInitial,
  ZeroComponent,
  EliminationFailed,
  SingularPoint,
  DomainError,
  InsufficientWindow,
  NonPositiveInitial,
  NonPositiveParameter,
  TooShort,
  InsufficientData,
  ZeroProduct,
  ParseError,
  ConfigInvalid,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cpl
