#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace respond {

enum class ErrorCode {
  NonPositiveHopping,
  OrderingViolated,
  TooFewSites,
  InvalidArgument,
  RootCountMismatch,
  ConvergenceFailure,
  DegenerateRoots,
  ZeroDelta,
  OnBoundary,
  OmegaOnImage,
  UnresolvedWinding,
  NoTransition,
  NearSingular,
  QuadratureNonConvergent,
  UnclassifiedConfiguration,
  NoKink,
  CleanValueZero,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace respond
