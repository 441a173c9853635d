#include "respond/error.hpp"

namespace respond {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveHopping: return "NonPositiveHopping";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::TooFewSites: return "TooFewSites";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::OnBoundary: return "OnBoundary";
    case ErrorCode::OmegaOnImage: return "OmegaOnImage";
    case ErrorCode::UnresolvedWinding: return "UnresolvedWinding";
    case ErrorCode::NoTransition: return "NoTransition";
    case ErrorCode::NearSingular: return "NearSingular";
    case ErrorCode::QuadratureNonConvergent: return "QuadratureNonConvergent";
    case ErrorCode::UnclassifiedConfiguration: return "UnclassifiedConfiguration";
    case ErrorCode::NoKink: return "NoKink";
    case ErrorCode::CleanValueZero: return "CleanValueZero";
  }
  return "Unknown";
}

}  // namespace respond
