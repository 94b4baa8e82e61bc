#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c60 {

enum class Errc {
  InvalidArgument,
  ParseError,
  InvalidRotation,
  InvalidPermutation,
  NotFound,
  Singular,
  ZeroDenominator,
  PoleAtPoint,
  DegreeInsufficient,
  VerificationFailed,
  NonSymmetric,
  FactorMismatch,
  MultiplicityMismatch,
  NonPositiveParameter,
  KernelMismatch,
  DiagonalMismatch,
  RouteMismatch,
  PoleRemains,
  BlockMismatch,
  SpectrumSplitMismatch,
  FormMismatch,
  MaxNotAtDiagonal,
  PreconditionViolation,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotFound: return "NotFound";
    case Errc::Singular: return "Singular";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::DegreeInsufficient: return "DegreeInsufficient";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::FactorMismatch: return "FactorMismatch";
    case Errc::MultiplicityMismatch: return "MultiplicityMismatch";
    case Errc::NonPositiveParameter: return "NonPositiveParameter";
    case Errc::KernelMismatch: return "KernelMismatch";
    case Errc::DiagonalMismatch: return "DiagonalMismatch";
    case Errc::RouteMismatch: return "RouteMismatch";
    case Errc::PoleRemains: return "PoleRemains";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::SpectrumSplitMismatch: return "SpectrumSplitMismatch";
    case Errc::FormMismatch: return "FormMismatch";
    case Errc::MaxNotAtDiagonal: return "MaxNotAtDiagonal";
    case Errc::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type; code() tells
// callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace c60
