#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypack {

enum class ErrorCode {
  ZeroVector,
  NotProper,
  DegeneratePlane,
  Singular,
  NotHyperbolic,
  FactorizationFailed,
  NotTruncated,
  ThetaUndefined,
  NegativeRadius,
  CaseInapplicable,
  CoveringUndefined,
  NotSymmetric,
  InfiniteStabilizer,
  UnknownCase,
  EmptySweep,
  DatasetMissing,
  BadInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::NotTruncated: return "NotTruncated";
    case ErrorCode::ThetaUndefined: return "ThetaUndefined";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::CaseInapplicable: return "CaseInapplicable";
    case ErrorCode::CoveringUndefined: return "CoveringUndefined";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InfiniteStabilizer: return "InfiniteStabilizer";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::EmptySweep: return "EmptySweep";
    case ErrorCode::DatasetMissing: return "DatasetMissing";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, sweeps) can tell "skip this row" apart from real faults.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypack
