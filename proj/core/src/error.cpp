#include "shapeparts/error.hpp"

namespace shapeparts {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::NoInterior: return "NoInterior";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::SeedMismatch: return "SeedMismatch";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

}  // namespace shapeparts
