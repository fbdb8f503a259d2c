#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shapeparts {

enum class ErrorCode {
  InvalidArgument,
  EmptyDomain,
  NoInterior,
  DomainMismatch,
  NoConvergence,
  TooLarge,
  SingularMatrix,
  EmptyRegion,
  SeedMismatch,
  BadAlpha,
  IoError,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shapeparts
