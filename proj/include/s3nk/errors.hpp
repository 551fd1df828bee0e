#pragma once

#include <stdexcept>
#include <string>

namespace s3nk {

enum class ErrorKind {
  DegenerateQuaternion,
  NotOnManifold,
  BasePointMismatch,
  NonUnitParameter,
  DomainBoundary,
  DegenerateDirection,
  NotProperCR,
  FrameNotOrthonormal,
  GaugeDiscontinuity,
  InvalidInitialNorm,
  ProfileDomainMismatch,
  WrongCoefficientNorm,
  UnknownChart,
  InvalidConfig,
  IoFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace s3nk
