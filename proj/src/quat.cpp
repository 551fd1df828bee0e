#include "s3nk/quat.hpp"

#include <algorithm>

#include "s3nk/errors.hpp"

namespace s3nk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateQuaternion: return "DegenerateQuaternion";
    case ErrorKind::NotOnManifold: return "NotOnManifold";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::NonUnitParameter: return "NonUnitParameter";
    case ErrorKind::DomainBoundary: return "DomainBoundary";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::NotProperCR: return "NotProperCR";
    case ErrorKind::FrameNotOrthonormal: return "FrameNotOrthonormal";
    case ErrorKind::GaugeDiscontinuity: return "GaugeDiscontinuity";
    case ErrorKind::InvalidInitialNorm: return "InvalidInitialNorm";
    case ErrorKind::ProfileDomainMismatch: return "ProfileDomainMismatch";
    case ErrorKind::WrongCoefficientNorm: return "WrongCoefficientNorm";
    case ErrorKind::UnknownChart: return "UnknownChart";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Error";
}

Quaternion normalize(const Quaternion& a) {
  const double n = a.norm();
  if (!(n > kUnitEps)) throw Error(ErrorKind::DegenerateQuaternion, "cannot normalize a quaternion of norm <= 1e-12");
  return a / n;
}

Quaternion qexp(const ImaginaryQuaternion& v) {
  const double n = v.norm();
  if (n < 1e-300) return kOne;
  const double s = std::sin(n) / n;
  return {std::cos(n), s * v.x, s * v.y, s * v.z};
}

ImaginaryQuaternion conjugate_by(const Quaternion& c, const ImaginaryQuaternion& v) {
  return (c * Quaternion::from_imag(v) * c.conj()).imag();
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double max_abs_diff(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace s3nk
