#pragma once

#include <cmath>

namespace s3nk {

inline constexpr double kUnitEps = 1e-12;

struct ImaginaryQuaternion {
  double x = 0, y = 0, z = 0;

  constexpr ImaginaryQuaternion() = default;
  constexpr ImaginaryQuaternion(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr ImaginaryQuaternion operator-() const { return {-x, -y, -z}; }
  constexpr ImaginaryQuaternion& operator+=(const ImaginaryQuaternion& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr ImaginaryQuaternion& operator-=(const ImaginaryQuaternion& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr ImaginaryQuaternion& operator*=(double s) {
    x *= s; y *= s; z *= s;
    return *this;
  }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr ImaginaryQuaternion operator+(ImaginaryQuaternion a, const ImaginaryQuaternion& b) { return a += b; }
constexpr ImaginaryQuaternion operator-(ImaginaryQuaternion a, const ImaginaryQuaternion& b) { return a -= b; }
constexpr ImaginaryQuaternion operator*(double s, ImaginaryQuaternion a) { return a *= s; }
constexpr ImaginaryQuaternion operator*(ImaginaryQuaternion a, double s) { return a *= s; }
constexpr ImaginaryQuaternion operator/(ImaginaryQuaternion a, double s) { return a *= 1.0 / s; }

constexpr double im_dot(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Equals (ab - ba)/2 for imaginary a, b.
constexpr ImaginaryQuaternion im_cross(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double r) { return {r, 0, 0, 0}; }
  static constexpr Quaternion from_imag(const ImaginaryQuaternion& v) { return {0, v.x, v.y, v.z}; }

  constexpr ImaginaryQuaternion imag() const { return {x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= 1.0 / s; }

constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr Quaternion kOne{1, 0, 0, 0};
inline constexpr Quaternion kI{0, 1, 0, 0};
inline constexpr Quaternion kJ{0, 0, 1, 0};
inline constexpr Quaternion kK{0, 0, 0, 1};

// Throws DegenerateQuaternion when norm <= kUnitEps.
Quaternion normalize(const Quaternion& a);

// exp of an imaginary quaternion, a unit quaternion.
Quaternion qexp(const ImaginaryQuaternion& v);

// Unit quaternion rotation c v c-bar of an imaginary quaternion.
ImaginaryQuaternion conjugate_by(const Quaternion& c, const ImaginaryQuaternion& v);

double max_abs_diff(const Quaternion& a, const Quaternion& b);
double max_abs_diff(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b);

}  // namespace s3nk
