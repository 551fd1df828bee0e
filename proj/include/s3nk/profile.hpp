#pragma once

#include <complex>
#include <string>
#include <vector>

#include "s3nk/quat.hpp"

namespace s3nk {

using Complex = std::complex<double>;

// The phase function f(t) of the A(t) system.
struct ProfileSpec {
  enum class Kind { Zero, Linear, Sine };
  Kind kind = Kind::Zero;
  double c0 = 0, c1 = 0, c2 = 0;

  static ProfileSpec zero() { return {}; }
  // f(t) = c0 + c1 t
  static ProfileSpec linear(double c0, double c1) { return {Kind::Linear, c0, c1, 0}; }
  // f(t) = amp sin(freq t + phase)
  static ProfileSpec sine(double amp, double freq, double phase) { return {Kind::Sine, amp, freq, phase}; }

  // "zero", "linear:c0,c1" or "sine:amp,freq,phase". Throws InvalidConfig.
  static ProfileSpec parse(const std::string& text);
  std::string id() const;

  double operator()(double t) const;
};

struct APair {
  Complex a1;
  Complex a2;
};

// a1' = -(sqrt3/2) a2 e^{-if}, a2' = (sqrt3/2) a1 e^{if}.
APair a_derivative(const ProfileSpec& f, double t, const APair& a);

// A = a1 + a2 j.
inline Quaternion to_quaternion(const APair& a) { return {a.a1.real(), a.a1.imag(), a.a2.real(), a.a2.imag()}; }

class ProfilePath {
 public:
  const ProfileSpec& profile() const { return profile_; }
  double t_begin() const { return t0_; }
  double t_end() const { return t0_ + step_ * static_cast<double>(nodes_.size() - 1); }
  double step() const { return step_; }
  std::size_t size() const { return nodes_.size(); }
  double t(std::size_t k) const { return t0_ + step_ * static_cast<double>(k); }
  const APair& node(std::size_t k) const { return nodes_[k]; }
  // Largest | |a|^2 - 1 | seen before renormalizing a step.
  double max_drift() const { return max_drift_; }

  // One renormalized RK4 step from the node at or below t. Throws ProfileDomainMismatch outside the path.
  APair at(double t) const;
  Quaternion quaternion_at(double t) const { return to_quaternion(at(t)); }

 private:
  friend ProfilePath integrate_A(const ProfileSpec&, const APair&, double, double, double);
  ProfileSpec profile_;
  double t0_ = 0, step_ = 0;
  std::vector<APair> nodes_;
  double max_drift_ = 0;
};

APair rk4_step(const ProfileSpec& f, double t, const APair& a, double dt);

// Classical RK4 on [t0, t1] with step close to `step` (adjusted to divide the interval),
// renormalizing after each step. Throws InvalidInitialNorm unless |a0| = 1 within 1e-12.
ProfilePath integrate_A(const ProfileSpec& f, const APair& a0, double t0, double t1, double step = 1e-3);

// The coupled quaternion system for (A, B) before the reduction B = A i:
// A' = (sqrt3/4)(A j - B k) e^{-if}, B' = -(sqrt3/4)(A k + B j) e^{-if}.
struct CoupledPath {
  std::vector<double> t;
  std::vector<Quaternion> A;
  std::vector<Quaternion> B;
};

CoupledPath integrate_AB(const ProfileSpec& f, const Quaternion& a0, const Quaternion& b0, double t0, double t1,
                         double step = 1e-3);

}  // namespace s3nk
