#include "s3nk/profile.hpp"

#include <cmath>
#include <sstream>

#include "s3nk/errors.hpp"

namespace s3nk {

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2;

APair axpy(const APair& a, double s, const APair& d) { return {a.a1 + s * d.a1, a.a2 + s * d.a2}; }

double norm2(const APair& a) { return std::norm(a.a1) + std::norm(a.a2); }

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, "bad profile parameter '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidConfig, "bad profile parameter '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ProfileSpec ProfileSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
  if (name == "zero" && args.empty()) return zero();
  if (name == "linear" && args.size() == 2) return linear(args[0], args[1]);
  if (name == "sine" && args.size() == 3) return sine(args[0], args[1], args[2]);
  throw Error(ErrorKind::InvalidConfig, "unknown profile '" + text + "'");
}

std::string ProfileSpec::id() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Linear: os << "linear:" << c0 << ',' << c1; break;
    case Kind::Sine: os << "sine:" << c0 << ',' << c1 << ',' << c2; break;
  }
  return os.str();
}

double ProfileSpec::operator()(double t) const {
  switch (kind) {
    case Kind::Zero: return 0;
    case Kind::Linear: return c0 + c1 * t;
    case Kind::Sine: return c0 * std::sin(c1 * t + c2);
  }
  return 0;
}

APair a_derivative(const ProfileSpec& f, double t, const APair& a) {
  const Complex e = std::polar(1.0, f(t));
  return {-kHalfSqrt3 * a.a2 * std::conj(e), kHalfSqrt3 * a.a1 * e};
}

APair rk4_step(const ProfileSpec& f, double t, const APair& a, double dt) {
  const APair k1 = a_derivative(f, t, a);
  const APair k2 = a_derivative(f, t + dt / 2, axpy(a, dt / 2, k1));
  const APair k3 = a_derivative(f, t + dt / 2, axpy(a, dt / 2, k2));
  const APair k4 = a_derivative(f, t + dt, axpy(a, dt, k3));
  return {a.a1 + dt / 6 * (k1.a1 + 2.0 * k2.a1 + 2.0 * k3.a1 + k4.a1),
          a.a2 + dt / 6 * (k1.a2 + 2.0 * k2.a2 + 2.0 * k3.a2 + k4.a2)};
}

ProfilePath integrate_A(const ProfileSpec& f, const APair& a0, double t0, double t1, double step) {
  if (std::abs(norm2(a0) - 1) > 1e-12) throw Error(ErrorKind::InvalidInitialNorm, "|a1|^2+|a2|^2 must be 1");
  if (!(step > 0) || !(t1 > t0)) throw Error(ErrorKind::InvalidConfig, "need step > 0 and t1 > t0");
  const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / step - 1e-9));
  ProfilePath path;
  path.profile_ = f;
  path.t0_ = t0;
  path.step_ = (t1 - t0) / static_cast<double>(n);
  path.nodes_.reserve(n + 1);
  path.nodes_.push_back(a0);
  for (std::size_t k = 0; k < n; ++k) {
    APair next = rk4_step(f, path.t(k), path.nodes_.back(), path.step_);
    const double n2 = norm2(next);
    path.max_drift_ = std::max(path.max_drift_, std::abs(std::sqrt(n2) - 1));
    const double s = 1 / std::sqrt(n2);
    path.nodes_.push_back({s * next.a1, s * next.a2});
  }
  return path;
}

APair ProfilePath::at(double t) const {
  const double slack = 1e-12 * step_;
  if (t < t_begin() - slack || t > t_end() + slack)
    throw Error(ErrorKind::ProfileDomainMismatch, "t outside the integrated profile range");
  const double pos = (t - t0_) / step_;
  auto k = static_cast<std::size_t>(std::max(0.0, std::floor(pos)));
  if (k >= nodes_.size() - 1) k = nodes_.size() - 2;
  const double dt = t - this->t(k);
  if (dt == 0) return nodes_[k];
  const APair a = rk4_step(profile_, this->t(k), nodes_[k], dt);
  const double s = 1 / std::sqrt(norm2(a));
  return {s * a.a1, s * a.a2};
}

CoupledPath integrate_AB(const ProfileSpec& f, const Quaternion& a0, const Quaternion& b0, double t0, double t1,
                         double step) {
  if (!(step > 0) || !(t1 > t0)) throw Error(ErrorKind::InvalidConfig, "need step > 0 and t1 > t0");
  const double c = std::sqrt(3.0) / 4;
  auto rhs = [&](double t, const Quaternion& A, const Quaternion& B) {
    const double ft = f(t);
    const Quaternion e{std::cos(ft), -std::sin(ft), 0, 0};
    return std::pair{c * ((A * kJ - B * kK) * e), -c * ((A * kK + B * kJ) * e)};
  };
  const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / step - 1e-9));
  const double h = (t1 - t0) / static_cast<double>(n);
  CoupledPath out;
  out.t.push_back(t0);
  out.A.push_back(a0);
  out.B.push_back(b0);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = out.t.back();
    const Quaternion A = out.A.back(), B = out.B.back();
    const auto [ka1, kb1] = rhs(t, A, B);
    const auto [ka2, kb2] = rhs(t + h / 2, A + (h / 2) * ka1, B + (h / 2) * kb1);
    const auto [ka3, kb3] = rhs(t + h / 2, A + (h / 2) * ka2, B + (h / 2) * kb2);
    const auto [ka4, kb4] = rhs(t + h, A + h * ka3, B + h * kb3);
    out.A.push_back(A + (h / 6) * (ka1 + 2.0 * ka2 + 2.0 * ka3 + ka4));
    out.B.push_back(B + (h / 6) * (kb1 + 2.0 * kb2 + 2.0 * kb3 + kb4));
    out.t.push_back(t0 + h * static_cast<double>(k + 1));
  }
  return out;
}

}  // namespace s3nk
