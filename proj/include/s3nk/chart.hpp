#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s3nk/nk.hpp"

namespace s3nk {

using ChartParams = std::array<double, 3>;

struct Interval {
  double lo = 0;
  double hi = 0;
};

using Box = std::array<Interval, 3>;

enum class PClass { D1EqualsD1, D1PerpSubcaseD2, D1PerpSubcaseD3, D1PerpMixed, Generic };

const char* to_string(PClass c);

// <alpha_m, alpha_n> (factor 0) or <beta_m, beta_n> (factor 1) of the coordinate pushforwards, 1-based.
struct InnerTarget {
  int factor;
  int m, n;
  double value;
};

// alpha_m = ratio alpha_n (factor 0) or the same for beta (factor 1).
struct RatioTarget {
  int factor;
  int m, n;
  double ratio;
};

// table is 'G' (Gamma), 'h' or 'b'; indices 1-based.
struct CoefficientTarget {
  char table;
  int i, j, k;
  double value;
};

// What a chart is expected to satisfy. Unset fields are not compared.
struct ChartExpectation {
  PClass cls = PClass::Generic;
  double theta = 0;
  std::optional<std::array<double, 4>> a;
  std::optional<std::array<double, 3>> omega;
  std::optional<double> branch_t;
  std::optional<double> defect_abs;
  // h_11^1 + h_22^1
  std::optional<double> h_trace;
  std::vector<InnerTarget> inner;
  std::vector<RatioTarget> ratios;
  std::vector<CoefficientTarget> coeffs;
};

class ImmersionChart {
 public:
  using Eval = std::function<SurfacePoint(const ChartParams&)>;

  ImmersionChart(std::string name, Box domain, Eval eval, int orientation, ChartExpectation expect)
      : name_(std::move(name)), domain_(domain), eval_(std::move(eval)), orientation_(orientation < 0 ? -1 : 1),
        expect_(std::move(expect)) {}

  const std::string& name() const { return name_; }
  const Box& domain() const { return domain_; }
  // +1 when the parameter order (x1, x2, x3) is the positive orientation of the submanifold.
  int orientation() const { return orientation_; }
  const ChartExpectation& expect() const { return expect_; }
  const Eval& evaluator() const { return eval_; }

  SurfacePoint operator()(const ChartParams& x) const { return eval_(x); }

  // True when every point within `reach` of x (max norm) lies in the domain, x strictly inside.
  bool contains(const ChartParams& x, double reach = 0) const;
  // Throws DomainBoundary unless contains(x, reach).
  void require_inside(const ChartParams& x, double reach) const;

  ImmersionChart with_name(std::string name) const;
  ImmersionChart with_orientation(int orientation) const;
  ImmersionChart with_expectation(ChartExpectation e) const;

 private:
  std::string name_;
  Box domain_;
  Eval eval_;
  int orientation_;
  ChartExpectation expect_;
};

// n points per axis at fractions (k+1)/(n+1), x1 slowest.
std::vector<ChartParams> interior_grid(const Box& box, int n);

}  // namespace s3nk
