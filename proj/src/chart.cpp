#include "s3nk/chart.hpp"

#include <vector>

#include "s3nk/errors.hpp"

namespace s3nk {

const char* to_string(PClass c) {
  switch (c) {
    case PClass::D1EqualsD1: return "D1_EQUALS_D1";
    case PClass::D1PerpSubcaseD2: return "D1_PERP_SUBCASE_D2";
    case PClass::D1PerpSubcaseD3: return "D1_PERP_SUBCASE_D3";
    case PClass::D1PerpMixed: return "D1_PERP_MIXED";
    case PClass::Generic: return "GENERIC";
  }
  return "GENERIC";
}

bool ImmersionChart::contains(const ChartParams& x, double reach) const {
  for (int m = 0; m < 3; ++m) {
    if (!(x[m] - reach > domain_[m].lo && x[m] + reach < domain_[m].hi)) return false;
  }
  return true;
}

void ImmersionChart::require_inside(const ChartParams& x, double reach) const {
  if (!contains(x, reach)) throw Error(ErrorKind::DomainBoundary, "stencil leaves the domain of chart " + name_);
}

ImmersionChart ImmersionChart::with_name(std::string name) const {
  ImmersionChart c = *this;
  c.name_ = std::move(name);
  return c;
}

ImmersionChart ImmersionChart::with_orientation(int orientation) const {
  ImmersionChart c = *this;
  c.orientation_ = orientation < 0 ? -1 : 1;
  return c;
}

ImmersionChart ImmersionChart::with_expectation(ChartExpectation e) const {
  ImmersionChart c = *this;
  c.expect_ = std::move(e);
  return c;
}

std::vector<ChartParams> interior_grid(const Box& box, int n) {
  std::vector<ChartParams> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  auto at = [&](int m, int k) {
    return box[m].lo + (box[m].hi - box[m].lo) * static_cast<double>(k + 1) / static_cast<double>(n + 1);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.push_back({at(0, i), at(1, j), at(2, k)});
  return out;
}

}  // namespace s3nk
