#include "shannon1d/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shannon1d {

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Density::Density(std::function<double(double)> evaluator, Space space, DensityLayout layout)
    : evaluator_(std::move(evaluator)), space_(space), layout_(std::move(layout)) {
  if (!evaluator_) throw std::invalid_argument("density needs an evaluator");
  if (!(layout_.support.lo < layout_.support.hi)) {
    throw std::invalid_argument("density support must be a non-empty interval");
  }
  if (layout_.support.finite()) layout_.window = layout_.support;
  if (!layout_.window.finite()) {
    throw std::invalid_argument("density quadrature window must be finite");
  }
  if (layout_.periodic_zeros && !(layout_.periodic_zeros->spacing > 0.0)) {
    throw std::invalid_argument("periodic zero spacing must be positive");
  }
  std::sort(layout_.nodes.begin(), layout_.nodes.end());
}

double Density::operator()(double t) const {
  return layout_.support.contains(t) ? evaluator_(t) : 0.0;
}

std::vector<double> Density::breakpoints(double lo, double hi) const {
  std::vector<double> points{lo};
  for (double node : layout_.nodes) {
    if (node > lo && node < hi) points.push_back(node);
  }
  if (layout_.periodic_zeros) {
    const auto [origin, spacing] = *layout_.periodic_zeros;
    const double first = std::ceil((lo - origin) / spacing);
    for (double j = first;; j += 1.0) {
      const double z = origin + j * spacing;
      if (z >= hi) break;
      if (z > lo) points.push_back(z);
    }
  }
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  // Drop coincident points (a node that is also a periodic zero).
  const double merge = 1e-12 * std::max(std::abs(lo), std::abs(hi));
  points.erase(std::unique(points.begin(), points.end(),
                           [merge](double a, double b) { return std::abs(a - b) <= merge; }),
               points.end());
  return points;
}

Density Density::rescaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::domain_error("density rescaling factor must be positive");
  }
  auto stretch = [factor](Interval i) { return Interval{i.lo * factor, i.hi * factor}; };
  DensityLayout layout = layout_;
  layout.support = stretch(layout_.support);
  layout.window = stretch(layout_.window);
  for (double& node : layout.nodes) node *= factor;
  if (layout.periodic_zeros) {
    layout.periodic_zeros->origin *= factor;
    layout.periodic_zeros->spacing *= factor;
  }
  if (layout.tail) {
    // rho'(t') <= (C/factor) (t'/factor)^-s = C factor^(s-1) t'^-s
    layout.tail->coefficient *= std::pow(factor, layout.tail->exponent - 1.0);
    layout.tail->from *= factor;
  }
  auto inner = evaluator_;
  return Density([inner, factor](double t) { return inner(t / factor) / factor; }, space_,
                 std::move(layout));
}

}  // namespace shannon1d
