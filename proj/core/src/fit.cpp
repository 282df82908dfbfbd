#include "cyclebuy/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclebuy {

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("fit_exponent: need at least two points");
  std::vector<double> xs, ys;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("fit_exponent: coordinates must be positive");
    }
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all x values are equal");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.points.assign(points.begin(), points.end());
  return fit;
}

}  // namespace cyclebuy
