#pragma once

#include <span>
#include <utility>
#include <vector>

namespace cyclebuy {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;
};

// Ordinary least squares of ln y on ln x; the slope is the power-law
// exponent. Throws std::invalid_argument for fewer than two points, any
// non-positive coordinate, or all x equal.
FitResult fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace cyclebuy
