#include <gtest/gtest.h>

#include <cmath>

#include "cyclebuy/fit.hpp"

namespace cyclebuy {
namespace {

TEST(FitExponent, TwoPointsExactPowerLaw) {
  const std::vector<std::pair<double, double>> pts{{100, 0.1}, {1000, 0.01}};
  const FitResult f = fit_exponent(pts);
  EXPECT_NEAR(f.slope, -1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.points, pts);
}

TEST(FitExponent, SyntheticFiveNinths) {
  std::vector<std::pair<double, double>> pts;
  for (double n = 100; n <= 10'000; n *= 1.5) pts.emplace_back(n, 7.0 * std::pow(n, -5.0 / 9.0));
  const FitResult f = fit_exponent(pts);
  EXPECT_NEAR(f.slope, -5.0 / 9.0, 1e-9);
  EXPECT_NEAR(std::exp(f.intercept), 7.0, 1e-8);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(FitExponent, NoisyDataHasRSquaredBelowOne) {
  const std::vector<std::pair<double, double>> pts{{1, 1}, {2, 3}, {3, 2}, {4, 5}};
  const FitResult f = fit_exponent(pts);
  EXPECT_GT(f.r_squared, 0.0);
  EXPECT_LT(f.r_squared, 1.0);
}

TEST(FitExponent, RejectsDegenerateInput) {
  using P = std::vector<std::pair<double, double>>;
  EXPECT_THROW(fit_exponent(P{{1, 1}}), std::invalid_argument);
  EXPECT_THROW(fit_exponent(P{{1, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(fit_exponent(P{{-1, 1}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(fit_exponent(P{{2, 1}, {2, 3}}), std::invalid_argument);
}

}  // namespace
}  // namespace cyclebuy
