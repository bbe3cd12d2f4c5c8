#include "screening/normal.hpp"

#include <cmath>
#include <numbers>

namespace screening::normal {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// Below this the direct erfc form loses all precision.
constexpr double kTailFloor = 1e-300;

}  // namespace

double pdf(double z) { return std::exp(log_pdf(z)); }

double log_pdf(double z) { return -0.5 * z * z - kLogSqrt2Pi; }

double cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double survival(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

double log_survival(double z) {
  if (z < 0.0) {
    return std::log1p(-0.5 * std::erfc(-z * kInvSqrt2));
  }
  const double q = survival(z);
  if (q > kTailFloor) {
    return std::log(q);
  }
  // Q(z) = pdf(z)/z * (1 - 1/z^2 + 3/z^4 - 15/z^6 + 105/z^8 - ...); here
  // z > 37 so the truncation error is below 1e-15 relative.
  const double r = 1.0 / (z * z);
  const double series = 1.0 - r * (1.0 - r * (3.0 - r * (15.0 - r * 105.0)));
  return log_pdf(z) - std::log(z) + std::log(series);
}

double log_cdf(double z) { return log_survival(-z); }

}  // namespace screening::normal
