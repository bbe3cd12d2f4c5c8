#pragma once

#include <functional>
#include <span>

namespace screening {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-12;
  int max_panels = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration on [a, b]: the panel
/// with the largest error estimate is bisected until the summed estimate
/// meets the tolerance. Throws NumericError reporting the worst panel if the
/// panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opts = {});

/// Integrates piece by piece between consecutive sorted breakpoints, so that
/// jump discontinuities of the integrand fall on panel edges. The tolerance
/// is split evenly across the pieces.
QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const QuadratureOptions& opts = {});

}  // namespace screening
