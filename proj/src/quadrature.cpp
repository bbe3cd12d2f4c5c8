#include "screening/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "screening/error.hpp"

namespace screening {

namespace {

// Kronrod nodes on [0, 1]; odd indices are the Gauss-Legendre 7-point nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opts) {
  QuadratureResult result;
  if (a == b) return result;

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  panels.push(first);

  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (static_cast<int>(panels.size()) >= opts.max_panels) {
      const Panel& worst = panels.top();
      std::ostringstream os;
      os.precision(17);
      os << "quadrature did not converge: error " << error << " after " << panels.size()
         << " panels; worst panel [" << worst.a << ", " << worst.b << "] with error "
         << worst.error;
      throw NumericError(os.str());
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Cannot split further; accept what we have.
      panels.push({worst.a, worst.b, worst.value, 0.0});
      error -= worst.error;
      continue;
    }
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum for a total independent of the accumulated update order.
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  result.value = 0.0;
  result.error = 0.0;
  for (const Panel& p : all) {
    result.value += p.value;
    result.error += p.error;
  }
  result.panels = static_cast<int>(all.size());
  return result;
}

QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const QuadratureOptions& opts) {
  QuadratureResult total;
  if (breakpoints.size() < 2) return total;
  QuadratureOptions piece = opts;
  piece.abs_tol = opts.abs_tol / static_cast<double>(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const QuadratureResult r = integrate_adaptive(f, breakpoints[i], breakpoints[i + 1], piece);
    total.value += r.value;
    total.error += r.error;
    total.panels += r.panels;
  }
  return total;
}

}  // namespace screening
