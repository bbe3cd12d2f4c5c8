#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "random_configs.hpp"

namespace screening::oracle {

namespace {

double univariate_log_pdf(double x, double mu, double sd) {
  const double z = (x - mu) / sd;
  return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * std::numbers::pi);
}

double log_threshold(const PayoffParams& p, double tau) {
  return std::log((1.0 - p.pi) * (p.x_u + tau)) - std::log(p.pi * (p.x_q - tau));
}

double log_ratio(const GaussianSignalModel& s, double theta, double gamma) {
  return bivariate_log_pdf(s, s.mu_q, theta, gamma) - bivariate_log_pdf(s, s.mu_u, theta, gamma);
}

template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

double bivariate_log_pdf(const GaussianSignalModel& s, const std::array<double, 2>& mu,
                         double theta, double gamma) {
  const double zt = (theta - mu[0]) / s.sigma_theta;
  const double zg = (gamma - mu[1]) / s.sigma_gamma;
  const double one_r2 = 1.0 - s.rho * s.rho;
  const double quad = (zt * zt - 2.0 * s.rho * zt * zg + zg * zg) / one_r2;
  return -std::log(2.0 * std::numbers::pi * s.sigma_theta * s.sigma_gamma * std::sqrt(one_r2)) -
         0.5 * quad;
}

double likelihood_ratio(const GaussianSignalModel& s, double theta, double gamma) {
  return std::exp(log_ratio(s, theta, gamma));
}

double kappa(const PayoffParams& p, const GaussianSignalModel& s, double theta, double gamma) {
  const double hq = std::exp(bivariate_log_pdf(s, s.mu_q, theta, gamma));
  const double hu = std::exp(bivariate_log_pdf(s, s.mu_u, theta, gamma));
  return p.pi * hq / (p.pi * hq + (1.0 - p.pi) * hu);
}

double phi(const PayoffParams& p, const GaussianSignalModel& s, double theta) {
  const double fq = std::exp(univariate_log_pdf(theta, s.mu_q[0], s.sigma_theta));
  const double fu = std::exp(univariate_log_pdf(theta, s.mu_u[0], s.sigma_theta));
  return p.pi * fq / (p.pi * fq + (1.0 - p.pi) * fu);
}

double gamma1(const PayoffParams& p, const GaussianSignalModel& s, double theta, double tau) {
  const double target = log_threshold(p, tau);
  auto f = [&](double g) { return log_ratio(s, theta, g) - target; };
  double lo = -1.0;
  double hi = 1.0;
  while (f(lo) > 0.0) lo *= 2.0;
  while (f(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 400 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Scores scores(const PayoffParams& p, const GaussianSignalModel& s, double theta, double tau) {
  const double g1 = gamma1(p, s, theta, tau);
  auto mass_above = [&](const std::array<double, 2>& mu) {
    // Integration range from the conditional law, used only to place the window.
    const double mean = mu[1] + s.rho * s.sigma_gamma / s.sigma_theta * (theta - mu[0]);
    const double sd = s.sigma_gamma * std::sqrt(1.0 - s.rho * s.rho);
    const double a = std::max(g1, mean - 14.0 * sd);
    const double b = std::max(g1, mean) + 14.0 * sd;
    return simpson([&](double g) { return std::exp(bivariate_log_pdf(s, mu, theta, g)); }, a, b,
                   6000);
  };
  const double jq = mass_above(s.mu_q);
  const double ju = mass_above(s.mu_u);
  const double fq = std::exp(univariate_log_pdf(theta, s.mu_q[0], s.sigma_theta));
  const double fu = std::exp(univariate_log_pdf(theta, s.mu_u[0], s.sigma_theta));
  Scores out;
  out.surv_q = jq / fq;
  out.surv_u = ju / fu;
  out.s2 = (p.pi * jq + (1.0 - p.pi) * ju) / (p.pi * fq + (1.0 - p.pi) * fu);
  out.s1 = p.pi * jq / (p.pi * jq + (1.0 - p.pi) * ju);
  return out;
}

McScore rejection_s1(const PayoffParams& p, const GaussianSignalModel& s, double theta,
                     double tau, double half_width, std::size_t draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::bernoulli_distribution qual(p.pi);
  const double target = log_threshold(p, tau);
  const double root = std::sqrt(1.0 - s.rho * s.rho);
  std::size_t hits = 0;
  std::size_t qualified = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const bool q = qual(rng);
    const auto& mu = q ? s.mu_q : s.mu_u;
    const double z1 = z(rng);
    const double z2 = z(rng);
    const double th = mu[0] + s.sigma_theta * z1;
    if (std::abs(th - theta) >= half_width) continue;
    const double g = mu[1] + s.sigma_gamma * (s.rho * z1 + root * z2);
    if (log_ratio(s, th, g) <= target) continue;
    ++hits;
    qualified += q ? 1 : 0;
  }
  McScore out;
  out.hits = hits;
  if (hits > 0) {
    out.value = static_cast<double>(qualified) / static_cast<double>(hits);
    out.standard_error = std::sqrt(out.value * (1.0 - out.value) / static_cast<double>(hits));
  }
  return out;
}

}  // namespace screening::oracle

namespace screening::fixtures {

std::vector<double> mixture_quantiles(const ModelConfig& config, std::size_t n) {
  const auto& s = config.signal().model();
  const double pi = config.payoffs().pi;
  auto cdf = [&](double t) {
    const auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    return pi * phi((t - s.mu_q[0]) / s.sigma_theta) +
           (1.0 - pi) * phi((t - s.mu_u[0]) / s.sigma_theta);
  };
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = n == 1 ? 0.5 : 0.05 + 0.9 * static_cast<double>(i) / (n - 1);
    double lo = std::min(s.mu_q[0], s.mu_u[0]) - 10.0 * s.sigma_theta;
    double hi = std::max(s.mu_q[0], s.mu_u[0]) + 10.0 * s.sigma_theta;
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < target ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace screening::fixtures
