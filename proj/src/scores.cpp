#include "screening/scores.hpp"

#include <cmath>

#include "screening/normal.hpp"

namespace screening {

TauInterval clamped_tau_interval(const PayoffParams& payoffs, double relative_eps) {
  const double eps = relative_eps * payoffs.span();
  return {-payoffs.x_u + eps, payoffs.x_q - eps};
}

std::vector<double> clamped_tau_grid(const PayoffParams& payoffs, std::size_t count,
                                     double relative_eps) {
  if (count < 2) {
    throw DomainError("a tau grid needs at least two points");
  }
  const TauInterval iv = clamped_tau_interval(payoffs, relative_eps);
  std::vector<double> grid(count);
  const double step = (iv.hi - iv.lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = iv.lo + step * static_cast<double>(i);
  }
  grid.back() = iv.hi;
  return grid;
}

void require_open_tau(const PayoffParams& payoffs, double tau) {
  if (!(tau > -payoffs.x_u && tau < payoffs.x_q)) {
    throw DomainError("tau must lie in the open interval (-x_u, x_q)");
  }
}

double log_acceptance_threshold(const PayoffParams& p, double tau) {
  require_open_tau(p, tau);
  return std::log1p(-p.pi) + std::log(p.x_u + tau) - std::log(p.pi) - std::log(p.x_q - tau);
}

double acceptance_threshold_T(const PayoffParams& p, double tau) {
  require_open_tau(p, tau);
  return (1.0 - p.pi) * (p.x_u + tau) / (p.pi * (p.x_q - tau));
}

double gamma1(const ModelConfig& config, double theta, double tau) {
  const auto& cert = config.signal().certificate();
  const double log_t = log_acceptance_threshold(config.payoffs(), tau);
  return (log_t - cert.intercept - cert.weight_theta * theta) / cert.weight_gamma;
}

ScorePoint evaluate_scores(const ModelConfig& config, double theta, double tau) {
  const CertifiedSignal& signal = config.signal();
  ScorePoint p;
  p.theta = theta;
  p.tau = tau;
  p.gamma1 = gamma1(config, theta, tau);

  const double log_odds = marginal_log_odds(config, theta);
  p.phi = logistic(log_odds);

  const double sd = signal.conditional_gamma_sd();
  const double zq = (p.gamma1 - signal.conditional_gamma_mean(Qualification::qualified, theta)) / sd;
  const double zu = (p.gamma1 - signal.conditional_gamma_mean(Qualification::unqualified, theta)) / sd;
  const double log_sq = normal::log_survival(zq);
  const double log_su = normal::log_survival(zu);
  p.surv_q = std::exp(log_sq);
  p.surv_u = std::exp(log_su);

  p.s2 = p.phi * p.surv_q + (1.0 - p.phi) * p.surv_u;
  // Log-survival difference keeps s1 finite when both survivals underflow.
  p.s1 = logistic(log_odds + log_sq - log_su);
  return p;
}

double score_s1(const ModelConfig& config, double theta, double tau) {
  return evaluate_scores(config, theta, tau).s1;
}

double score_s2(const ModelConfig& config, double theta, double tau) {
  return evaluate_scores(config, theta, tau).s2;
}

}  // namespace screening
