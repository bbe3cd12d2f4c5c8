#include "screening/regret.hpp"

#include <algorithm>
#include <cmath>

#include "screening/normal.hpp"
#include "screening/roots.hpp"
#include "screening/thresholds.hpp"

namespace screening {

std::string to_string(Algorithm algo) { return algo == Algorithm::s1 ? "s1" : "s2"; }

double ex_ante_payoff(const PayoffParams& payoffs, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("score must lie in [0, 1]");
  }
  return s * payoffs.x_q - (1.0 - s) * payoffs.x_u;
}

bool second_stage_accepts(const PayoffParams& payoffs, double s) {
  return ex_ante_payoff(payoffs, s) > payoffs.c;
}

RegretRecord individual_regret(const PayoffParams& payoffs, double s, Qualification q) {
  RegretRecord r;
  r.q = q;
  r.score = s;
  r.n_ex_ante = ex_ante_payoff(payoffs, s);
  r.accepted = r.n_ex_ante > payoffs.c;
  r.p_ex_post = r.accepted ? hire_payoff(payoffs, q) : 0.0;
  r.u = r.n_ex_ante - r.p_ex_post;
  return r;
}

double regret_value(const PayoffParams& payoffs, double s, Qualification q) {
  const double n = s * payoffs.x_q - (1.0 - s) * payoffs.x_u;
  return n > payoffs.c ? n - hire_payoff(payoffs, q) : n;
}

RegretCurve regret_curve(const ModelConfig& config, double theta, Qualification q,
                         std::span<const double> taus) {
  const PayoffParams& payoffs = config.payoffs();
  RegretCurve curve;
  curve.theta = theta;
  curve.q = q;
  curve.s1.reserve(taus.size());
  curve.s2.reserve(taus.size());
  for (double tau : taus) {
    const ScorePoint p = evaluate_scores(config, theta, tau);
    for (Algorithm algo : {Algorithm::s1, Algorithm::s2}) {
      RegretRecord r = individual_regret(payoffs, score_of(p, algo), q);
      r.theta = theta;
      r.tau = tau;
      r.algo = algo;
      (algo == Algorithm::s1 ? curve.s1 : curve.s2).push_back(r);
    }
  }

  // Crossing beta upward (s1) switches A' on and removes the hire payoff
  // from u; crossing downward (s2) restores it.
  const double jump = -hire_payoff(payoffs, q);
  const CriticalPrejudices cp = find_critical_prejudices(config, theta);
  if (cp.tau_d1) {
    curve.jump_s1 = JumpAnnotation{Algorithm::s1, *cp.tau_d1, jump};
  }
  curve.jump_s2 = JumpAnnotation{Algorithm::s2, cp.tau_d2, -jump};
  return curve;
}

std::pair<double, double> theta_support(const ModelConfig& config, double sd_span) {
  const auto& m = config.signal().model();
  const double lo = std::min(m.mu_q[0], m.mu_u[0]) - sd_span * m.sigma_theta;
  const double hi = std::max(m.mu_q[0], m.mu_u[0]) + sd_span * m.sigma_theta;
  return {lo, hi};
}

std::vector<double> acceptance_breakpoints(const ModelConfig& config, Algorithm algo,
                                           double tau, double lo, double hi,
                                           std::size_t scan_points) {
  const double beta = config.beta();
  auto excess = [&](double theta) {
    return score_of(evaluate_scores(config, theta, tau), algo) - beta;
  };
  std::vector<double> points;
  const std::size_t n = std::max<std::size_t>(scan_points, 2);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  double prev_x = lo;
  double prev_f = excess(lo);
  for (std::size_t i = 1; i < n; ++i) {
    const double x = i + 1 == n ? hi : lo + step * static_cast<double>(i);
    const double fx = excess(x);
    if ((prev_f > 0.0) != (fx > 0.0)) {
      BisectionOptions opts;
      opts.f_tol = 1e-14;
      points.push_back(bisect(excess, prev_x, x, opts).root);
    }
    prev_x = x;
    prev_f = fx;
  }
  return points;
}

double expected_regret(const ModelConfig& config, Algorithm algo, double tau,
                       const ExpectationOptions& opts) {
  require_open_tau(config.payoffs(), tau);
  const PayoffParams& payoffs = config.payoffs();
  const CertifiedSignal& signal = config.signal();
  const double pi = payoffs.pi;
  const double sd = signal.theta_sd();
  const double mean_q = signal.theta_mean(Qualification::qualified);
  const double mean_u = signal.theta_mean(Qualification::unqualified);

  // E[u | Theta] weighted by the mixture density; the class-conditional
  // expectation of P reduces to the class weights pi f_q and (1 - pi) f_u.
  auto integrand = [&](double theta) {
    const double s = score_of(evaluate_scores(config, theta, tau), algo);
    const double wq = pi * normal::pdf((theta - mean_q) / sd) / sd;
    const double wu = (1.0 - pi) * normal::pdf((theta - mean_u) / sd) / sd;
    const double n = s * payoffs.x_q - (1.0 - s) * payoffs.x_u;
    if (n > payoffs.c) {
      return wq * (n - payoffs.x_q) + wu * (n + payoffs.x_u);
    }
    return (wq + wu) * n;
  };

  const auto [lo, hi] = theta_support(config, opts.theta_sd_span);
  std::vector<double> cuts{lo};
  for (double b : acceptance_breakpoints(config, algo, tau, lo, hi, opts.breakpoint_scan)) {
    cuts.push_back(b);
  }
  cuts.push_back(hi);
  return integrate_piecewise(integrand, cuts, opts.quadrature).value;
}

}  // namespace screening
