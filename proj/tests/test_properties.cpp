// Randomized invariant checks. Each property draws its inputs from a seeded
// generator and reports the trial index and inputs of the first failure.
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "random_configs.hpp"
#include "screening/population.hpp"
#include "screening/regret.hpp"
#include "screening/thresholds.hpp"

using namespace screening;

namespace {

struct Draw {
  ModelConfig config;
  double theta;
  double gamma;
  double tau_a;
  double tau_b;  // tau_a < tau_b
  double h;
};

Draw draw(std::mt19937_64& rng) {
  ModelConfig cfg = fixtures::random_config(rng);
  const auto& s = cfg.signal().model();
  std::normal_distribution<double> z;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const TauInterval iv = clamped_tau_interval(cfg.payoffs());
  double a = iv.lo + (iv.hi - iv.lo) * u(rng);
  double b = iv.lo + (iv.hi - iv.lo) * u(rng);
  if (a > b) std::swap(a, b);
  if (a == b) b = std::nextafter(b, iv.hi);
  return {cfg,
          s.mu_u[0] + 2.5 * s.sigma_theta * z(rng),
          s.mu_u[1] + 2.5 * s.sigma_gamma * z(rng),
          a,
          b,
          std::exp(-8.0 * u(rng))};
}

std::string describe(const Draw& d) {
  std::ostringstream os;
  os.precision(17);
  os << "pi=" << d.config.payoffs().pi << " x_q=" << d.config.payoffs().x_q
     << " x_u=" << d.config.payoffs().x_u << " c=" << d.config.payoffs().c
     << " rho=" << d.config.signal().model().rho << " theta=" << d.theta << " gamma=" << d.gamma
     << " tau=(" << d.tau_a << ", " << d.tau_b << ") h=" << d.h;
  return os.str();
}

template <class Prop>
void for_all(std::uint64_t seed, int trials, Prop prop) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Draw d = draw(rng);
    std::string why;
    if (!prop(d, why)) {
      ADD_FAILURE() << "trial " << t << " (seed " << seed << "): " << why << "\n  " << describe(d);
      return;
    }
  }
}

// Residual below tol, or the sign change is resolved to adjacent doubles.
template <class F>
bool resolved_root(F&& f, double root, double tol) {
  if (std::abs(f(root)) < tol) return true;
  const double below = f(std::nextafter(root, -INFINITY));
  const double above = f(std::nextafter(root, INFINITY));
  return std::signbit(below) != std::signbit(above);
}

}  // namespace

TEST(Property, LikelihoodRatioIncreasingInEachSignal) {
  for_all(101, 3000, [](const Draw& d, std::string& why) {
    const auto& s = d.config.signal();
    const double base = s.log_likelihood_ratio(d.theta, d.gamma);
    if (!(s.log_likelihood_ratio(d.theta + d.h, d.gamma) > base)) return why = "theta step", false;
    if (!(s.log_likelihood_ratio(d.theta, d.gamma + d.h) > base)) return why = "gamma step", false;
    return true;
  });
}

TEST(Property, PosteriorMonotoneBoundedAndPriorAtUnitRatio) {
  for_all(102, 3000, [](const Draw& d, std::string& why) {
    const double k = posterior_kappa(d.config, d.theta, d.gamma);
    if (!(k > 0.0 && k < 1.0)) return why = "kappa out of (0,1)", false;
    if (posterior_kappa(d.config, d.theta + d.h, d.gamma) < k - 1e-12) return why = "theta", false;
    if (posterior_kappa(d.config, d.theta, d.gamma + d.h) < k - 1e-12) return why = "gamma", false;
    const MlrpCertificate& c = d.config.signal().certificate();
    const double g0 = (-c.intercept - c.weight_theta * d.theta) / c.weight_gamma;
    if (std::abs(posterior_kappa(d.config, d.theta, g0) - d.config.payoffs().pi) > 1e-12) {
      return why = "kappa != pi at l = 1", false;
    }
    return true;
  });
}

TEST(Property, Gamma1IsTheHumanAcceptanceBoundary) {
  for_all(103, 3000, [](const Draw& d, std::string& why) {
    const double g1 = gamma1(d.config, d.theta, d.tau_a);
    const double delta = 1e-7 * std::max(1.0, std::abs(g1));
    if (!human_accepts(d.config, d.theta, g1 + delta, d.tau_a)) return why = "above", false;
    if (human_accepts(d.config, d.theta, g1 - delta, d.tau_a)) return why = "below", false;
    if (human_accepts(d.config, d.theta, d.gamma, d.tau_a) !=
        human_accepts_by_payoff(d.config, d.theta, d.gamma, d.tau_a)) {
      return why = "rule forms disagree", false;
    }
    return true;
  });
}

TEST(Property, ScoresMonotoneInPrejudice) {
  for_all(104, 3000, [](const Draw& d, std::string& why) {
    const ScorePoint a = evaluate_scores(d.config, d.theta, d.tau_a);
    const ScorePoint b = evaluate_scores(d.config, d.theta, d.tau_b);
    if (!(b.s2 <= a.s2)) return why = "s2 increased", false;
    if (!(b.s1 >= a.s1)) return why = "s1 decreased", false;
    if (!(a.s1 >= a.phi)) return why = "s1 < phi", false;
    if (a.phi < 1 - 1e-9 && a.surv_u < 1 - 1e-9 && !(a.s1 > a.phi)) return why = "s1 == phi", false;
    return true;
  });
}

TEST(Property, ThresholdStructure) {
  for_all(105, 400, [](const Draw& d, std::string& why) {
    const ThresholdReport r = threshold_report(d.config, d.theta);
    const double tol = kRootTolerance;
    const auto gap = [&](double t) {
      return score_s1(d.config, d.theta, t) - score_s2(d.config, d.theta, t);
    };
    const auto ex2 = [&](double t) { return score_s2(d.config, d.theta, t) - r.beta; };
    const auto ex1 = [&](double t) { return score_s1(d.config, d.theta, t) - r.beta; };
    if (!resolved_root(gap, r.tau_star, tol)) {
      return why = "tau* residual", false;
    }
    if (r.tau_d1.has_value() != (r.phi < r.beta) && !r.knife_edge) return why = "existence", false;
    if (!resolved_root(ex2, r.tau_d2, tol)) {
      return why = "tau_d2 residual", false;
    }
    if (r.tau_d1) {
      if (!resolved_root(ex1, *r.tau_d1, tol)) {
        return why = "tau_d1 residual", false;
      }
      const double lo = std::min(*r.tau_d1, r.tau_d2);
      const double hi = std::max(*r.tau_d1, r.tau_d2);
      if (hi - lo > 1e-8 && !(r.tau_star > lo && r.tau_star < hi)) return why = "between", false;
    }
    for (auto q : {Qualification::qualified, Qualification::unqualified}) {
      const auto n = find_regret_crossings(d.config, d.theta, q).crossings.size();
      if (n > 3 || (r.tau_d1 && n < 1)) return why = "crossing count " + std::to_string(n), false;
    }
    return true;
  });
}

TEST(Property, RegretIdentity) {
  for_all(106, 3000, [](const Draw& d, std::string& why) {
    const PayoffParams& p = d.config.payoffs();
    const double s = score_s1(d.config, d.theta, d.tau_a);
    for (auto q : {Qualification::qualified, Qualification::unqualified}) {
      const RegretRecord r = individual_regret(p, s, q);
      if (r.u != r.n_ex_ante - r.p_ex_post) return why = "u != N - P", false;
      if (r.accepted != (r.n_ex_ante > p.c)) return why = "acceptance rule", false;
    }
    if (std::abs(ex_ante_payoff(p, p.beta()) - p.c) > 1e-14) return why = "N(beta) != c", false;
    return true;
  });
}
