#include "screening/thresholds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "screening/population.hpp"
#include "screening/roots.hpp"

namespace screening {

std::string to_string(CriticalOrdering ordering) {
  switch (ordering) {
    case CriticalOrdering::d1_below_d2: return "d1<d2";
    case CriticalOrdering::d2_below_d1: return "d2<d1";
    case CriticalOrdering::coincident: return "d1=d2";
    case CriticalOrdering::d1_absent: return "d1-absent";
  }
  return "unknown";
}

std::string to_string(CrossingCase c) {
  switch (c) {
    case CrossingCase::unqualified: return "unqualified";
    case CrossingCase::qualified_three: return "qualified-three";
    case CrossingCase::qualified_two: return "qualified-two";
    case CrossingCase::qualified_bounded: return "qualified-bounded";
    case CrossingCase::coincident: return "coincident";
    case CrossingCase::trivial: return "trivial";
  }
  return "unknown";
}

std::string to_string(Environment env) {
  return env == Environment::regular ? "regular" : "irregular";
}

namespace {

// Progressively tighter clamps tried before declaring the root unresolvable.
constexpr std::array<double, 3> kClampLadder = {kTauClampRelative, 1e-9, 1e-12};

// Critical prejudices closer than this are treated as one point.
constexpr double kCoincidenceTolerance = 1e-8;

BisectionOptions root_options(const PayoffParams& p, double tol) {
  BisectionOptions opts;
  opts.f_tol = tol;
  opts.x_tol = kRootBracketRelative * p.span();
  return opts;
}

BisectionOptions exact_options() {
  BisectionOptions opts;
  opts.f_tol = 0.0;
  opts.x_tol = 0.0;
  return opts;
}

// Root of a monotone curve in tau, searched on the evaluation clamp and then
// on tighter clamps if the sign change sits closer to an endpoint.
template <typename F>
std::optional<double> root_on_clamp(F&& f, const PayoffParams& p, const BisectionOptions& opts) {
  for (double rel : kClampLadder) {
    const TauInterval iv = clamped_tau_interval(p, rel);
    const double f_lo = f(iv.lo);
    const double f_hi = f(iv.hi);
    if ((f_lo < 0.0) != (f_hi < 0.0) || f_lo == 0.0 || f_hi == 0.0) {
      return bisect(f, iv.lo, iv.hi, opts).root;
    }
  }
  return std::nullopt;
}

[[noreturn]] void endpoint_resolution_error(const char* what, double theta) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": no sign change on the clamped tau interval at theta = " << theta
     << " even at relative eps " << kClampLadder.back()
     << "; the root lies closer to an endpoint than the clamp resolves (use a smaller eps)";
  throw NumericError(os.str());
}

CriticalPrejudices critical_prejudices(const ModelConfig& config, double theta,
                                       const BisectionOptions& opts) {
  const PayoffParams& p = config.payoffs();
  const double beta = config.beta();
  CriticalPrejudices cp;

  auto s2_excess = [&](double tau) { return score_s2(config, theta, tau) - beta; };
  const auto d2 = root_on_clamp(s2_excess, p, opts);
  if (!d2) endpoint_resolution_error("critical prejudice of s2", theta);
  cp.tau_d2 = *d2;

  const double phi = marginal_posterior_phi(config, theta);
  constexpr double kKnifeEdge = 1e-14;
  if (phi >= beta) {
    cp.knife_edge = phi - beta <= kKnifeEdge;
    return cp;
  }
  auto s1_excess = [&](double tau) { return score_s1(config, theta, tau) - beta; };
  cp.tau_d1 = root_on_clamp(s1_excess, p, opts);
  if (!cp.tau_d1) {
    if (beta - phi > 1e-9) endpoint_resolution_error("critical prejudice of s1", theta);
    // s1 already exceeds beta at the tightest clamp: phi sits on beta.
    cp.knife_edge = true;
  }
  return cp;
}

}  // namespace

double find_tau_star(const ModelConfig& config, double theta, double tol) {
  auto gap = [&](double tau) {
    const ScorePoint p = evaluate_scores(config, theta, tau);
    return p.s1 - p.s2;
  };
  const auto root = root_on_clamp(gap, config.payoffs(), root_options(config.payoffs(), tol));
  if (!root) endpoint_resolution_error("equalizing prejudice", theta);
  return *root;
}

CriticalPrejudices find_critical_prejudices(const ModelConfig& config, double theta,
                                            double tol) {
  return critical_prejudices(config, theta, root_options(config.payoffs(), tol));
}

CriticalPrejudices find_critical_prejudices_exact(const ModelConfig& config, double theta) {
  return critical_prejudices(config, theta, exact_options());
}

ThresholdReport threshold_report(const ModelConfig& config, double theta, double tol) {
  ThresholdReport r;
  r.theta = theta;
  r.phi = marginal_posterior_phi(config, theta);
  r.beta = config.beta();
  r.tau_star = find_tau_star(config, theta, tol);
  const ScorePoint at_star = evaluate_scores(config, theta, r.tau_star);
  r.equalized_score = 0.5 * (at_star.s1 + at_star.s2);
  const CriticalPrejudices cp = find_critical_prejudices(config, theta, tol);
  r.tau_d1 = cp.tau_d1;
  r.tau_d2 = cp.tau_d2;
  r.knife_edge = cp.knife_edge;
  if (!cp.tau_d1) {
    r.ordering = CriticalOrdering::d1_absent;
  } else if (std::abs(*cp.tau_d1 - cp.tau_d2) < kCoincidenceTolerance) {
    r.ordering = CriticalOrdering::coincident;
  } else if (*cp.tau_d1 < cp.tau_d2) {
    r.ordering = CriticalOrdering::d1_below_d2;
  } else {
    r.ordering = CriticalOrdering::d2_below_d1;
  }
  return r;
}

CrossingReport find_regret_crossings(const ModelConfig& config, double theta, Qualification q,
                                     double tol) {
  const PayoffParams& p = config.payoffs();
  const CriticalPrejudices cp = find_critical_prejudices(config, theta, tol);
  const TauInterval iv = clamped_tau_interval(p);

  CrossingReport report;
  report.theta = theta;
  report.q = q;

  const bool coincident =
      cp.tau_d1 && std::abs(*cp.tau_d1 - cp.tau_d2) < kCoincidenceTolerance;
  std::vector<double> jumps;
  if (coincident) {
    jumps.push_back(0.5 * (*cp.tau_d1 + cp.tau_d2));
  } else {
    jumps.push_back(cp.tau_d2);
    if (cp.tau_d1) jumps.push_back(*cp.tau_d1);
  }
  std::sort(jumps.begin(), jumps.end());

  std::vector<double> cuts{iv.lo};
  for (double j : jumps) {
    if (j > iv.lo && j < iv.hi) cuts.push_back(j);
  }
  cuts.push_back(iv.hi);

  const double y = hire_payoff(p, q);
  const BisectionOptions opts = root_options(p, tol);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    // Acceptance decisions are constant inside the cell; read them off the
    // midpoint and keep them fixed so g is the continuous extension.
    const ScorePoint mid = evaluate_scores(config, theta, 0.5 * (a + b));
    const double a1 = second_stage_accepts(p, mid.s1) ? 1.0 : 0.0;
    const double a2 = second_stage_accepts(p, mid.s2) ? 1.0 : 0.0;
    auto g = [&](double tau) {
      const ScorePoint s = evaluate_scores(config, theta, tau);
      return (s.s1 - s.s2) * p.span() - (a1 - a2) * y;
    };
    const double ga = g(a);
    const double gb = g(b);
    if (!((ga <= 0.0 && gb > 0.0) || (ga < 0.0 && gb >= 0.0))) continue;
    const double root = bisect(g, a, b, opts).root;
    bool boundary = false;
    for (double j : jumps) {
      boundary = boundary || std::abs(root - j) <= 10.0 * tol;
    }
    report.crossings.push_back({root, boundary});
  }

  const double phi = marginal_posterior_phi(config, theta);
  if (q == Qualification::unqualified) {
    report.case_label = CrossingCase::unqualified;
  } else if (!cp.tau_d1) {
    report.case_label = CrossingCase::trivial;
  } else if (coincident) {
    report.case_label = CrossingCase::coincident;
  } else if (p.x_q - p.c > p.x_u) {
    report.case_label = ex_ante_payoff(p, phi) < 0.0 ? CrossingCase::qualified_three
                                                     : CrossingCase::qualified_two;
  } else {
    report.case_label = CrossingCase::qualified_bounded;
  }
  return report;
}

double regret_gap(const ModelConfig& config, double tau, const ExpectationOptions& opts) {
  return expected_regret(config, Algorithm::s2, tau, opts) -
         expected_regret(config, Algorithm::s1, tau, opts);
}

namespace {

TauBarResult tau_bar_analytic(const ModelConfig& config, const TauBarOptions& opts,
                              Environment env) {
  const PayoffParams& p = config.payoffs();
  const TauInterval iv = clamped_tau_interval(p);
  auto d = [&](double tau) { return regret_gap(config, tau, opts.expectation); };
  TauBarResult r;
  r.environment = env;
  if (env == Environment::irregular) {
    for (double tau : clamped_tau_grid(p, opts.grid)) {
      if (!(d(tau) < 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "irregular environment but D(" << tau << ") >= 0";
        throw NumericError(os.str());
      }
    }
    r.reason = "irregular";
    return r;
  }
  const double d_lo = d(iv.lo);
  const double d_hi = d(iv.hi);
  if (!(d_lo > 0.0 && d_hi < 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "regular environment but D does not change sign on the clamped interval (D(lo) = "
       << d_lo << ", D(hi) = " << d_hi << ")";
    throw NumericError(os.str());
  }
  r.tau_bar = bisect(d, iv.lo, iv.hi, root_options(p, opts.tol)).root;
  r.reason = "regular";
  return r;
}

TauBarResult tau_bar_monte_carlo(const ModelConfig& config, const TauBarOptions& opts,
                                 Environment env) {
  const PayoffParams& p = config.payoffs();
  const TauInterval iv = clamped_tau_interval(p);
  const auto population =
      sample_population(config, opts.m, opts.seed, PopulationStream::stage_two);
  auto gap = [&](double tau) { return average_regret(config, population, tau).gap; };

  TauBarResult r;
  r.environment = env;
  if (env == Environment::irregular) {
    for (double tau : clamped_tau_grid(p, std::min<std::size_t>(opts.grid, 41))) {
      const McEstimate g = gap(tau);
      if (g.mean >= 3.0 * g.standard_error) {
        throw NumericError("irregular environment but the Monte Carlo gap is significantly positive");
      }
    }
    r.reason = "irregular";
    return r;
  }

  auto d = [&](double tau) { return gap(tau).mean; };
  if (!(d(iv.lo) > 0.0 && d(iv.hi) < 0.0)) {
    throw NumericError("Monte Carlo gap does not change sign on the clamped interval; increase m");
  }
  BisectionOptions bo;
  bo.x_tol = 1e-7 * p.span();
  bo.f_tol = 1.0;  // the estimate is noisy; stop on bracket width
  const double root = bisect(d, iv.lo, iv.hi, bo).root;

  const double left = std::max(iv.lo, root - opts.slope_step);
  const double right = std::min(iv.hi, root + opts.slope_step);
  const McEstimate at_root = gap(root);
  const double drop = d(left) - d(right);
  if (!(drop > 3.0 * at_root.standard_error)) {
    std::ostringstream os;
    os.precision(6);
    os << "inconclusive: the Monte Carlo gap changes by " << drop << " across tau_bar +/- "
       << opts.slope_step << " but its standard error is " << at_root.standard_error
       << "; increase m";
    throw NumericError(os.str());
  }
  r.tau_bar = root;
  r.d_standard_error = at_root.standard_error;
  r.tau_standard_error = at_root.standard_error * (right - left) / drop;
  r.reason = "regular";
  return r;
}

}  // namespace

TauBarResult find_tau_bar(const ModelConfig& config, const TauBarOptions& opts) {
  const Environment env = classify_environment(config).classification;
  return opts.mode == TauBarMode::analytic ? tau_bar_analytic(config, opts, env)
                                           : tau_bar_monte_carlo(config, opts, env);
}

}  // namespace screening
