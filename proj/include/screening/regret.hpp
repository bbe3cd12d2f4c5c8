#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "screening/model.hpp"
#include "screening/quadrature.hpp"
#include "screening/scores.hpp"

namespace screening {

enum class Algorithm { s1, s2 };

std::string to_string(Algorithm algo);

inline double score_of(const ScorePoint& p, Algorithm algo) {
  return algo == Algorithm::s1 ? p.s1 : p.s2;
}

struct RegretRecord {
  double theta = 0.0;
  Qualification q = Qualification::unqualified;
  double tau = 0.0;
  Algorithm algo = Algorithm::s1;
  double score = 0.0;
  double n_ex_ante = 0.0;  // N(s)
  bool accepted = false;   // A'(s)
  double p_ex_post = 0.0;  // P(s)
  double u = 0.0;          // N(s) - P(s)
};

/// N(s) = s x_q - (1 - s) x_u. Throws DomainError for s outside [0, 1].
double ex_ante_payoff(const PayoffParams& payoffs, double s);

/// A'(s) = 1{N(s) > c}; a score exactly at beta is rejected.
bool second_stage_accepts(const PayoffParams& payoffs, double s);

/// Payoff realised from hiring an applicant of qualification q.
inline double hire_payoff(const PayoffParams& payoffs, Qualification q) {
  return q == Qualification::qualified ? payoffs.x_q : -payoffs.x_u;
}

/// Regret u = N(s) - A'(s) (q x_q - (1 - q) x_u). The theta/tau/algo fields of
/// the record are left for the caller to fill in.
RegretRecord individual_regret(const PayoffParams& payoffs, double s, Qualification q);

/// Scalar regret without the record, for inner loops.
double regret_value(const PayoffParams& payoffs, double s, Qualification q);

struct JumpAnnotation {
  Algorithm algo = Algorithm::s1;
  double tau_d = 0.0;
  // u(tau_d+) - u(tau_d-): -x_q / +x_u for s1, the opposite for s2.
  double height = 0.0;
};

struct RegretCurve {
  double theta = 0.0;
  Qualification q = Qualification::unqualified;
  std::vector<RegretRecord> s1;  // one record per tau grid point
  std::vector<RegretRecord> s2;
  std::optional<JumpAnnotation> jump_s1;  // absent when u(s1) never jumps
  JumpAnnotation jump_s2;
};

/// Individual regret of both algorithms along a tau grid for a fixed
/// applicant, with the jump of each curve located at its critical prejudice.
RegretCurve regret_curve(const ModelConfig& config, double theta, Qualification q,
                         std::span<const double> taus);

struct ExpectationOptions {
  QuadratureOptions quadrature{};
  // Theta range: this many marginal standard deviations beyond the class means.
  double theta_sd_span = 10.0;
  // Grid on which sign changes of s(theta) - beta are bracketed.
  std::size_t breakpoint_scan = 512;
};

/// E[u(s(Theta, tau))] under the population law, by quadrature over theta
/// split at the theta-breakpoints of the acceptance indicator A'(s).
double expected_regret(const ModelConfig& config, Algorithm algo, double tau,
                       const ExpectationOptions& opts = {});

/// Sorted theta points where s(theta, tau) crosses beta, inside [lo, hi].
std::vector<double> acceptance_breakpoints(const ModelConfig& config, Algorithm algo,
                                           double tau, double lo, double hi,
                                           std::size_t scan_points);

/// Theta integration range used by expected_regret.
std::pair<double, double> theta_support(const ModelConfig& config, double sd_span);

}  // namespace screening
