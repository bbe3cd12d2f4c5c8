#pragma once

#include <vector>

#include "screening/model.hpp"

namespace screening {

/// Both algorithmic scores at one (theta, tau) cell, with the quantities they
/// are assembled from.
struct ScorePoint {
  double theta = 0.0;
  double tau = 0.0;
  double s1 = 0.0;      // E[Q | Theta = theta, A = 1]
  double s2 = 0.0;      // E[A | Theta = theta]
  double gamma1 = 0.0;  // first-stage acceptance iff Gamma > gamma1
  double phi = 0.0;     // P(Q = 1 | Theta = theta)
  double surv_q = 0.0;  // P(Gamma > gamma1 | Q = 1, Theta = theta)
  double surv_u = 0.0;  // P(Gamma > gamma1 | Q = 0, Theta = theta)
};

/// Closed interval [-x_u + eps, x_q - eps] on which curves are evaluated.
struct TauInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Default evaluation clamp, relative to x_q + x_u.
inline constexpr double kTauClampRelative = 1e-6;

TauInterval clamped_tau_interval(const PayoffParams& payoffs,
                                 double relative_eps = kTauClampRelative);

/// `count` equally spaced points spanning the clamped interval.
std::vector<double> clamped_tau_grid(const PayoffParams& payoffs, std::size_t count,
                                     double relative_eps = kTauClampRelative);

/// Throws DomainError unless tau lies in the open interval (-x_u, x_q).
void require_open_tau(const PayoffParams& payoffs, double tau);

/// T(tau) = (1 - pi)(x_u + tau) / (pi (x_q - tau)); the human accepts iff
/// l(theta, gamma) > T(tau).
double acceptance_threshold_T(const PayoffParams& payoffs, double tau);
double log_acceptance_threshold(const PayoffParams& payoffs, double tau);

/// Infimum gamma with l(theta, gamma) > T(tau), solved from the affine log
/// likelihood ratio.
double gamma1(const ModelConfig& config, double theta, double tau);

ScorePoint evaluate_scores(const ModelConfig& config, double theta, double tau);

double score_s1(const ModelConfig& config, double theta, double tau);
double score_s2(const ModelConfig& config, double theta, double tau);

}  // namespace screening
