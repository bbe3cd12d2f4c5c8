#pragma once

#include <array>
#include <optional>
#include <string>

#include "screening/error.hpp"

namespace screening {

enum class Qualification : int { unqualified = 0, qualified = 1 };

inline int as_bit(Qualification q) { return static_cast<int>(q); }

/// Prior and payoff parameters of the screening problem.
///
/// `pi` is P(Q = 1); hiring a qualified applicant pays `x_q`, hiring an
/// unqualified one costs `x_u`; `c` is the group-invariant second-stage
/// cutoff on ex ante payoff.
struct PayoffParams {
  double pi = 0.5;
  double x_q = 1.0;
  double x_u = 1.0;
  double c = 0.0;

  /// Throws InvalidModelError naming the first violated invariant.
  void validate() const;

  /// Critical score (x_u + c) / (x_q + x_u); the score at which N(s) = c.
  double beta() const { return (x_u + c) / (x_q + x_u); }

  /// Length of the prejudice interval (-x_u, x_q).
  double span() const { return x_q + x_u; }
};

/// Class-conditional laws of (Theta, Gamma): bivariate normal with class
/// specific means and a covariance shared by both classes.
struct GaussianSignalModel {
  std::array<double, 2> mu_q{1.0, 1.0};
  std::array<double, 2> mu_u{0.0, 0.0};
  double sigma_theta = 1.0;
  double sigma_gamma = 1.0;
  double rho = 0.0;
};

enum class SignalCoordinate { theta, gamma };

std::string to_string(SignalCoordinate coordinate);

/// The log likelihood ratio of a shared-covariance Gaussian family is affine:
/// log l(theta, gamma) = intercept + weight_theta * theta + weight_gamma * gamma
/// with (weight_theta, weight_gamma) = Sigma^{-1} (mu_q - mu_u).
struct MlrpCertificate {
  double intercept = 0.0;
  double weight_theta = 0.0;
  double weight_gamma = 0.0;
};

struct MlrpCheck {
  MlrpCertificate certificate;
  std::optional<SignalCoordinate> violation;

  bool accepted() const { return !violation.has_value(); }
  std::string describe() const;
};

/// Evaluates the linear-algebra MLRP certificate. A rejection names the first
/// coordinate whose weight is not strictly positive. Throws InvalidModelError
/// when the covariance is not positive definite.
MlrpCheck validate_mlrp(const GaussianSignalModel& signal);

class MlrpRejected : public InvalidModelError {
 public:
  MlrpRejected(SignalCoordinate coordinate, const std::string& what)
      : InvalidModelError(what), coordinate_(coordinate) {}
  SignalCoordinate coordinate() const { return coordinate_; }

 private:
  SignalCoordinate coordinate_;
};

/// A Gaussian signal model whose strict MLRP has been certified. Only
/// constructible through `certify`, so every instance is known-good.
class CertifiedSignal {
 public:
  /// Throws InvalidModelError (or MlrpRejected) if `signal` is unusable.
  static CertifiedSignal certify(const GaussianSignalModel& signal);

  const GaussianSignalModel& model() const { return model_; }
  const MlrpCertificate& certificate() const { return certificate_; }

  double log_likelihood_ratio(double theta, double gamma) const {
    return certificate_.intercept + certificate_.weight_theta * theta +
           certificate_.weight_gamma * gamma;
  }

  /// log f_q(theta) - log f_u(theta) for the Theta marginals.
  double marginal_log_ratio(double theta) const;

  double theta_mean(Qualification q) const;
  double theta_sd() const { return model_.sigma_theta; }

  /// Mean of Gamma given Theta = theta and Q = q.
  double conditional_gamma_mean(Qualification q, double theta) const;
  /// Standard deviation of Gamma given Theta (shared by both classes).
  double conditional_gamma_sd() const { return conditional_sd_; }

 private:
  CertifiedSignal(const GaussianSignalModel& model, const MlrpCertificate& cert);

  GaussianSignalModel model_;
  MlrpCertificate certificate_;
  double conditional_slope_;
  double conditional_sd_;
};

/// Complete, validated description of the world.
class ModelConfig {
 public:
  static ModelConfig create(const PayoffParams& payoffs,
                            const GaussianSignalModel& signal);

  const PayoffParams& payoffs() const { return payoffs_; }
  const CertifiedSignal& signal() const { return signal_; }
  double beta() const { return payoffs_.beta(); }

  /// pi = 0.4, x_q = x_u = 1, c = 0, mu_q = (1, 1), mu_u = (0, 0), Sigma = I.
  static ModelConfig baseline();

 private:
  ModelConfig(const PayoffParams& payoffs, const CertifiedSignal& signal)
      : payoffs_(payoffs), signal_(signal) {}

  PayoffParams payoffs_;
  CertifiedSignal signal_;
};

/// l(theta, gamma) = h_q / h_u, exponentiated from the affine log form.
double likelihood_ratio(const CertifiedSignal& signal, double theta, double gamma);

/// Human posterior P(Q = 1 | Theta = theta, Gamma = gamma).
double posterior_kappa(const ModelConfig& config, double theta, double gamma);

/// log(phi / (1 - phi)) with phi = P(Q = 1 | Theta = theta).
double marginal_log_odds(const ModelConfig& config, double theta);

/// phi(theta) = P(Q = 1 | Theta = theta).
double marginal_posterior_phi(const ModelConfig& config, double theta);

/// 1 / (1 + exp(-x)) without overflow for large |x|.
double logistic(double x);

}  // namespace screening
