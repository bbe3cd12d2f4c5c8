#include "screening/model.hpp"

#include <cmath>
#include <sstream>

namespace screening {

void PayoffParams::validate() const {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw InvalidModelError("pi must lie in (0, 1)");
  }
  if (!(x_q > 0.0)) {
    throw InvalidModelError("x_q must be positive");
  }
  if (!(x_u > 0.0)) {
    throw InvalidModelError("x_u must be positive");
  }
  if (!(c > -x_u && c < x_q)) {
    throw InvalidModelError("c must lie in (-x_u, x_q) so that beta is in (0, 1)");
  }
}

std::string to_string(SignalCoordinate coordinate) {
  return coordinate == SignalCoordinate::theta ? "theta" : "gamma";
}

std::string MlrpCheck::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "log l(theta, gamma) = " << certificate.intercept << " + "
     << certificate.weight_theta << " * theta + " << certificate.weight_gamma
     << " * gamma";
  if (violation) {
    os << "; MLRP rejected: " << to_string(*violation)
       << " weight is not strictly positive";
  } else {
    os << "; strict MLRP certified";
  }
  return os.str();
}

MlrpCheck validate_mlrp(const GaussianSignalModel& s) {
  if (!(s.sigma_theta > 0.0) || !(s.sigma_gamma > 0.0) || !std::isfinite(s.sigma_theta) ||
      !std::isfinite(s.sigma_gamma)) {
    throw InvalidModelError("covariance is not positive definite: standard deviations must be positive");
  }
  if (!(s.rho > -1.0 && s.rho < 1.0)) {
    throw InvalidModelError("covariance is not positive definite: rho must lie in (-1, 1)");
  }
  for (double v : {s.mu_q[0], s.mu_q[1], s.mu_u[0], s.mu_u[1]}) {
    if (!std::isfinite(v)) throw InvalidModelError("class means must be finite");
  }

  const double vt = s.sigma_theta * s.sigma_theta;
  const double vg = s.sigma_gamma * s.sigma_gamma;
  const double cov = s.rho * s.sigma_theta * s.sigma_gamma;
  const double det = vt * vg - cov * cov;

  const double dt = s.mu_q[0] - s.mu_u[0];
  const double dg = s.mu_q[1] - s.mu_u[1];

  MlrpCheck check;
  auto& cert = check.certificate;
  cert.weight_theta = (vg * dt - cov * dg) / det;
  cert.weight_gamma = (vt * dg - cov * dt) / det;
  // mu_q' S^-1 mu_q - mu_u' S^-1 mu_u = w . (mu_q + mu_u)
  cert.intercept = -0.5 * (cert.weight_theta * (s.mu_q[0] + s.mu_u[0]) +
                           cert.weight_gamma * (s.mu_q[1] + s.mu_u[1]));

  if (!(cert.weight_theta > 0.0)) {
    check.violation = SignalCoordinate::theta;
  } else if (!(cert.weight_gamma > 0.0)) {
    check.violation = SignalCoordinate::gamma;
  }
  return check;
}

CertifiedSignal::CertifiedSignal(const GaussianSignalModel& model,
                                 const MlrpCertificate& cert)
    : model_(model),
      certificate_(cert),
      conditional_slope_(model.rho * model.sigma_gamma / model.sigma_theta),
      conditional_sd_(model.sigma_gamma * std::sqrt(1.0 - model.rho * model.rho)) {}

CertifiedSignal CertifiedSignal::certify(const GaussianSignalModel& signal) {
  const MlrpCheck check = validate_mlrp(signal);
  if (!check.accepted()) {
    throw MlrpRejected(*check.violation, check.describe());
  }
  return CertifiedSignal(signal, check.certificate);
}

double CertifiedSignal::marginal_log_ratio(double theta) const {
  const double v = model_.sigma_theta * model_.sigma_theta;
  const double eq = theta - model_.mu_q[0];
  const double eu = theta - model_.mu_u[0];
  return (eu * eu - eq * eq) / (2.0 * v);
}

double CertifiedSignal::theta_mean(Qualification q) const {
  return q == Qualification::qualified ? model_.mu_q[0] : model_.mu_u[0];
}

double CertifiedSignal::conditional_gamma_mean(Qualification q, double theta) const {
  const auto& mu = q == Qualification::qualified ? model_.mu_q : model_.mu_u;
  return mu[1] + conditional_slope_ * (theta - mu[0]);
}

ModelConfig ModelConfig::create(const PayoffParams& payoffs,
                                const GaussianSignalModel& signal) {
  payoffs.validate();
  return ModelConfig(payoffs, CertifiedSignal::certify(signal));
}

ModelConfig ModelConfig::baseline() {
  PayoffParams p;
  p.pi = 0.4;
  p.x_q = 1.0;
  p.x_u = 1.0;
  p.c = 0.0;
  return create(p, GaussianSignalModel{});
}

double likelihood_ratio(const CertifiedSignal& signal, double theta, double gamma) {
  return std::exp(signal.log_likelihood_ratio(theta, gamma));
}

double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double posterior_kappa(const ModelConfig& config, double theta, double gamma) {
  const double pi = config.payoffs().pi;
  const double log_prior_odds = std::log(pi) - std::log1p(-pi);
  return logistic(log_prior_odds + config.signal().log_likelihood_ratio(theta, gamma));
}

double marginal_log_odds(const ModelConfig& config, double theta) {
  const double pi = config.payoffs().pi;
  return std::log(pi) - std::log1p(-pi) + config.signal().marginal_log_ratio(theta);
}

double marginal_posterior_phi(const ModelConfig& config, double theta) {
  return logistic(marginal_log_odds(config, theta));
}

}  // namespace screening
