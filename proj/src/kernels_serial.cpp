#include <cmath>
#include <numbers>

#include "screening/kernels.hpp"
#include "screening/philox.hpp"
#include "screening/regret.hpp"

namespace screening {

Applicant draw_applicant(const ModelConfig& config, std::uint64_t seed, std::uint32_t stream,
                         std::uint64_t index) {
  const auto key = Philox4x32::key_from_seed(seed);
  const auto lo = static_cast<std::uint32_t>(index);
  const auto hi = static_cast<std::uint32_t>(index >> 32);
  const auto b0 = Philox4x32::generate({lo, hi, stream, 0u}, key);
  const auto b1 = Philox4x32::generate({lo, hi, stream, 1u}, key);

  const double u_class = unit_open(join_words(b0[0], b0[1]));
  const double u_radius = unit_open(join_words(b0[2], b0[3]));
  const double u_angle = unit_open(join_words(b1[0], b1[1]));

  const double radius = std::sqrt(-2.0 * std::log(u_radius));
  const double angle = 2.0 * std::numbers::pi * u_angle;
  const double z1 = radius * std::cos(angle);
  const double z2 = radius * std::sin(angle);

  const auto& m = config.signal().model();
  Applicant a;
  a.q = u_class < config.payoffs().pi ? Qualification::qualified : Qualification::unqualified;
  const auto& mu = a.q == Qualification::qualified ? m.mu_q : m.mu_u;
  a.theta = mu[0] + m.sigma_theta * z1;
  a.gamma = mu[1] + m.sigma_gamma * (m.rho * z1 + std::sqrt(1.0 - m.rho * m.rho) * z2);
  return a;
}

namespace serial {

void score_grid(const ModelConfig& config, std::span<const double> thetas,
                std::span<const double> taus, std::span<ScorePoint> out) {
  const std::size_t nt = taus.size();
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      out[i * nt + j] = evaluate_scores(config, thetas[i], taus[j]);
    }
  }
}

void sample_applicants(const ModelConfig& config, std::uint64_t seed, std::uint32_t stream,
                       std::span<Applicant> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = draw_applicant(config, seed, stream, i);
  }
}

void stage_one_decisions(const ModelConfig& config, std::span<const Applicant> applicants,
                         double tau, std::span<std::uint8_t> accepted) {
  const double log_t = log_acceptance_threshold(config.payoffs(), tau);
  const CertifiedSignal& signal = config.signal();
  for (std::size_t i = 0; i < applicants.size(); ++i) {
    accepted[i] = signal.log_likelihood_ratio(applicants[i].theta, applicants[i].gamma) > log_t;
  }
}

void paired_regret(const ModelConfig& config, std::span<const Applicant> applicants,
                   double tau, std::span<double> u_s1, std::span<double> u_s2) {
  const PayoffParams& payoffs = config.payoffs();
  for (std::size_t i = 0; i < applicants.size(); ++i) {
    const ScorePoint p = evaluate_scores(config, applicants[i].theta, tau);
    u_s1[i] = regret_value(payoffs, p.s1, applicants[i].q);
    u_s2[i] = regret_value(payoffs, p.s2, applicants[i].q);
  }
}

double blocked_sum(std::span<const double> values) {
  double total = 0.0;
  for (std::size_t start = 0; start < values.size(); start += kReductionBlock) {
    const std::size_t end = std::min(values.size(), start + kReductionBlock);
    double block = 0.0;
    for (std::size_t i = start; i < end; ++i) block += values[i];
    total += block;
  }
  return total;
}

}  // namespace serial
}  // namespace screening
