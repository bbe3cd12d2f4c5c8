#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "screening/kernels.hpp"
#include "screening/regret.hpp"

namespace screening::omp {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

void score_grid(const ModelConfig& config, std::span<const double> thetas,
                std::span<const double> taus, std::span<ScorePoint> out) {
  const auto nt = static_cast<std::int64_t>(taus.size());
  const auto cells = static_cast<std::int64_t>(thetas.size()) * nt;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < cells; ++k) {
    out[k] = evaluate_scores(config, thetas[k / nt], taus[k % nt]);
  }
}

void sample_applicants(const ModelConfig& config, std::uint64_t seed, std::uint32_t stream,
                       std::span<Applicant> out) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = draw_applicant(config, seed, stream, static_cast<std::uint64_t>(i));
  }
}

void stage_one_decisions(const ModelConfig& config, std::span<const Applicant> applicants,
                         double tau, std::span<std::uint8_t> accepted) {
  const double log_t = log_acceptance_threshold(config.payoffs(), tau);
  const CertifiedSignal& signal = config.signal();
  const auto n = static_cast<std::int64_t>(applicants.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    accepted[i] = signal.log_likelihood_ratio(applicants[i].theta, applicants[i].gamma) > log_t;
  }
}

void paired_regret(const ModelConfig& config, std::span<const Applicant> applicants,
                   double tau, std::span<double> u_s1, std::span<double> u_s2) {
  const PayoffParams& payoffs = config.payoffs();
  const auto n = static_cast<std::int64_t>(applicants.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const ScorePoint p = evaluate_scores(config, applicants[i].theta, tau);
    u_s1[i] = regret_value(payoffs, p.s1, applicants[i].q);
    u_s2[i] = regret_value(payoffs, p.s2, applicants[i].q);
  }
}

double blocked_sum(std::span<const double> values) {
  const std::size_t blocks = (values.size() + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t start = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(values.size(), start + kReductionBlock);
    double block = 0.0;
    for (std::size_t i = start; i < end; ++i) block += values[i];
    partial[b] = block;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace screening::omp
