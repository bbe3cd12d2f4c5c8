#include "screening/population.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "screening/kernels.hpp"
#include "screening/normal.hpp"
#include "screening/roots.hpp"

namespace screening {

std::vector<Applicant> sample_population(const ModelConfig& config, std::size_t m,
                                         std::uint64_t seed, PopulationStream stream) {
  if (m == 0) {
    throw DomainError("population size must be at least 1");
  }
  std::vector<Applicant> out(m);
  omp::sample_applicants(config, seed, static_cast<std::uint32_t>(stream), out);
  return out;
}

bool human_accepts(const ModelConfig& config, double theta, double gamma, double tau) {
  return config.signal().log_likelihood_ratio(theta, gamma) >
         log_acceptance_threshold(config.payoffs(), tau);
}

bool human_accepts_by_payoff(const ModelConfig& config, double theta, double gamma,
                             double tau) {
  const PayoffParams& p = config.payoffs();
  require_open_tau(p, tau);
  const double kappa = posterior_kappa(config, theta, gamma);
  return kappa * p.x_q - (1.0 - kappa) * p.x_u > tau;
}

std::vector<StageOneRecord> run_stage_one(const ModelConfig& config,
                                          std::span<const Applicant> population, double tau) {
  std::vector<std::uint8_t> accepted(population.size());
  omp::stage_one_decisions(config, population, tau, accepted);
  std::vector<StageOneRecord> records;
  records.reserve(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    records.emplace_back(population[i].theta, accepted[i] != 0, population[i].q);
  }
  return records;
}

std::vector<EmpiricalBin> empirical_scores(std::span<const StageOneRecord> records,
                                           std::size_t bins) {
  if (records.empty()) {
    throw DomainError("empirical scores need at least one stage-one record");
  }
  if (bins == 0) {
    throw DomainError("empirical scores need at least one bin");
  }
  bins = std::min(bins, records.size());

  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].theta() < records[b].theta();
  });

  std::vector<EmpiricalBin> out;
  out.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const std::size_t start = b * records.size() / bins;
    const std::size_t end = (b + 1) * records.size() / bins;
    EmpiricalBin bin;
    bin.theta_lo = records[order[start]].theta();
    bin.theta_hi = records[order[end - 1]].theta();
    bin.count = end - start;
    for (std::size_t k = start; k < end; ++k) {
      const StageOneRecord& r = records[order[k]];
      if (!r.accepted()) continue;
      ++bin.accepted;
      if (r.q_label() == Qualification::qualified) ++bin.qualified_accepted;
    }
    const double n = static_cast<double>(bin.count);
    bin.s2_hat = static_cast<double>(bin.accepted) / n;
    bin.s2_se = std::sqrt(bin.s2_hat * (1.0 - bin.s2_hat) / n);
    if (bin.accepted > 0) {
      const double na = static_cast<double>(bin.accepted);
      const double s1 = static_cast<double>(bin.qualified_accepted) / na;
      bin.s1_hat = s1;
      bin.s1_se = std::sqrt(s1 * (1.0 - s1) / na);
    }
    out.push_back(bin);
  }
  return out;
}

namespace {

McEstimate summarize(std::span<const double> values, std::uint64_t seed) {
  const std::size_t m = values.size();
  const double mean = omp::blocked_sum(values) / static_cast<double>(m);
  std::vector<double> centered(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double d = values[i] - mean;
    centered[i] = d * d;
  }
  const double var = m > 1 ? omp::blocked_sum(centered) / static_cast<double>(m - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(m)), m, seed};
}

}  // namespace

PairedRegretEstimate average_regret(const ModelConfig& config,
                                    std::span<const Applicant> population, double tau) {
  if (population.empty()) {
    throw DomainError("average regret needs a non-empty population");
  }
  require_open_tau(config.payoffs(), tau);
  std::vector<double> u1(population.size());
  std::vector<double> u2(population.size());
  omp::paired_regret(config, population, tau, u1, u2);
  PairedRegretEstimate est;
  est.s1 = summarize(u1, 0);
  est.s2 = summarize(u2, 0);
  for (std::size_t i = 0; i < u2.size(); ++i) u2[i] -= u1[i];
  est.gap = summarize(u2, 0);
  return est;
}

McEstimate mc_average_regret(const ModelConfig& config, Algorithm algo, double tau,
                             std::size_t m, std::uint64_t seed) {
  const auto population = sample_population(config, m, seed, PopulationStream::stage_two);
  PairedRegretEstimate est = average_regret(config, population, tau);
  McEstimate out = algo == Algorithm::s1 ? est.s1 : est.s2;
  out.seed = seed;
  return out;
}

EnvironmentReport classify_environment(const ModelConfig& config) {
  const PayoffParams& p = config.payoffs();
  const CertifiedSignal& signal = config.signal();
  const double beta = p.beta();
  const double mean_q = signal.theta_mean(Qualification::qualified);
  const double mean_u = signal.theta_mean(Qualification::unqualified);
  const double sd = signal.theta_sd();

  EnvironmentReport r;
  if (mean_q == mean_u) {
    // phi is constant at pi
    const double alpha = p.pi <= beta ? 1.0 : 0.0;
    r.alpha_q = r.alpha_u = alpha;
  } else {
    const double target = std::log(beta) - std::log1p(-beta);
    auto excess = [&](double theta) { return marginal_log_odds(config, theta) - target; };
    const double center = 0.5 * (mean_q + mean_u);
    double half = 10.0 * sd;
    while ((excess(center - half) > 0.0) == (excess(center + half) > 0.0)) {
      half *= 2.0;
      if (!std::isfinite(half)) {
        throw InvalidModelError("phi(theta) - beta has no sign change: unsupported signal model");
      }
    }
    const double theta_beta = bisect(excess, center - half, center + half).root;
    r.theta_beta = theta_beta;
    // phi increases in theta iff the qualified theta-mean is larger.
    if (mean_q > mean_u) {
      r.alpha_q = normal::cdf((theta_beta - mean_q) / sd);
      r.alpha_u = normal::cdf((theta_beta - mean_u) / sd);
    } else {
      r.alpha_q = normal::survival((theta_beta - mean_q) / sd);
      r.alpha_u = normal::survival((theta_beta - mean_u) / sd);
    }
  }
  r.lhs = p.x_u / p.x_q;
  r.rhs = (p.pi / (1.0 - p.pi) * r.alpha_q - 1.0) / (r.alpha_u + 1.0);
  r.classification = r.lhs > r.rhs ? Environment::regular : Environment::irregular;
  return r;
}

std::size_t count_duplicates(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t dup = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (j - i > 1) dup += j - i;
    i = j;
  }
  return dup;
}

AtomReport count_atoms(const ModelConfig& config, double tau, std::span<const double> thetas) {
  const auto n = static_cast<std::int64_t>(thetas.size());
  std::vector<double> s1(thetas.size()), s2(thetas.size()), d2(thetas.size());
  std::vector<std::optional<double>> d1(thetas.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const ScorePoint p = evaluate_scores(config, thetas[i], tau);
      s1[i] = p.s1;
      s2[i] = p.s2;
      const CriticalPrejudices cp = find_critical_prejudices_exact(config, thetas[i]);
      d1[i] = cp.tau_d1;
      d2[i] = cp.tau_d2;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  AtomReport r;
  r.m = thetas.size();
  r.s1_duplicates = count_duplicates(s1);
  r.s2_duplicates = count_duplicates(s2);
  r.tau_d2_duplicates = count_duplicates(d2);
  std::vector<double> present;
  for (const auto& v : d1) {
    if (v) present.push_back(*v);
  }
  r.tau_d1_present = present.size();
  r.tau_d1_duplicates = count_duplicates(std::move(present));
  return r;
}

AtomReport verify_nonatomic(const ModelConfig& config, double tau, std::size_t m,
                            std::uint64_t seed) {
  const auto population = sample_population(config, m, seed, PopulationStream::theta_only);
  std::vector<double> thetas(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) thetas[i] = population[i].theta;
  return count_atoms(config, tau, thetas);
}

}  // namespace screening
