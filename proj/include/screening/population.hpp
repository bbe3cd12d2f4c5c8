#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "screening/applicant.hpp"
#include "screening/model.hpp"
#include "screening/regret.hpp"
#include "screening/thresholds.hpp"

namespace screening {

// Counter-stream identifiers; stage one (set I) and stage two (set J) are
// independent draws under the same seed.
enum class PopulationStream : std::uint32_t { stage_one = 0, stage_two = 1, theta_only = 2 };

/// m i.i.d. applicants; deterministic in (config, m, seed, stream) and
/// independent of the worker count. Throws DomainError for m = 0.
std::vector<Applicant> sample_population(const ModelConfig& config, std::size_t m,
                                         std::uint64_t seed,
                                         PopulationStream stream = PopulationStream::stage_one);

/// What the data scientist sees of a stage-one applicant: the signal, the
/// human decision and, only for accepted applicants, the qualification.
class StageOneRecord {
 public:
  StageOneRecord(double theta, bool accepted, Qualification revealed_if_accepted)
      : theta_(theta), accepted_(accepted) {
    if (accepted) q_label_ = revealed_if_accepted;
  }

  double theta() const { return theta_; }
  bool accepted() const { return accepted_; }
  const std::optional<Qualification>& q_label() const { return q_label_; }

 private:
  double theta_;
  bool accepted_;
  std::optional<Qualification> q_label_;
};

/// Likelihood-ratio form of the human rule: l(theta, gamma) > T(tau).
bool human_accepts(const ModelConfig& config, double theta, double gamma, double tau);

/// Expected-payoff form: kappa x_q - (1 - kappa) x_u > tau.
bool human_accepts_by_payoff(const ModelConfig& config, double theta, double gamma, double tau);

std::vector<StageOneRecord> run_stage_one(const ModelConfig& config,
                                          std::span<const Applicant> population, double tau);

struct EmpiricalBin {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  std::size_t count = 0;
  std::size_t accepted = 0;
  std::size_t qualified_accepted = 0;
  double s2_hat = 0.0;
  double s2_se = 0.0;
  std::optional<double> s1_hat;  // absent when no record in the bin was accepted
  std::optional<double> s1_se;
};

/// Equal-count theta bins; s2_hat = mean acceptance, s1_hat = mean label among
/// the accepted. Throws DomainError on an empty dataset or zero bins.
std::vector<EmpiricalBin> empirical_scores(std::span<const StageOneRecord> records,
                                           std::size_t bins = 50);

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

/// Average regret U over a fresh stage-two population of size m.
McEstimate mc_average_regret(const ModelConfig& config, Algorithm algo, double tau,
                             std::size_t m, std::uint64_t seed);

struct PairedRegretEstimate {
  McEstimate s1;
  McEstimate s2;
  McEstimate gap;  // U(s2) - U(s1), paired per applicant
};

/// Average regret of both algorithms on a given population.
PairedRegretEstimate average_regret(const ModelConfig& config,
                                    std::span<const Applicant> population, double tau);

struct EnvironmentReport {
  double alpha_q = 0.0;  // P(phi(Theta) <= beta | Q = 1)
  double alpha_u = 0.0;  // P(phi(Theta) <= beta | Q = 0)
  std::optional<double> theta_beta;  // phi(theta_beta) = beta, if phi is not constant
  double lhs = 0.0;  // x_u / x_q
  double rhs = 0.0;  // (pi / (1 - pi) alpha_q - 1) / (alpha_u + 1)
  Environment classification = Environment::regular;
};

EnvironmentReport classify_environment(const ModelConfig& config);

struct AtomReport {
  std::size_t m = 0;
  std::size_t s1_duplicates = 0;
  std::size_t s2_duplicates = 0;
  std::size_t tau_d1_present = 0;
  std::size_t tau_d1_duplicates = 0;
  std::size_t tau_d2_duplicates = 0;
};

/// Number of entries whose value occurs more than once.
std::size_t count_duplicates(std::vector<double> values);

/// Exact-duplicate counts of s1(Theta_i), s2(Theta_i), tau_d1(Theta_i) and
/// tau_d2(Theta_i) for the given signals at prejudice tau.
AtomReport count_atoms(const ModelConfig& config, double tau, std::span<const double> thetas);

/// count_atoms over m freshly sampled Theta values.
AtomReport verify_nonatomic(const ModelConfig& config, double tau, std::size_t m,
                            std::uint64_t seed);

}  // namespace screening
