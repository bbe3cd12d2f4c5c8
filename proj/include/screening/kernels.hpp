#pragma once

// Data-parallel inner loops. `serial` is the reference implementation kept
// for testing; `omp` distributes the same per-element work over OpenMP
// threads and must produce bit-identical results for any thread count.
// Reductions go through a fixed block decomposition for that reason.

#include <cstdint>
#include <span>

#include "screening/applicant.hpp"
#include "screening/model.hpp"
#include "screening/scores.hpp"

namespace screening {

/// Elements per partial sum in blocked reductions.
inline constexpr std::size_t kReductionBlock = 4096;

/// Draws applicant `index` of the given stream: Q ~ Bernoulli(pi), then
/// (Theta, Gamma) from the class-conditional Gaussian via Box-Muller.
Applicant draw_applicant(const ModelConfig& config, std::uint64_t seed,
                         std::uint32_t stream, std::uint64_t index);

namespace serial {

/// out[i * taus.size() + j] = scores at (thetas[i], taus[j]).
void score_grid(const ModelConfig& config, std::span<const double> thetas,
                std::span<const double> taus, std::span<ScorePoint> out);

void sample_applicants(const ModelConfig& config, std::uint64_t seed, std::uint32_t stream,
                       std::span<Applicant> out);

/// accepted[i] = 1 iff l(theta_i, gamma_i) > T(tau).
void stage_one_decisions(const ModelConfig& config, std::span<const Applicant> applicants,
                         double tau, std::span<std::uint8_t> accepted);

/// Individual regret of each applicant under s1 and s2 at prejudice tau.
void paired_regret(const ModelConfig& config, std::span<const Applicant> applicants,
                   double tau, std::span<double> u_s1, std::span<double> u_s2);

double blocked_sum(std::span<const double> values);

}  // namespace serial

namespace omp {

int max_threads();
void set_threads(int threads);

void score_grid(const ModelConfig& config, std::span<const double> thetas,
                std::span<const double> taus, std::span<ScorePoint> out);

void sample_applicants(const ModelConfig& config, std::uint64_t seed, std::uint32_t stream,
                       std::span<Applicant> out);

void stage_one_decisions(const ModelConfig& config, std::span<const Applicant> applicants,
                         double tau, std::span<std::uint8_t> accepted);

void paired_regret(const ModelConfig& config, std::span<const Applicant> applicants,
                   double tau, std::span<double> u_s1, std::span<double> u_s2);

double blocked_sum(std::span<const double> values);

}  // namespace omp

}  // namespace screening
