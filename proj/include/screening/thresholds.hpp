#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "screening/model.hpp"
#include "screening/regret.hpp"

namespace screening {

/// Default residual tolerance for roots of analytic curves.
inline constexpr double kRootTolerance = 1e-10;
/// Bracket width for roots, relative to x_q + x_u.
inline constexpr double kRootBracketRelative = 1e-12;

enum class CriticalOrdering { d1_below_d2, d2_below_d1, coincident, d1_absent };

std::string to_string(CriticalOrdering ordering);

struct CriticalPrejudices {
  std::optional<double> tau_d1;  // absent iff phi(theta) >= beta
  double tau_d2 = 0.0;
  // phi(theta) == beta to working precision; tau_d1 is reported absent.
  bool knife_edge = false;
};

struct ThresholdReport {
  double theta = 0.0;
  double phi = 0.0;
  double beta = 0.0;
  double tau_star = 0.0;
  std::optional<double> tau_d1;
  double tau_d2 = 0.0;
  double equalized_score = 0.0;  // s1(tau*) = s2(tau*)
  CriticalOrdering ordering = CriticalOrdering::d1_absent;
  bool knife_edge = false;
};

/// Equalizing prejudice: the unique root of s1 - s2 on the clamped interval.
double find_tau_star(const ModelConfig& config, double theta, double tol = kRootTolerance);

CriticalPrejudices find_critical_prejudices(const ModelConfig& config, double theta,
                                            double tol = kRootTolerance);

/// Same, with both roots bisected to one ulp (used for atom counting).
CriticalPrejudices find_critical_prejudices_exact(const ModelConfig& config, double theta);

/// tau*, tau_d1, tau_d2 and their ordering for one applicant signal.
ThresholdReport threshold_report(const ModelConfig& config, double theta,
                                 double tol = kRootTolerance);

// Which branch of the qualified-applicant crossing count applies.
enum class CrossingCase {
  unqualified,         // Q = 0: a single crossing at tau*
  qualified_three,     // x_q - c > x_u and N(phi) < 0
  qualified_two,       // x_q - c > x_u and N(phi) >= 0
  qualified_bounded,   // x_q - c <= x_u: between one and three
  coincident,          // tau_d1 == tau_d2
  trivial,             // phi >= beta: tau_d1 absent
};

std::string to_string(CrossingCase c);

struct Crossing {
  double tau = 0.0;
  // Root within 10 tol of a critical prejudice, where u jumps.
  bool at_boundary = false;
};

struct CrossingReport {
  double theta = 0.0;
  Qualification q = Qualification::unqualified;
  std::vector<Crossing> crossings;  // increasing tau
  CrossingCase case_label = CrossingCase::unqualified;
};

/// All prejudice levels where u(s1(tau)) = u(s2(tau)). The clamped interval is
/// cut at the critical prejudices; on each cell the acceptance decisions are
/// fixed, the difference is continuous and strictly increasing, so each cell
/// holds at most one root.
CrossingReport find_regret_crossings(const ModelConfig& config, double theta,
                                     Qualification q, double tol = kRootTolerance);

enum class Environment { regular, irregular };

std::string to_string(Environment env);

enum class TauBarMode { analytic, monte_carlo };

struct TauBarOptions {
  TauBarMode mode = TauBarMode::analytic;
  double tol = kRootTolerance;
  std::size_t grid = 1000;   // scan used to confirm the irregular verdict
  // Monte Carlo mode
  std::size_t m = 100000;
  std::uint64_t seed = 0;
  double slope_step = 0.05;  // half-width for the local slope of D
  ExpectationOptions expectation{};
};

struct TauBarResult {
  Environment environment = Environment::regular;
  std::optional<double> tau_bar;  // absent in an irregular environment
  std::string reason;
  // Monte Carlo mode only: standard error of D at tau_bar and its
  // propagation to tau_bar through the local slope of D.
  double d_standard_error = 0.0;
  double tau_standard_error = 0.0;
};

/// D(tau) = E[u(s2(tau))] - E[u(s1(tau))].
double regret_gap(const ModelConfig& config, double tau, const ExpectationOptions& opts = {});

/// Population indifference prejudice: the unique root of D in a regular
/// environment; in an irregular one, the none-variant after confirming D < 0
/// on a grid. Throws NumericError (MC mode) when D is not resolved away from
/// zero around the candidate root.
TauBarResult find_tau_bar(const ModelConfig& config, const TauBarOptions& opts = {});

}  // namespace screening
