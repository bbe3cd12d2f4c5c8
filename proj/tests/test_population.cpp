#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "random_configs.hpp"
#include "screening/population.hpp"

using namespace screening;

TEST(Population, RejectsEmpty) {
  EXPECT_THROW(sample_population(ModelConfig::baseline(), 0, 1), DomainError);
}

TEST(Population, DeterministicAndStreamSeparated) {
  const auto cfg = ModelConfig::baseline();
  const auto a = sample_population(cfg, 5000, 42);
  const auto b = sample_population(cfg, 5000, 42);
  const auto c = sample_population(cfg, 5000, 42, PopulationStream::stage_two);
  const auto d = sample_population(cfg, 5000, 43);
  std::size_t same_c = 0;
  std::size_t same_d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].theta, b[i].theta);
    ASSERT_EQ(a[i].gamma, b[i].gamma);
    ASSERT_EQ(a[i].q, b[i].q);
    same_c += a[i].theta == c[i].theta;
    same_d += a[i].theta == d[i].theta;
  }
  EXPECT_EQ(same_c, 0u);
  EXPECT_EQ(same_d, 0u);
}

TEST(Population, PrefixStable) {
  const auto cfg = ModelConfig::baseline();
  const auto small = sample_population(cfg, 100, 8);
  const auto large = sample_population(cfg, 10000, 8);
  for (std::size_t i = 0; i < small.size(); ++i) ASSERT_EQ(small[i].theta, large[i].theta);
}

TEST(Population, QualifiedFractionAndMoments) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 1000000, 2024);
  std::size_t qualified = 0;
  double sum_t = 0.0, sum_tt = 0.0, sum_g = 0.0;
  std::size_t nq = 0;
  for (const Applicant& a : pop) {
    if (a.q != Qualification::qualified) continue;
    ++nq;
    sum_t += a.theta;
    sum_tt += a.theta * a.theta;
    sum_g += a.gamma;
  }
  qualified = nq;
  EXPECT_NEAR(static_cast<double>(qualified) / pop.size(), 0.4, 0.002);
  EXPECT_NEAR(sum_t / nq, 1.0, 0.01);
  EXPECT_NEAR(sum_g / nq, 1.0, 0.01);
  EXPECT_NEAR(sum_tt / nq - std::pow(sum_t / nq, 2), 1.0, 0.01);
}

TEST(Population, CorrelationReproduced) {
  GaussianSignalModel s;
  s.mu_q = {1.0, 2.0};
  s.rho = 0.5;
  s.sigma_gamma = 2.0;
  const auto cfg = ModelConfig::create({0.5, 1, 1, 0}, s);
  const auto pop = sample_population(cfg, 400000, 3);
  double st = 0, sg = 0, stg = 0, stt = 0, sgg = 0;
  std::size_t n = 0;
  for (const Applicant& a : pop) {
    if (a.q != Qualification::unqualified) continue;
    ++n;
    st += a.theta;
    sg += a.gamma;
    stg += a.theta * a.gamma;
    stt += a.theta * a.theta;
    sgg += a.gamma * a.gamma;
  }
  const double mt = st / n, mg = sg / n;
  const double corr = (stg / n - mt * mg) / std::sqrt((stt / n - mt * mt) * (sgg / n - mg * mg));
  EXPECT_NEAR(corr, 0.5, 0.01);
  EXPECT_NEAR(std::sqrt(sgg / n - mg * mg), 2.0, 0.02);
}

TEST(StageOne, RuleFormsAgreeAndLabelsAreSelective) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 1000000, 77);
  for (double tau : {-0.6, 0.0, 0.45}) {
    std::size_t disagreements = 0;
    for (const Applicant& a : pop) {
      disagreements += human_accepts(cfg, a.theta, a.gamma, tau) !=
                       human_accepts_by_payoff(cfg, a.theta, a.gamma, tau);
    }
    EXPECT_EQ(disagreements, 0u) << tau;
  }
  const auto records = run_stage_one(cfg, pop, 0.0);
  ASSERT_EQ(records.size(), pop.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    ASSERT_EQ(records[i].q_label().has_value(), records[i].accepted());
    if (records[i].accepted()) ASSERT_EQ(*records[i].q_label(), pop[i].q);
  }
}

TEST(StageOne, RecordHidesLabelOfRejected) {
  const StageOneRecord r(0.3, false, Qualification::qualified);
  EXPECT_FALSE(r.q_label().has_value());
  const StageOneRecord a(0.3, true, Qualification::qualified);
  EXPECT_EQ(*a.q_label(), Qualification::qualified);
}

TEST(StageOne, AcceptanceRateMonotoneAndLimits) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 100000, 5);
  const auto taus = clamped_tau_grid(cfg.payoffs(), 60, 1e-9);
  double prev = 2.0;
  for (double tau : taus) {
    const auto recs = run_stage_one(cfg, pop, tau);
    const double rate =
        static_cast<double>(std::count_if(recs.begin(), recs.end(),
                                          [](const StageOneRecord& r) { return r.accepted(); })) /
        recs.size();
    EXPECT_LE(rate, prev);
    prev = rate;
    if (tau == taus.front()) EXPECT_GT(rate, 0.999);
  }
  EXPECT_LT(prev, 0.001);
}

TEST(EmpiricalScores, Errors) {
  std::vector<StageOneRecord> none;
  EXPECT_THROW(empirical_scores(none, 10), DomainError);
  std::vector<StageOneRecord> one{StageOneRecord(0.0, true, Qualification::qualified)};
  EXPECT_THROW(empirical_scores(one, 0), DomainError);
}

TEST(EmpiricalScores, AgreeWithAnalyticNearZero) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 1000000, 9);
  std::vector<StageOneRecord> window;
  for (const auto& r : run_stage_one(cfg, pop, 0.0)) {
    if (std::abs(r.theta()) < 0.02) window.push_back(r);
  }
  const auto bins = empirical_scores(window, 1);
  ASSERT_EQ(bins.size(), 1u);
  ASSERT_TRUE(bins[0].s1_hat);
  EXPECT_NEAR(*bins[0].s1_hat, 0.6341, 3 * *bins[0].s1_se + 1e-3);
  EXPECT_NEAR(bins[0].s2_hat, 0.1556, 3 * bins[0].s2_se + 1e-3);
}

TEST(EmpiricalScores, MostlyAbsentNearUpperEndpoint) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 100000, 10);
  const auto recs = run_stage_one(cfg, pop, 1.0 - 1e-9);
  const auto bins = empirical_scores(recs, 50);
  std::size_t absent = 0;
  for (const auto& b : bins) {
    absent += !b.s1_hat;
    EXPECT_GE(b.s2_hat, 0.0);
    EXPECT_LE(b.s2_hat, 1.0);
  }
  EXPECT_GT(absent, 40u);
}

TEST(EmpiricalScores, EqualCountBins) {
  const auto cfg = ModelConfig::baseline();
  const auto recs = run_stage_one(cfg, sample_population(cfg, 10000, 12), 0.0);
  const auto bins = empirical_scores(recs, 50);
  ASSERT_EQ(bins.size(), 50u);
  for (std::size_t i = 0; i < bins.size(); ++i) {
    EXPECT_EQ(bins[i].count, 200u);
    if (i > 0) EXPECT_LE(bins[i - 1].theta_hi, bins[i].theta_lo);
  }
}

TEST(McRegret, CoverageOverSeeds) {
  const auto cfg = ModelConfig::baseline();
  for (Algorithm algo : {Algorithm::s1, Algorithm::s2}) {
    const double exact = expected_regret(cfg, algo, 0.1);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const McEstimate e = mc_average_regret(cfg, algo, 0.1, 20000, seed);
      covered += std::abs(e.mean - exact) <= 3 * e.standard_error;
    }
    EXPECT_GE(covered, 95) << to_string(algo);
  }
}

TEST(McRegret, EndpointLimits) {
  const auto cfg = ModelConfig::baseline();
  const PayoffParams& p = cfg.payoffs();
  const TauInterval iv = clamped_tau_interval(p);
  const McEstimate s2 = mc_average_regret(cfg, Algorithm::s2, iv.lo, 100000, 1);
  const McEstimate s1 = mc_average_regret(cfg, Algorithm::s1, iv.hi, 100000, 1);
  EXPECT_NEAR(s2.mean, (1 - p.pi) * p.span(), 4 * s2.standard_error + 1e-4);
  EXPECT_NEAR(s1.mean, (1 - p.pi) * p.span(), 4 * s1.standard_error + 1e-4);
}

TEST(McRegret, MonotoneAcrossTauUpToNoise) {
  const auto cfg = ModelConfig::baseline();
  const auto pop = sample_population(cfg, 100000, 4, PopulationStream::stage_two);
  const auto taus = clamped_tau_grid(cfg.payoffs(), 25);
  PairedRegretEstimate prev = average_regret(cfg, pop, taus[0]);
  for (std::size_t j = 1; j < taus.size(); ++j) {
    const PairedRegretEstimate cur = average_regret(cfg, pop, taus[j]);
    EXPECT_GT(cur.s1.mean, prev.s1.mean - 3 * cur.s1.standard_error);
    EXPECT_LT(cur.s2.mean, prev.s2.mean + 3 * cur.s2.standard_error);
    prev = cur;
  }
}

TEST(Environment, Classification) {
  EXPECT_EQ(classify_environment(ModelConfig::baseline()).classification, Environment::regular);
  const EnvironmentReport irr = classify_environment(fixtures::irregular_config());
  EXPECT_EQ(irr.classification, Environment::irregular);
  EXPECT_NEAR(irr.alpha_q, 0.89, 0.01);
  EXPECT_NEAR(irr.alpha_u, 0.96, 0.01);
  EXPECT_NEAR(irr.rhs, 3.6, 0.05);
  for (const auto& cfg : fixtures::random_configs(50, 41)) {
    if (cfg.payoffs().pi <= 0.5) {
      EXPECT_EQ(classify_environment(cfg).classification, Environment::regular);
    }
  }
}

TEST(Environment, PhiDecreasingInThetaIsHandled) {
  // Negative correlation can make the theta marginal shift negative while the
  // joint certificate stays positive.
  GaussianSignalModel s;
  s.rho = -0.5;
  s.mu_u = {0.0, 0.0};
  s.mu_q = {-0.45, 1.35};  // Sigma (0.3, 1.5)
  ASSERT_TRUE(validate_mlrp(s).accepted());
  const auto cfg = ModelConfig::create({0.4, 1, 1, 0}, s);
  EXPECT_GT(marginal_posterior_phi(cfg, -1.0), marginal_posterior_phi(cfg, 1.0));
  const EnvironmentReport r = classify_environment(cfg);
  const TauInterval iv = clamped_tau_interval(cfg.payoffs(), 1e-9);
  const double d = regret_gap(cfg, iv.lo);
  EXPECT_EQ(r.classification == Environment::regular, d > 0);
}

TEST(Atoms, BaselineHasNone) {
  const AtomReport r = verify_nonatomic(ModelConfig::baseline(), 0.0, 100000, 6);
  EXPECT_EQ(r.s1_duplicates, 0u);
  EXPECT_EQ(r.s2_duplicates, 0u);
  EXPECT_EQ(r.tau_d1_duplicates, 0u);
  EXPECT_EQ(r.tau_d2_duplicates, 0u);
  EXPECT_GT(r.tau_d1_present, 0u);
}

TEST(Atoms, ConstantSamplerIsAllDuplicates) {
  const std::vector<double> thetas(1000, 0.25);
  const AtomReport r = count_atoms(ModelConfig::baseline(), 0.0, thetas);
  EXPECT_EQ(r.s1_duplicates, 1000u);
  EXPECT_EQ(r.tau_d2_duplicates, 1000u);
  EXPECT_EQ(count_duplicates({1.0, 2.0, 1.0, 3.0}), 2u);
}
