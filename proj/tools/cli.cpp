#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <exception>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "screening/config_io.hpp"
#include "screening/error.hpp"
#include "screening/kernels.hpp"
#include "screening/output.hpp"
#include "screening/population.hpp"
#include "screening/regret.hpp"
#include "screening/scores.hpp"
#include "screening/thresholds.hpp"

namespace screening::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::size_t kDefaultTauPoints = 400;

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec spec;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) {
    throw DomainError("grid spec \"" + text + "\" must have the form min:max:count");
  }
  try {
    std::size_t used = 0;
    spec.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    spec.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    const long long n = std::stoll(parts[2], &used);
    if (used != parts[2].size() || n < 0) throw std::invalid_argument("count");
    spec.count = static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw DomainError("grid spec \"" + text + "\" has a non-numeric field");
  }
  if (!(spec.min < spec.max)) {
    throw DomainError("grid spec \"" + text + "\" needs min < max");
  }
  if (spec.count < 2) {
    throw DomainError("grid spec \"" + text + "\" needs at least 2 points");
  }
  return spec;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> tau_grid(const PayoffParams& payoffs, const std::string& spec_text,
                             std::ostream& err) {
  const TauInterval iv = clamped_tau_interval(payoffs);
  if (spec_text.empty()) return clamped_tau_grid(payoffs, kDefaultTauPoints);
  const GridSpec spec = parse_grid(spec_text);
  double lo = spec.min;
  double hi = spec.max;
  if (lo < iv.lo) {
    err << "notice: tau grid lower bound " << format_number(lo) << " clamped to "
        << format_number(iv.lo) << "\n";
    lo = iv.lo;
  }
  if (hi > iv.hi) {
    err << "notice: tau grid upper bound " << format_number(hi) << " clamped to "
        << format_number(iv.hi) << "\n";
    hi = iv.hi;
  }
  if (!(lo < hi)) {
    throw DomainError("tau grid \"" + spec_text + "\" is empty after clamping to (" +
                      format_number(-payoffs.x_u) + ", " + format_number(payoffs.x_q) + ")");
  }
  return linspace(lo, hi, spec.count);
}

std::string bit(bool b) { return b ? "1" : "0"; }

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Collects the files of one output directory; the manifest goes last.
class OutputDir {
 public:
  OutputDir(const std::string& dir, const ModelConfig& config, std::vector<std::uint64_t> seeds,
            std::string command_line)
      : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
      throw Error("cannot create output directory " + dir);
    }
    manifest_.config_digest = content_digest(serialize_config(config));
    manifest_.tool_version = std::string(kToolVersion);
    manifest_.seeds = std::move(seeds);
    manifest_.command_line = std::move(command_line);
    manifest_.started_at = utc_timestamp();
  }

  void write(const std::string& name, std::string_view content) {
    write_file_atomic(dir_ / name, content);
    manifest_.outputs.push_back(name);
  }

  void finish() {
    manifest_.finished_at = utc_timestamp();
    write_file_atomic(dir_ / std::string(kManifestName), manifest_.to_json());
  }

 private:
  fs::path dir_;
  RunManifest manifest_;
};

CsvDocument score_csv(const ModelConfig& config, const std::vector<double>& thetas,
                      const std::vector<double>& taus) {
  std::vector<ScorePoint> grid(thetas.size() * taus.size());
  omp::score_grid(config, thetas, taus, grid);
  CsvDocument csv({"theta", "tau", "s1", "s2", "gamma1", "phi", "surv_q", "surv_u"});
  for (const ScorePoint& p : grid) {
    csv.add_row({format_number(p.theta), format_number(p.tau), format_number(p.s1),
                 format_number(p.s2), format_number(p.gamma1), format_number(p.phi),
                 format_number(p.surv_q), format_number(p.surv_u)});
  }
  return csv;
}

Json jump_json(const JumpAnnotation& j) {
  return Json{{"algo", to_string(j.algo)}, {"tau_d", j.tau_d}, {"height", j.height}};
}

struct RegretOutput {
  CsvDocument csv{{"theta", "q", "tau", "algo", "score", "n", "accepted", "p", "u"}};
  Json jumps = Json::array();
};

void append_regret(const RegretCurve& curve, RegretOutput& out) {
  for (const auto* records : {&curve.s1, &curve.s2}) {
    for (const RegretRecord& r : *records) {
      out.csv.add_row({format_number(r.theta), std::to_string(as_bit(r.q)),
                       format_number(r.tau), to_string(r.algo), format_number(r.score),
                       format_number(r.n_ex_ante), bit(r.accepted), format_number(r.p_ex_post),
                       format_number(r.u)});
    }
  }
  Json entry{{"theta", curve.theta}, {"q", as_bit(curve.q)}};
  entry["s1"] = curve.jump_s1 ? jump_json(*curve.jump_s1) : Json(nullptr);
  entry["s2"] = jump_json(curve.jump_s2);
  out.jumps.push_back(std::move(entry));
}

RegretOutput regret_output(const ModelConfig& config, const std::vector<double>& thetas,
                           const std::vector<int>& qs, const std::vector<double>& taus) {
  RegretOutput out;
  for (double theta : thetas) {
    for (int q : qs) {
      const Qualification qual = q == 1 ? Qualification::qualified : Qualification::unqualified;
      append_regret(regret_curve(config, theta, qual, taus), out);
    }
  }
  return out;
}

Json crossing_json(const CrossingReport& r) {
  Json roots = Json::array();
  for (const Crossing& c : r.crossings) {
    roots.push_back(Json{{"tau", c.tau}, {"at_boundary", c.at_boundary}});
  }
  return Json{{"q", as_bit(r.q)},
              {"case", to_string(r.case_label)},
              {"count", r.crossings.size()},
              {"crossings", roots}};
}

Json threshold_json(const ModelConfig& config, double theta) {
  const ThresholdReport r = threshold_report(config, theta);
  Json doc{{"theta", r.theta},
           {"phi", r.phi},
           {"beta", r.beta},
           {"tau_star", r.tau_star},
           {"tau_d1", optional_number(r.tau_d1)},
           {"tau_d2", r.tau_d2},
           {"equalized_score", r.equalized_score},
           {"ordering", to_string(r.ordering)},
           {"knife_edge", r.knife_edge}};
  doc["regret_crossings"] = Json::array(
      {crossing_json(find_regret_crossings(config, theta, Qualification::unqualified)),
       crossing_json(find_regret_crossings(config, theta, Qualification::qualified))});
  return doc;
}

Json environment_json(const EnvironmentReport& r) {
  return Json{{"classification", to_string(r.classification)},
              {"alpha_q", r.alpha_q},
              {"alpha_u", r.alpha_u},
              {"theta_beta", optional_number(r.theta_beta)},
              {"lhs", r.lhs},
              {"rhs", r.rhs}};
}

Json tau_bar_json(const TauBarResult& r, TauBarMode mode) {
  Json doc{{"environment", to_string(r.environment)},
           {"tau_bar", optional_number(r.tau_bar)},
           {"reason", r.reason}};
  if (mode == TauBarMode::monte_carlo) {
    doc["d_standard_error"] = r.d_standard_error;
    doc["tau_standard_error"] = r.tau_standard_error;
  }
  return doc;
}

CsvDocument average_regret_csv(const ModelConfig& config, const std::vector<double>& taus) {
  std::vector<double> u1(taus.size());
  std::vector<double> u2(taus.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(taus.size()); ++i) {
    try {
      u1[i] = expected_regret(config, Algorithm::s1, taus[i]);
      u2[i] = expected_regret(config, Algorithm::s2, taus[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  CsvDocument csv({"tau", "u_s1", "u_s2", "gap"});
  for (std::size_t i = 0; i < taus.size(); ++i) {
    csv.add_row({format_number(taus[i]), format_number(u1[i]), format_number(u2[i]),
                 format_number(u2[i] - u1[i])});
  }
  return csv;
}

Json schema() {
  auto col = [](const char* name, const char* type, const char* doc) {
    return Json{{"name", name}, {"type", type}, {"description", doc}};
  };
  Json s;
  s["scores.csv"] = Json::array({
      col("theta", "number", "first-stage signal"),
      col("tau", "number", "prejudice against the group"),
      col("s1", "number", "E[Q | Theta = theta, A = 1]"),
      col("s2", "number", "E[A | Theta = theta]"),
      col("gamma1", "number", "human accepts iff Gamma > gamma1"),
      col("phi", "number", "P(Q = 1 | Theta = theta)"),
      col("surv_q", "number", "P(Gamma > gamma1 | Theta = theta, Q = 1)"),
      col("surv_u", "number", "P(Gamma > gamma1 | Theta = theta, Q = 0)"),
  });
  s["regret.csv"] = Json::array({
      col("theta", "number", "first-stage signal"),
      col("q", "0|1", "applicant qualification"),
      col("tau", "number", "prejudice"),
      col("algo", "s1|s2", "scoring algorithm"),
      col("score", "number", "algorithmic score s"),
      col("n", "number", "ex ante payoff N(s) = s x_q - (1 - s) x_u"),
      col("accepted", "0|1", "second-stage decision 1{N(s) > c}"),
      col("p", "number", "ex post payoff"),
      col("u", "number", "regret N(s) - p"),
  });
  s["regret_jumps.json"] = "array of {theta, q, s1, s2}; s1/s2 are {algo, tau_d, height} "
                           "with height = u(tau_d+) - u(tau_d-), s1 null when it never jumps";
  s["average_regret.csv"] = Json::array({
      col("tau", "number", "prejudice"),
      col("u_s1", "number", "population expected regret of s1"),
      col("u_s2", "number", "population expected regret of s2"),
      col("gap", "number", "D = u_s2 - u_s1"),
  });
  s["thresholds.json"] =
      "{environment, tau_bar (null when irregular), reason, classification, thetas: "
      "[{theta, phi, beta, tau_star, tau_d1 (null when absent), tau_d2, equalized_score, "
      "ordering, knife_edge, regret_crossings: [{q, case, count, crossings: [{tau, "
      "at_boundary}]}]}]}";
  s["stage1.csv"] = Json::array({
      col("theta", "number", "first-stage signal"),
      col("accepted", "0|1", "human decision"),
      col("q_label", "0|1|empty", "qualification, empty for rejected applicants"),
  });
  s["scores_empirical.csv"] = Json::array({
      col("bin", "integer", "equal-count theta bin index"),
      col("theta_lo", "number", "smallest theta in the bin"),
      col("theta_hi", "number", "largest theta in the bin"),
      col("count", "integer", "records in the bin"),
      col("accepted", "integer", "accepted records in the bin"),
      col("qualified_accepted", "integer", "accepted records labelled qualified"),
      col("s2_hat", "number", "acceptance rate"),
      col("s2_se", "number", "binomial standard error of s2_hat"),
      col("s1_hat", "number|empty", "qualified share among the accepted, empty if none"),
      col("s1_se", "number|empty", "binomial standard error of s1_hat"),
  });
  s["regret_mc.csv"] = Json::array({
      col("tau", "number", "prejudice"),
      col("algo", "s1|s2|gap", "algorithm, or the paired difference s2 - s1"),
      col("mean", "number", "average regret over the stage-two sample"),
      col("standard_error", "number", "standard error of the mean"),
      col("m", "integer", "sample size"),
      col("seed", "integer", "seed"),
      col("analytic", "number", "quadrature expectation at the same tau"),
  });
  s["environment.json"] = "{classification, alpha_q, alpha_u, theta_beta, lhs, rhs}";
  s["manifest.json"] =
      "{config_digest, tool_version, seeds, command_line, started_at, finished_at, outputs}";
  return s;
}

std::string join_command_line(int argc, const char* const* argv) {
  std::string line;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) line += ' ';
    line += argv[i];
  }
  return line;
}

struct Globals {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  bool schema = false;
};

ModelConfig require_config(const Globals& g) {
  if (g.config_path.empty()) throw DomainError("--config is required");
  return load_config(g.config_path);
}

std::vector<double> theta_list(const std::vector<double>& thetas, const std::string& grid) {
  if (!grid.empty()) {
    const GridSpec spec = parse_grid(grid);
    return linspace(spec.min, spec.max, spec.count);
  }
  return thetas.empty() ? std::vector<double>{0.0} : thetas;
}

int cmd_validate(const Globals& g, std::ostream& out, std::ostream& err) {
  if (g.config_path.empty()) throw DomainError("--config is required");
  const ConfigDocument doc = parse_config_document(read_text_file(g.config_path));
  doc.payoffs.validate();
  const MlrpCheck check = validate_mlrp(doc.signal);
  if (!check.accepted()) {
    err << "invalid config: " << check.describe() << "\n";
    return kExitValidation;
  }
  const ModelConfig config = ModelConfig::create(doc.payoffs, doc.signal);
  const EnvironmentReport env = classify_environment(config);
  const MlrpCertificate& c = check.certificate;
  out << "MLRP certificate: " << check.describe() << "\n"
      << "  intercept    " << format_number(c.intercept) << "\n"
      << "  weight_theta " << format_number(c.weight_theta) << "\n"
      << "  weight_gamma " << format_number(c.weight_gamma) << "\n"
      << "beta " << format_number(config.beta()) << "\n"
      << "environment preview: " << to_string(env.classification) << " (x_u/x_q "
      << format_number(env.lhs) << " vs " << format_number(env.rhs) << ")\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage screening model: scores, regret and prejudice thresholds"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Globals g;
  app.add_option("--config", g.config_path, "model config JSON");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "worker threads (0 = OpenMP default)");
  app.add_flag("--schema", g.schema, "print the output file schema and exit");

  std::vector<double> thetas;
  std::string theta_grid;
  std::string tau_spec;

  auto* validate = app.add_subcommand("validate", "check a config and print its certificate");

  auto* scores = app.add_subcommand("scores", "score curves s1, s2 over a tau grid");
  scores->add_option("--theta", thetas, "signal values")->delimiter(',');
  scores->add_option("--theta-grid", theta_grid, "min:max:count");
  scores->add_option("--tau-grid", tau_spec, "min:max:count (clamped to the open interval)");

  auto* tau = app.add_subcommand("tau", "tau*, critical prejudices and regret crossings");
  tau->add_option("--theta", thetas, "signal values")->delimiter(',');
  tau->add_option("--theta-grid", theta_grid, "min:max:count; emits a JSON array");

  std::vector<int> qs{0, 1};
  auto* regret = app.add_subcommand("regret", "individual regret curves");
  regret->add_option("--theta", thetas, "signal values")->delimiter(',');
  regret->add_option("--theta-grid", theta_grid, "min:max:count");
  regret->add_option("--q", qs, "qualifications to emit")->delimiter(',')->check(CLI::Range(0, 1));
  regret->add_option("--tau-grid", tau_spec, "min:max:count");

  std::size_t average_points = 101;
  auto* sweep = app.add_subcommand("sweep", "scores, regret, thresholds and average regret");
  sweep->add_option("--theta", thetas, "signal values")->delimiter(',');
  sweep->add_option("--theta-grid", theta_grid, "min:max:count");
  sweep->add_option("--tau-grid", tau_spec, "min:max:count");
  sweep->add_option("--average-points", average_points, "tau points for average regret")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

  double sim_tau = 0.0;
  std::size_t sim_m = 100000;
  std::size_t bins = 50;
  auto* simulate = app.add_subcommand("simulate", "two-stage Monte Carlo simulation");
  simulate->add_option("--tau", sim_tau, "prejudice")->required();
  simulate->add_option("--m", sim_m, "applicants per stage");
  simulate->add_option("--bins", bins, "equal-count theta bins");

  std::string mode_name = "analytic";
  auto* classify = app.add_subcommand("classify", "environment classification and tau bar");
  classify->add_option("--mode", mode_name, "tau bar mode")
      ->check(CLI::IsMember({"analytic", "mc"}));
  classify->add_option("--m", sim_m, "sample size in mc mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const std::string command_line = join_command_line(argc, argv);
  try {
    if (g.schema) {
      out << schema().dump(2) << "\n";
      return kExitOk;
    }
    if (g.threads < 0) throw DomainError("--threads must be non-negative");
    if (g.threads > 0) omp::set_threads(g.threads);

    if (validate->parsed()) return cmd_validate(g, out, err);
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kExitValidation;
    }

    const ModelConfig config = require_config(g);

    if (scores->parsed()) {
      const auto ths = theta_list(thetas, theta_grid);
      const auto taus = tau_grid(config.payoffs(), tau_spec, err);
      const CsvDocument csv = score_csv(config, ths, taus);
      if (g.out_dir.empty()) {
        out << csv.text();
      } else {
        OutputDir dir(g.out_dir, config, {g.seed}, command_line);
        dir.write("scores.csv", csv.text());
        dir.finish();
      }
      return kExitOk;
    }

    if (tau->parsed()) {
      const auto ths = theta_list(thetas, theta_grid);
      Json doc;
      if (theta_grid.empty() && ths.size() == 1) {
        doc = threshold_json(config, ths.front());
      } else {
        doc = Json::array();
        for (double th : ths) doc.push_back(threshold_json(config, th));
      }
      const std::string text = doc.dump(2) + "\n";
      if (g.out_dir.empty()) {
        out << text;
      } else {
        OutputDir dir(g.out_dir, config, {g.seed}, command_line);
        dir.write("thresholds.json", text);
        dir.finish();
      }
      return kExitOk;
    }

    if (regret->parsed()) {
      const auto ths = theta_list(thetas, theta_grid);
      const auto taus = tau_grid(config.payoffs(), tau_spec, err);
      const RegretOutput r = regret_output(config, ths, qs, taus);
      if (g.out_dir.empty()) {
        out << r.csv.text();
        err << "notice: jump annotations are written only with --out\n";
      } else {
        OutputDir dir(g.out_dir, config, {g.seed}, command_line);
        dir.write("regret.csv", r.csv.text());
        dir.write("regret_jumps.json", r.jumps.dump(2) + "\n");
        dir.finish();
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      if (g.out_dir.empty()) throw DomainError("sweep requires --out");
      const auto ths = theta_list(thetas, theta_grid);
      const auto taus = tau_grid(config.payoffs(), tau_spec, err);
      OutputDir dir(g.out_dir, config, {g.seed}, command_line);

      dir.write("scores.csv", score_csv(config, ths, taus).text());
      const RegretOutput r = regret_output(config, ths, {0, 1}, taus);
      dir.write("regret.csv", r.csv.text());
      dir.write("regret_jumps.json", r.jumps.dump(2) + "\n");

      const EnvironmentReport env = classify_environment(config);
      const TauBarResult bar = find_tau_bar(config);
      Json th = tau_bar_json(bar, TauBarMode::analytic);
      th["classification"] = environment_json(env);
      Json per_theta = Json::array();
      for (double t : ths) per_theta.push_back(threshold_json(config, t));
      th["thetas"] = per_theta;
      dir.write("thresholds.json", th.dump(2) + "\n");

      const auto avg_taus = linspace(taus.front(), taus.back(), average_points);
      dir.write("average_regret.csv", average_regret_csv(config, avg_taus).text());
      dir.finish();
      return kExitOk;
    }

    if (simulate->parsed()) {
      if (g.out_dir.empty()) throw DomainError("simulate requires --out");
      require_open_tau(config.payoffs(), sim_tau);
      OutputDir dir(g.out_dir, config, {g.seed}, command_line);

      const auto stage_one = sample_population(config, sim_m, g.seed, PopulationStream::stage_one);
      const auto records = run_stage_one(config, stage_one, sim_tau);
      CsvDocument s1csv({"theta", "accepted", "q_label"});
      for (const StageOneRecord& rec : records) {
        const auto& label = rec.q_label();
        s1csv.add_row({format_number(rec.theta()), bit(rec.accepted()),
                       label ? std::to_string(as_bit(*label)) : std::string()});
      }
      dir.write("stage1.csv", s1csv.text());

      CsvDocument emp({"bin", "theta_lo", "theta_hi", "count", "accepted", "qualified_accepted",
                       "s2_hat", "s2_se", "s1_hat", "s1_se"});
      const auto bins_out = empirical_scores(records, bins);
      for (std::size_t b = 0; b < bins_out.size(); ++b) {
        const EmpiricalBin& e = bins_out[b];
        emp.add_row({std::to_string(b), format_number(e.theta_lo), format_number(e.theta_hi),
                     std::to_string(e.count), std::to_string(e.accepted),
                     std::to_string(e.qualified_accepted), format_number(e.s2_hat),
                     format_number(e.s2_se), e.s1_hat ? format_number(*e.s1_hat) : "",
                     e.s1_se ? format_number(*e.s1_se) : ""});
      }
      dir.write("scores_empirical.csv", emp.text());

      const auto stage_two = sample_population(config, sim_m, g.seed, PopulationStream::stage_two);
      const PairedRegretEstimate est = average_regret(config, stage_two, sim_tau);
      const double a1 = expected_regret(config, Algorithm::s1, sim_tau);
      const double a2 = expected_regret(config, Algorithm::s2, sim_tau);
      CsvDocument mc({"tau", "algo", "mean", "standard_error", "m", "seed", "analytic"});
      const std::pair<const char*, std::pair<const McEstimate*, double>> rows[] = {
          {"s1", {&est.s1, a1}}, {"s2", {&est.s2, a2}}, {"gap", {&est.gap, a2 - a1}}};
      for (const auto& [name, v] : rows) {
        mc.add_row({format_number(sim_tau), name, format_number(v.first->mean),
                    format_number(v.first->standard_error), std::to_string(v.first->m),
                    std::to_string(g.seed), format_number(v.second)});
      }
      dir.write("regret_mc.csv", mc.text());
      dir.write("environment.json", environment_json(classify_environment(config)).dump(2) + "\n");
      dir.finish();
      return kExitOk;
    }

    if (classify->parsed()) {
      TauBarOptions opts;
      opts.mode = mode_name == "mc" ? TauBarMode::monte_carlo : TauBarMode::analytic;
      opts.m = sim_m;
      opts.seed = g.seed;
      Json doc = environment_json(classify_environment(config));
      doc["tau_bar"] = tau_bar_json(find_tau_bar(config, opts), opts.mode);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    return kExitOk;
  } catch (const InvalidModelError& e) {
    err << "invalid config: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace screening::cli
