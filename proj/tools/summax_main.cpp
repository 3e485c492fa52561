// summax: metric computations on cadlag step paths, heavy-tailed moving
// average simulation, and the Monte Carlo experiment harness.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "summax/experiments.hpp"
#include "summax/limit_processes.hpp"
#include "summax/linear_process.hpp"
#include "summax/metrics.hpp"
#include "summax/oscillation.hpp"
#include "summax/report.hpp"
#include "summax/serialization.hpp"

namespace {

int run_metric(const std::string& kind, const std::string& file_a,
               const std::string& file_b, double tol) {
  const summax::StepFunction a = summax::load_step_function(file_a);
  const summax::StepFunction b = summax::load_step_function(file_b);
  double value = 0.0;
  if (kind == "m2") {
    value = summax::d_m2(a, b, tol);
  } else if (kind == "uniform") {
    value = summax::d_uniform(a, b);
  } else if (kind == "m1star") {
    value = summax::d_m1_star(a, b, tol);
  } else {
    throw std::invalid_argument("metric: unknown kind");
  }
  std::printf("%.12g\n", value);
  return 0;
}

int run_simulate(const summax::ExperimentConfig& config, std::uint64_t n,
                 std::uint64_t rep, const std::string& out_dir) {
  summax::validate(config.tail);
  summax::validate(config.innovations);
  summax::validate(config.coefficients);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto coeffs = summax::sample_coeffs(config.coefficients, config.seed, rep);
  const std::uint64_t q = coeffs.coeffs.size() - 1;
  const auto z = summax::sample_path(config.innovations, n, q, config.seed, rep);
  const double an = summax::a_n(config.tail, n);
  const auto ma = summax::build_ma(coeffs, z, n);
  auto save = [&](const summax::StepFunction& f, const char* name) {
    summax::save_step_function(f, (fs::path(out_dir) / name).string());
  };
  save(summax::partial_sum_path(ma, an), "vn.json");
  save(summax::partial_max_path(ma, an), "mn.json");
  save(summax::proxy_sum_path(z, coeffs.total, an, n), "vn_proxy.json");
  save(summax::proxy_max_path(z, coeffs.c_plus, coeffs.c_minus, an, n), "mn_proxy.json");
  const auto points =
      summax::sample_point_set(config.tail, config.atom_count, config.seed, rep);
  save(summax::stable_levy_path(points, config.tail, config.limit_grid_nodes),
       "levy.json");
  const auto [pos, neg] = summax::extremal_paths(points);
  save(pos, "extremal_pos.json");
  save(neg, "extremal_neg.json");
  std::printf("wrote paths to %s\n", out_dir.c_str());
  return 0;
}

int run_dprime(const summax::ExperimentConfig& config, const std::vector<std::uint64_t>& ns,
               std::uint64_t k, double x, std::uint64_t reps) {
  summax::validate(config.innovations);
  std::printf("n,k,x,estimate,std_error\n");
  for (std::uint64_t n : ns) {
    const auto est = summax::dprime_statistic(config.innovations, n, k, x, reps, config.seed);
    std::printf("%llu,%llu,%.6g,%.10g,%.10g\n", (unsigned long long)n,
                (unsigned long long)k, x, est.value, est.std_error);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heavy-tailed partial sum/max path toolkit"};
  app.require_subcommand(1);

  // metric ------------------------------------------------------------------
  auto* metric = app.add_subcommand("metric", "distances between step-function fixtures");
  bool want_m2 = false, want_uniform = false, want_m1star = false;
  double tol = 1e-9;
  std::vector<std::string> files;
  metric->add_flag("--m2", want_m2, "M2 (Hausdorff graph) distance");
  metric->add_flag("--uniform", want_uniform, "uniform distance");
  metric->add_flag("--m1star", want_m1star, "M2 + oscillation-profile Levy term");
  metric->add_option("--tol", tol, "metric tolerance");
  metric->add_option("files", files, "two step-function JSON files")->expected(2);

  // simulate ----------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "emit sampled paths as JSON");
  std::string sim_config;
  std::string sim_out = "paths";
  std::uint64_t sim_n = 1000, sim_rep = 0;
  simulate->add_option("--config", sim_config, "experiment config JSON")->required();
  simulate->add_option("--n", sim_n, "path length");
  simulate->add_option("--rep", sim_rep, "replication index");
  simulate->add_option("--out-dir", sim_out, "output directory");

  // dprime ------------------------------------------------------------------
  auto* dprime = app.add_subcommand("dprime", "local-dependence diagnostic table");
  double dp_alpha = 1.0, dp_p = 0.5, dp_phi = 0.0, dp_x = 1.0;
  std::string dp_kind = "iid";
  std::vector<std::uint64_t> dp_ns{10000};
  std::uint64_t dp_k = 10, dp_reps = 1000, dp_seed = 20240817;
  dprime->add_option("--alpha", dp_alpha, "tail index");
  dprime->add_option("--p", dp_p, "positive tail balance");
  dprime->add_option("--kind", dp_kind, "iid | gauss_copula_ar1");
  dprime->add_option("--phi", dp_phi, "AR coefficient");
  dprime->add_option("--n", dp_ns, "path lengths");
  dprime->add_option("--k", dp_k, "block count");
  dprime->add_option("--x", dp_x, "threshold");
  dprime->add_option("--reps", dp_reps, "replications");
  dprime->add_option("--seed", dp_seed, "seed");

  // experiment --------------------------------------------------------------
  auto* experiment = app.add_subcommand("experiment", "run a config-driven experiment");
  std::string exp_config;
  bool check = false;
  std::uint64_t exp_seed = 0, exp_reps = 0;
  unsigned exp_threads = 0;
  std::string exp_out;
  experiment->add_option("config", exp_config, "config JSON path")->required();
  experiment->add_flag("--check", check, "exit 2 unless all verdicts pass");
  experiment->add_option("--seed", exp_seed, "override seed");
  experiment->add_option("--reps", exp_reps, "override replication count");
  experiment->add_option("--threads", exp_threads, "override worker count");
  experiment->add_option("--out-dir", exp_out, "override output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (metric->parsed()) {
      const int picked = int(want_m2) + int(want_uniform) + int(want_m1star);
      if (picked != 1) throw std::invalid_argument("metric: pick exactly one of --m2/--uniform/--m1star");
      std::string kind = want_m2 ? "m2" : want_uniform ? "uniform" : "m1star";
      return run_metric(kind, files[0], files[1], tol);
    }
    if (simulate->parsed()) {
      return run_simulate(summax::load_config(sim_config), sim_n, sim_rep, sim_out);
    }
    if (dprime->parsed()) {
      summax::ExperimentConfig cfg;
      cfg.tail = summax::make_tail_model(dp_alpha, dp_p);
      cfg.innovations.tail = cfg.tail;
      cfg.innovations.phi = dp_phi;
      cfg.innovations.kind = dp_kind == "gauss_copula_ar1"
                                 ? summax::InnovationKind::gauss_copula_ar1
                                 : summax::InnovationKind::iid;
      cfg.seed = dp_seed;
      return run_dprime(cfg, dp_ns, dp_k, dp_x, dp_reps);
    }
    if (experiment->parsed()) {
      summax::ExperimentConfig cfg = summax::load_config(exp_config);
      if (exp_seed != 0) cfg.seed = exp_seed;
      if (exp_reps != 0) cfg.reps = exp_reps;
      if (exp_threads != 0) cfg.threads = exp_threads;
      if (!exp_out.empty()) cfg.out_dir = exp_out;
      const summax::ExperimentReport report = summax::run_experiment(cfg);
      for (const auto& v : report.verdicts) {
        std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", v.name.c_str(),
                    v.detail.c_str());
      }
      if (check && !report.all_pass()) return 2;
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
