#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "summax/coefficients.hpp"
#include "summax/innovations.hpp"
#include "summax/report.hpp"
#include "summax/tail_model.hpp"

namespace summax {

// Config-driven Monte Carlo experiments. Replications are embarrassingly
// parallel with per-replication derived streams; aggregation folds results
// in replication order, so output is bit-identical for any worker count.
struct ExperimentConfig {
  std::string experiment;  // marginal | negligibility | m1_counterexample | infinite_order
  TailModel tail{0.8, 0.7};
  InnovationSpec innovations;
  CoefficientModel coefficients;
  std::vector<std::uint64_t> n_grid{1000, 10000, 100000};
  std::uint64_t reps = 1000;
  double u = 0.1;       // truncation level for diagnostics
  double delta = 0.2;   // negligibility threshold
  double epsilon = 0.1; // finite-order approximation threshold
  std::vector<double> t_grid{0.25, 0.5, 1.0};
  std::vector<std::uint64_t> q_grid{1, 2, 4, 8};
  std::vector<double> u_grid{0.05, 0.1, 0.2, 0.4};
  std::uint64_t atom_count = 10000;
  std::uint64_t limit_grid_nodes = 0;
  double tol = 1e-6;
  std::uint64_t seed = 20240817;
  unsigned threads = 0;
  std::string out_dir;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
void validate(const ExperimentConfig& config);

ExperimentReport run_marginal_convergence(const ExperimentConfig& config);
ExperimentReport run_negligibility(const ExperimentConfig& config);
ExperimentReport run_m1_counterexample(const ExperimentConfig& config);
ExperimentReport run_infinite_order(const ExperimentConfig& config);

// Dispatch on config.experiment; writes CSV/JSON (+ raw samples) into
// config.out_dir when set.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace summax
