#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gsdiv/estimation.hpp"

namespace gsdiv {

struct Contamination {
  std::string dist = "poisson";
  double param = 15.0;
  double rate = 0.10;       // in [0,1)
  bool bernoulli = false;   // default: exactly ceil(rate*n) replacements
};

struct SimConfig {
  int n = 50;
  int reps = 1000;
  double true_theta = 5.0;
  std::string model = "poisson";
  std::optional<Contamination> contamination;
  std::vector<TuningParams> param_grid;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: GSDIV_THREADS env var, then hardware concurrency
  FitOptions fit;
};

// Parses the JSON document; schema violations name the offending field.
SimConfig sim_config_from_json(const std::string& text);

struct SimCell {
  TuningParams p;
  double bias = 0.0;
  double mse = 0.0;
  int failures = 0;
  bool skipped = false;
  std::string skip_reason;
};

struct SimTable {
  SimConfig cfg;
  std::vector<SimCell> cells;
};

// Replace ceil(rate*n) distinct entries (chosen uniformly without
// replacement) by draws from the contaminating sampler; length preserved.
// bernoulli = true replaces each entry independently with probability rate.
std::vector<int> contaminate(std::vector<int> sample, double rate,
                             const ParametricModel& cdist, double cparam,
                             RngStream& rng, bool bernoulli = false);

// The data for replication r of a config; depends only on (seed, r).
std::vector<int> replication_data(const SimConfig& cfg, int rep);

// Reason a grid cell cannot be estimated on empirical data, if any.
std::optional<std::string> cell_skip_reason(const TuningParams& p);

// bias = mean(theta_hat) - true_theta, mse = mean squared error, over
// converged replications; failures counts the excluded ones.
SimCell run_cell(const SimConfig& cfg, const TuningParams& p);

// One run_cell per grid point. Replications are parallelized; per-cell
// reductions happen in replication order, so the table is bit-identical
// across thread counts and evaluation orders.
SimTable run_table(const SimConfig& cfg);

// Fixed columns: alpha,gamma,tau,bias,mse,failures.
std::string sim_table_csv(const SimTable& table);
std::string sim_table_json(const SimTable& table);

struct SamplingCheck {
  double empirical_var_scaled = 0.0;  // n * Var(theta_hat)
  double theoretical_avar = 0.0;      // model-case sandwich
  double skewness = 0.0;              // of sqrt(n)(theta_hat - theta)
  double excess_kurtosis = 0.0;
  int failures = 0;
};

SamplingCheck sampling_distribution_check(const ParametricModel& model,
                                          double theta, const TuningParams& p,
                                          int n, int reps, std::uint64_t seed,
                                          int threads = 0);

// The simulation grids from the reference tables (2: pure, 3: contaminated).
std::vector<TuningParams> paper_grid(int table);
SimConfig paper_config(int table, std::uint64_t seed);

int resolve_thread_count(int requested);

}  // namespace gsdiv
