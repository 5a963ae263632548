#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gatelab/prob.hpp"
#include "gatelab/rng.hpp"

namespace gatelab {

struct BscConfig {
  std::vector<double> p_true_grid = default_p_grid();
  std::vector<double> candidate_ps = default_p_grid();
  std::size_t m = 200;     // dataset size
  std::size_t n_mc = 400;  // Monte Carlo datasets per p_true
  double beta = 1.0;       // posterior inverse temperature
  std::uint64_t root_seed = 42;
  // Bound uses D(mean rate) instead of the default mean of per-sample D.
  bool bound_uses_mean_rate = false;
  int threads = 1;

  static std::vector<double> default_p_grid();  // 0.05, 0.10, ..., 0.45
  void validate() const;
};

/// m (x, y) bit pairs with x fair and y = x XOR Bernoulli(p_true) noise.
struct BscDataset {
  std::vector<std::pair<int, int>> pairs;
};

struct Thm2Row {
  double p_true = 0.0;
  double mean_pop_risk = 0.0;
  double mean_rate_nats = 0.0;
  double mean_d_at_rate = 0.0;
  double mean_info_sw_nats = 0.0;
  double mean_bound = 0.0;
  double pop_se = 0.0;  // Monte Carlo standard error of mean_pop_risk
  bool violation = false;
};

/// Per-dataset record, kept so plots can use either the per-sample rate or
/// the per-row mean rate on the x axis.
struct Thm2Sample {
  double p_true = 0.0;
  std::size_t mc_index = 0;
  std::size_t picked = 0;  // sampled candidate index
  double p_w = 0.0;
  double rate_nats = 0.0;
  double d_at_rate = 0.0;
  double pop_risk = 0.0;
};

struct Thm2Result {
  std::vector<Thm2Row> rows;
  std::vector<Thm2Sample> samples;
};

BscDataset generate_bsc_dataset(double p_true, std::size_t m, Rng& rng);

/// k ln p + (m-k) ln(1-p) with k the number of x != y disagreements.
double bsc_loglik(const BscDataset& data, double p);

/// q(r) proportional to exp(beta * loglik_r), max-subtracted.
ProbVector tempered_posterior(const std::vector<double>& logliks, double beta);

/// Gating rate of a one-bit gate with crossover p: ln 2 - h(p).
double gating_rate_bsc(double p);

/// Tempered-posterior channel selection over the candidate grid. One row per
/// p_true; violation set when mean_pop_risk > mean_bound + 3 * pop_se.
Thm2Result run_thm2(const BscConfig& config);

/// CSV with header p_true,mean_pop_risk,mean_rate_nats,mean_D_at_rate,
/// mean_info_sw_nats,mean_bound,violation_flag.
void write_thm2_csv(std::ostream& out, const std::vector<Thm2Row>& rows);

/// CSV with header p_true,mc_index,picked,p_w,rate_nats,d_at_rate,pop_risk.
void write_thm2_samples_csv(std::ostream& out, const std::vector<Thm2Sample>& samples);

}  // namespace gatelab
