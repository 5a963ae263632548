#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <vector>

#include "gatelab/moe.hpp"
#include "gatelab/prob.hpp"

namespace gatelab {

/// Candidate models drawn from the prior; all share (d, n).
struct CandidateBank {
  std::vector<MoEModel> models;
};

struct Thm1Config {
  std::size_t d = 3;
  std::size_t n_experts = 10;
  std::size_t bank_size = 30;
  std::size_t m = 5;           // training-set size
  std::size_t n_datasets = 100;
  std::size_t test_size = 1000;
  std::vector<double> alpha_grid = default_alpha_grid();
  std::uint64_t root_seed = 42;
  int threads = 1;

  static std::vector<double> default_alpha_grid();  // 0, 0.05, ..., 1
  void validate() const;
};

struct Thm1Row {
  double alpha = 0.0;
  double info_sw_nats = 0.0;
  double bound_term = 0.0;  // sqrt(2 * info_sw / m)
  double gap = 0.0;         // |mean pop risk - mean emp risk|
  double mean_pop_risk = 0.0;
  double mean_emp_risk = 0.0;
  double gap_se = 0.0;  // Monte Carlo standard error of the gap estimate
  bool violation = false;
};

/// All indices attaining the minimum empirical risk over the bank, compared
/// with a 1e-12 rounding guard so exact ties are kept.
std::set<std::size_t> erm_indices(const CandidateBank& bank, const LabeledDataset& data);

/// q(w|S) = (1-alpha)/K + alpha 1{w in erm}/|erm|.
ProbVector alpha_mixture_posterior(std::size_t bank_size, const std::set<std::size_t>& erm,
                                   double alpha);

/// Plug-in I(S;W) = H(mean posterior) - mean posterior entropy, with the
/// dataset marginal uniform over the given posteriors.
double info_sw_exact(const std::vector<ProbVector>& posteriors);

/// Sweeps the alpha-mixture learner: one row per alpha, sorted ascending.
/// Risks are averaged under the exact posterior. A row is flagged as a
/// violation when gap > bound_term + 3 * gap_se + 1e-9.
std::vector<Thm1Row> run_thm1(const Thm1Config& config);

/// CSV with header
/// alpha,info_sw_nats,bound_term,gap,mean_pop_risk,mean_emp_risk,violation_flag.
void write_thm1_csv(std::ostream& out, const std::vector<Thm1Row>& rows);

}  // namespace gatelab
