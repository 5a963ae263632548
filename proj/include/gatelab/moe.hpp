#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gatelab/prob.hpp"
#include "gatelab/rng.hpp"

namespace gatelab {

using Vec = std::vector<double>;

/// Softmax gate over n experts for inputs in R^d.
struct GateParams {
  std::vector<Vec> weights;  // n x d
  Vec biases;                // n
};

/// Linear-threshold binary predictor: x -> 1{w.x + b >= 0}.
struct LinearExpert {
  Vec weights;
  double bias = 0.0;

  int predict(const Vec& x) const;
};

struct ExpertBank {
  std::vector<LinearExpert> experts;
};

/// Gate plus expert bank with consistent expert count and input dimension.
class MoEModel {
 public:
  MoEModel(GateParams gate, ExpertBank bank);

  const GateParams& gate() const { return gate_; }
  const ExpertBank& bank() const { return bank_; }
  std::size_t num_experts() const { return gate_.biases.size(); }
  std::size_t input_dim() const { return gate_.weights.front().size(); }

 private:
  GateParams gate_;
  ExpertBank bank_;
};

struct LabeledExample {
  Vec x;
  int y = 0;  // label in {0,1}
};

class LabeledDataset {
 public:
  explicit LabeledDataset(std::vector<LabeledExample> examples);

  std::size_t size() const { return ex_.size(); }
  std::size_t dim() const { return ex_.front().x.size(); }
  const std::vector<LabeledExample>& examples() const { return ex_; }

 private:
  std::vector<LabeledExample> ex_;
};

using LossFn = std::function<double(int /*pred*/, int /*label*/)>;

inline double zero_one_loss(int pred, int label) { return pred == label ? 0.0 : 1.0; }

/// Routing distribution softmax(W x + b); entries strictly positive.
ProbVector gate_probs(const MoEModel& model, const Vec& x);

/// Samples an expert index from the gate distribution.
std::size_t sample_route(const MoEModel& model, const Vec& x, Rng& rng);

/// Mean loss with the gate integrated exactly:
/// (1/m) sum_j sum_g p_g(x_j) loss(h_g(x_j), y_j).
double empirical_risk(const MoEModel& model, const LabeledDataset& data,
                      const LossFn& loss = zero_one_loss);

/// Same computation on a held-out test set, as an estimate of the population
/// risk; exact in the gate randomness.
double population_risk_estimate(const MoEModel& model, const LabeledDataset& test,
                                const LossFn& loss = zero_one_loss);

/// Plug-in estimate of the gating rate I(X;T) in nats:
/// mean_x sum_g p_g(x) ln(p_g(x) / pi_g), with pi_g the empirical mean of the
/// gate probabilities over the inputs. Exact when the inputs enumerate a
/// finite support with equal weights.
double gating_rate_plugin(const MoEModel& model, const std::vector<Vec>& inputs);

/// Gate and expert parameters drawn i.i.d. standard normal.
MoEModel sample_model_from_prior(std::size_t d, std::size_t n, Rng& rng);

/// m examples with x ~ N(0, I_d) and y produced by routing x through the
/// model (one sampled expert per example).
LabeledDataset generate_dataset(const MoEModel& true_model, std::size_t m, Rng& rng);

}  // namespace gatelab
