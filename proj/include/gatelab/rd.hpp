#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "gatelab/moe.hpp"
#include "gatelab/prob.hpp"

namespace gatelab {

/// Rate-distortion instance: a source law over a finite input alphabet and a
/// distortion matrix d(x,t) >= 0, one column per reproduction (expert).
class RDInstance {
 public:
  RDInstance(ProbVector source, std::vector<Vec> distortion);

  /// Binary uniform source with Hamming distortion; its distortion-rate
  /// function is the closed form inv_binary_entropy(ln 2 - R).
  static RDInstance binary_hamming();

  const ProbVector& source() const { return source_; }
  std::size_t num_inputs() const { return source_.size(); }
  std::size_t num_reproductions() const { return distortion_.front().size(); }
  double d(std::size_t x, std::size_t t) const { return distortion_[x][t]; }

 private:
  ProbVector source_;
  std::vector<Vec> distortion_;
};

/// One solved point of the Lagrangian E[d] + lambda * I(X;T).
struct RDPoint {
  double lambda = 0.0;
  double rate_nats = 0.0;
  double distortion = 0.0;
  DiscreteChannel channel;
  bool converged = false;
  int iterations = 0;
  // Largest per-sweep increase of the Lagrangian observed while solving;
  // the alternating updates guarantee this stays at rounding level.
  double max_lagrangian_increase = 0.0;
};

/// Points sorted by rate ascending with distortion non-increasing.
class RDCurve {
 public:
  explicit RDCurve(std::vector<RDPoint> points);

  const std::vector<RDPoint>& points() const { return pts_; }

 private:
  std::vector<RDPoint> pts_;
};

/// Blahut-Arimoto solve of min_P E[d] + lambda I(X;T). Alternates the
/// reproduction marginal q(t) <- sum_x p(x) P(t|x) with the row update
/// P(t|x) proportional to q(t) exp(-d(x,t)/lambda), until the Lagrangian
/// stalls below tol or max_iter sweeps pass.
RDPoint ba_lagrangian_solve(const RDInstance& inst, double lambda, double tol = 1e-10,
                            int max_iter = 10000);

/// One Blahut-Arimoto solve per lambda, assembled into a curve.
RDCurve trace_rd_curve(const RDInstance& inst, const std::vector<double>& lambdas,
                       double tol = 1e-10, int max_iter = 10000, int threads = 1);

/// Distortion-rate function of the binary symmetric channel:
/// inv_binary_entropy(ln 2 - rate). Rates above ln 2 clamp to distortion 0
/// and set *clamped_high when provided.
double bsc_distortion_rate(double rate_nats, bool* clamped_high = nullptr);

/// Builds d(x,t) = E_{Y|X=x}[loss(h_t(x), Y)] over a finite input support
/// with uniform source weights. label_law(x) is P(Y=1 | X=x).
RDInstance distortion_matrix_from_experts(const ExpertBank& bank, const std::vector<Vec>& inputs,
                                          const std::function<double(const Vec&)>& label_law,
                                          const LossFn& loss = zero_one_loss);

/// Risk bound d_at_rate + delta_m + sqrt(2 * info_sw / m).
double thm2_bound(double d_at_rate, double delta_m, double info_sw, int m);

struct CapacityCheck {
  bool within = false;
  double gap = 0.0;  // capacity - achieved_rate
};

/// Whether an achieved gating rate fits under an exogenous capacity.
CapacityCheck capacity_check(double achieved_rate, double capacity);

/// Binary randomized-response channel with stay probability
/// e^eps / (1 + e^eps); satisfies the eps-LDP ratio condition
/// P(t|x) <= e^eps P(t|x') for all t, x, x'.
DiscreteChannel randomized_response_channel(double epsilon);

/// CSV with header lambda,rate_nats,distortion,converged,iterations.
/// When analytic_dev is given (one value per point, in curve order) an
/// analytic_dev column is appended.
void write_rd_curve_csv(std::ostream& out, const RDCurve& curve,
                        const std::vector<double>* analytic_dev = nullptr);

}  // namespace gatelab
