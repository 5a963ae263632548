#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gatelab {

// Absolute tolerance on the total mass of any probability object.
inline constexpr double kSimplexTol = 1e-9;
// Entries in [-kNegativeClamp, 0) are treated as accumulated rounding error
// and clamped to zero; anything more negative is rejected.
inline constexpr double kNegativeClamp = 1e-12;

/// A point on the probability simplex: non-negative entries summing to one
/// within kSimplexTol. Validated on construction.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs);

  static ProbVector uniform(std::size_t n);
  static ProbVector point_mass(std::size_t n, std::size_t index);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }

  bool operator==(const ProbVector& other) const { return p_ == other.p_; }

 private:
  std::vector<double> p_;
};

/// Joint PMF over a pair of finite alphabets, row-major. Grand total must be
/// one within kSimplexTol.
class JointPMF {
 public:
  JointPMF(std::size_t rows, std::size_t cols, std::vector<double> table);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return t_[i * cols_ + j]; }
  const std::vector<double>& table() const { return t_; }

  ProbVector row_marginal() const;  // P over the row alphabet
  ProbVector col_marginal() const;  // P over the column alphabet

 private:
  std::size_t rows_, cols_;
  std::vector<double> t_;
};

/// Row-stochastic matrix P(t|x): one ProbVector per input symbol.
class DiscreteChannel {
 public:
  explicit DiscreteChannel(std::vector<ProbVector> rows);

  static DiscreteChannel bsc(double crossover);
  static DiscreteChannel identity(std::size_t n);

  std::size_t inputs() const { return rows_.size(); }
  std::size_t outputs() const { return rows_.front().size(); }
  double at(std::size_t x, std::size_t t) const { return rows_[x][t]; }
  const ProbVector& row(std::size_t x) const { return rows_[x]; }

 private:
  std::vector<ProbVector> rows_;
};

/// Three-way PMF P(s,w,l) over finite alphabets, used for data-processing
/// checks on chains S -> W -> L.
class ThreeWayPmf {
 public:
  ThreeWayPmf(std::size_t ns, std::size_t nw, std::size_t nl, std::vector<double> table);

  std::size_t ns() const { return ns_; }
  std::size_t nw() const { return nw_; }
  std::size_t nl() const { return nl_; }
  double at(std::size_t s, std::size_t w, std::size_t l) const {
    return t_[(s * nw_ + w) * nl_ + l];
  }

  JointPMF marginal_sw() const;
  JointPMF marginal_sl() const;

 private:
  std::size_t ns_, nw_, nl_;
  std::vector<double> t_;
};

/// Assembles the factorized joint P(s)P(w|s)P(l|w) of a Markov chain.
ThreeWayPmf make_markov_pmf(const ProbVector& source, const DiscreteChannel& s_to_w,
                            const DiscreteChannel& w_to_l);

}  // namespace gatelab
