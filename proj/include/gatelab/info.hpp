#pragma once

#include <utility>

#include "gatelab/prob.hpp"

namespace gatelab {

// All information quantities are in nats. Multiply by 1/LN2 for bits.
inline constexpr double LN2 = 0.69314718055994530942;

/// Shannon entropy -sum p ln p with the 0 ln 0 = 0 convention.
double entropy(const ProbVector& p);

/// Binary entropy h(p) = -p ln p - (1-p) ln(1-p) for p in [0,1].
double binary_entropy(double p);

/// Inverse of binary_entropy restricted to [0, 0.5], by bisection.
/// Accepts h_val in [0, ln 2] (with 1e-12 slack); |h(result) - h_val| <= 1e-10.
double inv_binary_entropy(double h_val);

/// Exact mutual information of a finite joint PMF.
double mutual_information(const JointPMF& joint);

/// I(X;T) of the joint induced by an input law and a channel; computed by
/// assembling the joint and calling mutual_information on it.
double channel_mutual_information(const ProbVector& input, const DiscreteChannel& ch);

/// For a joint obeying S -> W -> L, returns (I(S;W), I(S;L)). The caller
/// asserts the data-processing inequality I(S;L) <= I(S;W).
std::pair<double, double> dpi_gap(const ThreeWayPmf& joint);

}  // namespace gatelab
