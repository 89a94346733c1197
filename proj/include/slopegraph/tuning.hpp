#ifndef SLOPEGRAPH_TUNING_HPP
#define SLOPEGRAPH_TUNING_HPP

#include <Eigen/Dense>

#include "slopegraph/slope_norm.hpp"

namespace slopegraph {

enum class TuningScheme { kBanerjee, kBonferroni, kHolm, kBh, kConstant };

struct TuningSpec {
  TuningScheme scheme = TuningScheme::kBh;
  double alpha = 0.05;           // unused for kConstant
  double constant_value = 0.0;   // kConstant only
  bool holm_two_sided = false;   // kHolm only; halves the per-test level
};

// Scalar penalty for the flat-sequence estimator, calibrated so the
// probability of connecting distinct graph components stays below alpha:
// max_i s_ii * t_{n-2}(1 - alpha/(2 p^2)) / sqrt(n-2 + t^2).
double lambda_banerjee(const Eigen::MatrixXd& s, int n, double alpha);

// Same with the tighter per-pair correction 1 - alpha/(p(p-1)).
double lambda_bonferroni(const Eigen::MatrixXd& s, int n, double alpha);

// Step-down sequence: lambda_k from the t quantile at 1 - alpha/(m+1-k),
// or 1 - alpha/(2(m+1-k)) when two_sided is set. Values that would fall
// below zero (possible for large alpha in the one-sided form) are clamped
// to zero so the sequence stays a valid LambdaSequence.
LambdaSequence lambda_holm(int n, Eigen::Index m, double alpha,
                           bool two_sided = false);

// Step-up sequence: lambda_k from the t quantile at 1 - alpha*k/(2m).
LambdaSequence lambda_bh(int n, Eigen::Index m, double alpha);

LambdaSequence lambda_constant(double value, Eigen::Index m);

// Builds the sequence a TuningSpec describes for an m-pair problem with
// sample covariance s on n observations.
LambdaSequence make_lambda(const TuningSpec& spec, const Eigen::MatrixXd& s,
                           int n);

}  // namespace slopegraph

#endif
