#ifndef SLOPEGRAPH_SLOPE_NORM_HPP
#define SLOPEGRAPH_SLOPE_NORM_HPP

#include <Eigen/Dense>

namespace slopegraph {

// Non-increasing, nonnegative penalty sequence; one entry per penalized
// coordinate. Validated on construction.
class LambdaSequence {
 public:
  explicit LambdaSequence(Eigen::VectorXd values);

  static LambdaSequence Constant(double value, Eigen::Index m);

  const Eigen::VectorXd& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }
  bool all_zero() const { return values_.size() == 0 || values_[0] == 0.0; }

 private:
  Eigen::VectorXd values_;
};

// Sorted-l1 norm: sum_i lambda_i * |x|_(i) with |x|_(1) >= ... >= |x|_(m).
double sorted_l1(const Eigen::VectorXd& x, const LambdaSequence& lambda);

// Dual of the sorted-l1 norm: max over prefixes k of
// (sum_{i<=k} |x|_(i)) / (sum_{i<=k} lambda_i). Throws std::invalid_argument
// when lambda is identically zero.
double dual_sorted_l1(const Eigen::VectorXd& x, const LambdaSequence& lambda);

// argmin_x  sorted_l1(x, lambda) + (rho/2) * ||v - x||^2.
//
// Reduces by sign and magnitude order, runs the stack-based
// pool-adjacent-violators pass on |v|_(i) - lambda_i/rho, clips at zero, and
// restores order and signs. Entries shrunk to zero come out as exact zeros.
// Ties in |v| are broken by original index.
Eigen::VectorXd prox_sorted_l1(const Eigen::VectorXd& v,
                               const LambdaSequence& lambda, double rho);

}  // namespace slopegraph

#endif
