#ifndef SLOPEGRAPH_TSLOPE_HPP
#define SLOPEGRAPH_TSLOPE_HPP

#include <Eigen/Dense>
#include <utility>

#include "slopegraph/gslope.hpp"
#include "slopegraph/slope_norm.hpp"

namespace slopegraph {

struct EmConfig {
  double nu = 4.0;         // degrees of freedom, must be > 2
  double epsilon = 1e-4;   // stop when ||Theta_k+1 - Theta_k||_F falls below
  int max_em_iter = 100;
  AdmmConfig inner;
};

struct TslopeEstimate {
  Eigen::VectorXd mu;
  PrecisionEstimate theta;
  Eigen::VectorXd tau_weights;  // final per-observation weights, all > 0
  int em_iterations = 0;
  bool converged = false;
};

// (x - mu)' * theta * (x - mu).
double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                   const Eigen::MatrixXd& theta);

// Conditional expectation of the latent scale given a squared distance:
// (nu + p) / (nu + delta).
double estep_tau(double delta, double nu, int p);

// Weighted location and (1/n)-normalized weighted scatter.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> mstep_moments(
    const Eigen::MatrixXd& x, const Eigen::VectorXd& tau);

// EM for the heavy-tailed model: alternates the tau update with a weighted
// scatter + sorted-l1 precision fit (the inner ADMM is warm-started across
// iterations). The lambda sequence stays fixed throughout.
TslopeEstimate estimate_tslope(const Eigen::MatrixXd& x,
                               const LambdaSequence& lambda,
                               const EmConfig& config = {});

// Observed-data penalized log-likelihood used to monitor EM progress:
// (n/2) log det(theta) - ((nu+p)/2) sum_j log(nu + delta_j) minus the
// penalty scaled to match the weighted fit's objective.
double t_penalized_loglik(const Eigen::MatrixXd& x, const Eigen::VectorXd& mu,
                          const Eigen::MatrixXd& theta, double nu,
                          const LambdaSequence& lambda);

}  // namespace slopegraph

#endif
