#ifndef SLOPEGRAPH_GSLOPE_HPP
#define SLOPEGRAPH_GSLOPE_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "slopegraph/slope_norm.hpp"

namespace slopegraph {

struct AdmmConfig {
  double rho = 1.0;
  double tol_primal = 1e-5;
  double tol_dual = 1e-5;
  int max_iter = 2000;
};

struct PrecisionEstimate {
  Eigen::MatrixXd theta;    // positive definite iterate
  Eigen::MatrixXd support;  // exactly sparse iterate; the graph is read here
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
  // Penalized log-likelihood of the standardized (correlation-scale) problem
  // at `support`: log det Y - tr(Y R) - penalty, where the penalty counts
  // both off-diagonal triangles. -inf when `support` is not positive definite.
  double objective = 0.0;
};

// Splits a covariance into its correlation matrix and the vector of standard
// deviations. The returned correlation has an exactly unit diagonal.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> standardize_to_correlation(
    const Eigen::MatrixXd& s);

// Maps a correlation-scale precision matrix back to the covariance scale:
// theta_cov[i][j] = theta_corr[i][j] / (scales[i] * scales[j]). Exact zeros
// stay exact.
Eigen::MatrixXd rescale_precision(const Eigen::MatrixXd& theta_corr,
                                  const Eigen::VectorXd& scales);

// Minimizer of -log det(Theta) + (rho/2) * ||Theta - s_tilde||_F^2 over
// positive definite matrices: eigendecompose s_tilde = Q H Q' and rebuild
// with d_i = (h_i + sqrt(h_i^2 + 4/rho)) / 2. Defined for any symmetric
// s_tilde; the result is always positive definite.
Eigen::MatrixXd theta_update(const Eigen::MatrixXd& s_tilde, double rho);

// Row-major vectorization of the strict upper triangle, and its inverse
// (symmetric fill, diagonal untouched).
Eigen::VectorXd upper_offdiagonal(const Eigen::MatrixXd& m);
void set_upper_offdiagonal(Eigen::MatrixXd& m, const Eigen::VectorXd& x);

// Optional warm start for the ADMM core; `initialized` toggles use.
struct AdmmState {
  bool initialized = false;
  Eigen::MatrixXd y;
  Eigen::MatrixXd z;
};

// ADMM on a correlation matrix r. Iterates
//   Theta <- theta_update(-Z + Y - r/rho, rho)
//   Y     <- prox of the off-diagonal of (Theta + Z) at scale rho,
//            diagonal copied unpenalized
//   Z     <- Z + (Theta - Y)
// and stops when ||Theta-Y||_F <= tol_primal*(1+||Theta||_F) and
// rho*||Y_k+1 - Y_k||_F <= tol_dual*(1+||Z||_F), or at max_iter (converged is
// then false but the estimate is still returned). When `state` is given it
// supplies the starting (Y, Z) and receives the final ones.
PrecisionEstimate admm_solve_correlation(const Eigen::MatrixXd& r,
                                         const LambdaSequence& lambda,
                                         const AdmmConfig& config,
                                         AdmmState* state = nullptr);

// Full estimator on a sample covariance: standardizes to a correlation
// matrix internally, solves, and rescales theta and support back. The
// covariance may be singular (n < p is fine).
PrecisionEstimate estimate_gslope(const Eigen::MatrixXd& s,
                                  const LambdaSequence& lambda,
                                  const AdmmConfig& config = {});

// Post-hoc optimality certificate: with W = theta^-1, returns the dual
// sorted-l1 norm of the off-diagonal of W - s and whether it is <= 1 + 1e-4.
// When lambda is identically zero the norm is 0 if W - s vanishes and
// +inf otherwise.
std::pair<bool, double> check_dual_feasibility(const PrecisionEstimate& estimate,
                                               const Eigen::MatrixXd& s,
                                               const LambdaSequence& lambda);

// Edges (i, j), i < j, where support[i][j] != 0 exactly.
std::vector<std::pair<int, int>> extract_graph(const PrecisionEstimate& estimate);

// log det(theta) - tr(theta * s) - penalty with the penalty counting both
// off-diagonal triangles. -inf when theta is not positive definite.
double penalized_objective(const Eigen::MatrixXd& theta, const Eigen::MatrixXd& s,
                           const LambdaSequence& lambda);

}  // namespace slopegraph

#endif
