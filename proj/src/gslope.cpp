#include "slopegraph/gslope.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace slopegraph {

namespace {

void check_square_symmetric(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
  }
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::VectorXd> standardize_to_correlation(
    const Eigen::MatrixXd& s) {
  check_square_symmetric(s, "standardize_to_correlation");
  const Eigen::Index p = s.rows();
  Eigen::VectorXd scales(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    if (!(s(i, i) > 0.0)) {
      throw std::invalid_argument(
          "standardize_to_correlation: diagonal entries must be positive");
    }
    scales[i] = std::sqrt(s(i, i));
  }
  Eigen::MatrixXd r(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      r(i, j) = s(i, j) / (scales[i] * scales[j]);
    }
    r(i, i) = 1.0;
  }
  return {std::move(r), std::move(scales)};
}

Eigen::MatrixXd rescale_precision(const Eigen::MatrixXd& theta_corr,
                                  const Eigen::VectorXd& scales) {
  if (theta_corr.rows() != scales.size()) {
    throw std::invalid_argument("rescale_precision: dimension mismatch");
  }
  for (Eigen::Index i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) {
      throw std::invalid_argument("rescale_precision: scales must be positive");
    }
  }
  Eigen::MatrixXd out = theta_corr;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) /= scales[i] * scales[j];
    }
  }
  return out;
}

Eigen::MatrixXd theta_update(const Eigen::MatrixXd& s_tilde, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("theta_update: rho must be positive");
  if (!s_tilde.allFinite()) {
    throw std::runtime_error("theta_update: non-finite input");
  }
  const Eigen::MatrixXd sym = 0.5 * (s_tilde + s_tilde.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("theta_update: eigendecomposition failed");
  }
  const Eigen::VectorXd& h = eig.eigenvalues();
  Eigen::VectorXd d(h.size());
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    d[i] = 0.5 * (h[i] + std::sqrt(h[i] * h[i] + 4.0 / rho));
  }
  return eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().transpose();
}

Eigen::VectorXd upper_offdiagonal(const Eigen::MatrixXd& m) {
  const Eigen::Index p = m.rows();
  Eigen::VectorXd x(p * (p - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i + 1; j < p; ++j) x[k++] = m(i, j);
  }
  return x;
}

void set_upper_offdiagonal(Eigen::MatrixXd& m, const Eigen::VectorXd& x) {
  const Eigen::Index p = m.rows();
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i + 1; j < p; ++j) {
      m(i, j) = x[k];
      m(j, i) = x[k];
      ++k;
    }
  }
}

PrecisionEstimate admm_solve_correlation(const Eigen::MatrixXd& r,
                                         const LambdaSequence& lambda,
                                         const AdmmConfig& config,
                                         AdmmState* state) {
  check_square_symmetric(r, "admm_solve_correlation");
  const Eigen::Index p = r.rows();
  if (lambda.size() != p * (p - 1) / 2) {
    throw std::invalid_argument("admm_solve_correlation: lambda length must be p(p-1)/2");
  }
  if (!(config.rho > 0.0) || !(config.tol_primal > 0.0) ||
      !(config.tol_dual > 0.0) || config.max_iter < 1) {
    throw std::invalid_argument("admm_solve_correlation: invalid config");
  }
  const double rho = config.rho;

  Eigen::MatrixXd y = (state && state->initialized)
                          ? state->y
                          : Eigen::MatrixXd::Identity(p, p);
  Eigen::MatrixXd z = (state && state->initialized)
                          ? state->z
                          : Eigen::MatrixXd::Zero(p, p);

  PrecisionEstimate est;
  Eigen::MatrixXd theta(p, p);
  Eigen::MatrixXd y_new(p, p);
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    theta = theta_update(-z + y - r / rho, rho);

    const Eigen::MatrixXd t = theta + z;
    const Eigen::VectorXd prox = prox_sorted_l1(upper_offdiagonal(t), lambda, rho);
    y_new = Eigen::MatrixXd::Zero(p, p);
    y_new.diagonal() = t.diagonal();
    set_upper_offdiagonal(y_new, prox);

    const double dual_residual = rho * (y_new - y).norm();
    z += theta - y_new;
    const double primal_residual = (theta - y_new).norm();
    y = y_new;

    if (!theta.allFinite() || !y.allFinite() || !z.allFinite()) {
      throw std::runtime_error("admm_solve_correlation: iterates became non-finite");
    }

    est.iterations = iter;
    est.primal_residual = primal_residual;
    est.dual_residual = dual_residual;
    if (primal_residual <= config.tol_primal * (1.0 + theta.norm()) &&
        dual_residual <= config.tol_dual * (1.0 + z.norm())) {
      est.converged = true;
      break;
    }
  }

  est.theta = theta;
  est.support = y;
  est.objective = penalized_objective(y, r, lambda);
  if (state) {
    state->initialized = true;
    state->y = y;
    state->z = z;
  }
  return est;
}

PrecisionEstimate estimate_gslope(const Eigen::MatrixXd& s,
                                  const LambdaSequence& lambda,
                                  const AdmmConfig& config) {
  auto [r, scales] = standardize_to_correlation(s);
  PrecisionEstimate est = admm_solve_correlation(r, lambda, config);
  est.theta = rescale_precision(est.theta, scales);
  est.support = rescale_precision(est.support, scales);
  return est;
}

std::pair<bool, double> check_dual_feasibility(const PrecisionEstimate& estimate,
                                               const Eigen::MatrixXd& s,
                                               const LambdaSequence& lambda) {
  const Eigen::Index p = estimate.theta.rows();
  if (s.rows() != p || s.cols() != p) {
    throw std::invalid_argument("check_dual_feasibility: dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(estimate.theta);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("check_dual_feasibility: theta is not positive definite");
  }
  const Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::VectorXd diff = upper_offdiagonal(w - s);

  double dual_norm;
  if (lambda.all_zero()) {
    const double tiny = 1e-10 * (1.0 + s.cwiseAbs().maxCoeff());
    dual_norm = (diff.size() == 0 || diff.cwiseAbs().maxCoeff() <= tiny)
                    ? 0.0
                    : std::numeric_limits<double>::infinity();
  } else {
    dual_norm = dual_sorted_l1(diff, lambda);
  }
  return {dual_norm <= 1.0 + 1e-4, dual_norm};
}

std::vector<std::pair<int, int>> extract_graph(const PrecisionEstimate& estimate) {
  const Eigen::Index p = estimate.support.rows();
  std::vector<std::pair<int, int>> edges;
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = i + 1; j < p; ++j) {
      if (estimate.support(i, j) != 0.0) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return edges;
}

double penalized_objective(const Eigen::MatrixXd& theta, const Eigen::MatrixXd& s,
                           const LambdaSequence& lambda) {
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) {
    return -std::numeric_limits<double>::infinity();
  }
  double log_det = 0.0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i));
  const double trace = theta.cwiseProduct(s).sum();
  const double penalty = 2.0 * sorted_l1(upper_offdiagonal(theta), lambda);
  return log_det - trace - penalty;
}

}  // namespace slopegraph
