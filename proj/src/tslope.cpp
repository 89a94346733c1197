#include "slopegraph/tslope.hpp"

#include <cmath>
#include <stdexcept>

namespace slopegraph {

double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                   const Eigen::MatrixXd& theta) {
  if (x.size() != mu.size() || theta.rows() != x.size() || theta.cols() != x.size()) {
    throw std::invalid_argument("mahalanobis: dimension mismatch");
  }
  const Eigen::VectorXd d = x - mu;
  return d.dot(theta * d);
}

double estep_tau(double delta, double nu, int p) {
  return (nu + static_cast<double>(p)) / (nu + delta);
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> mstep_moments(
    const Eigen::MatrixXd& x, const Eigen::VectorXd& tau) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (n < 2) throw std::invalid_argument("mstep_moments: need at least two observations");
  if (tau.size() != n) throw std::invalid_argument("mstep_moments: tau length mismatch");
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!(tau[j] > 0.0)) {
      throw std::invalid_argument("mstep_moments: tau must be strictly positive");
    }
  }
  const Eigen::VectorXd mu = (x.transpose() * tau) / tau.sum();
  Eigen::MatrixXd centered = x.rowwise() - mu.transpose();
  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index j = 0; j < n; ++j) {
    scatter.noalias() += tau[j] * centered.row(j).transpose() * centered.row(j);
  }
  scatter /= static_cast<double>(n);
  return {mu, 0.5 * (scatter + scatter.transpose())};
}

namespace {

PrecisionEstimate weighted_precision_fit(const Eigen::MatrixXd& scatter,
                                         const LambdaSequence& lambda,
                                         const AdmmConfig& inner,
                                         AdmmState* state) {
  auto [r, scales] = standardize_to_correlation(scatter);
  PrecisionEstimate est = admm_solve_correlation(r, lambda, inner, state);
  est.theta = rescale_precision(est.theta, scales);
  est.support = rescale_precision(est.support, scales);
  return est;
}

}  // namespace

TslopeEstimate estimate_tslope(const Eigen::MatrixXd& x,
                               const LambdaSequence& lambda,
                               const EmConfig& config) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (n < 2) throw std::invalid_argument("estimate_tslope: need at least two observations");
  if (!(config.nu > 2.0)) {
    throw std::invalid_argument("estimate_tslope: nu must exceed 2");
  }
  if (!(config.epsilon > 0.0) || config.max_em_iter < 1) {
    throw std::invalid_argument("estimate_tslope: invalid EM config");
  }

  // Unit weights give the ordinary mean and (1/n) covariance for the
  // initial fit.
  AdmmState state;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  auto [mu0, s0] = mstep_moments(x, ones);
  Eigen::VectorXd mu = mu0;
  PrecisionEstimate fit = weighted_precision_fit(s0, lambda, config.inner, &state);

  TslopeEstimate out;
  out.tau_weights = ones;
  out.converged = false;
  out.em_iterations = 0;

  Eigen::VectorXd tau(n);
  for (int k = 1; k <= config.max_em_iter; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double delta = mahalanobis(x.row(j).transpose(), mu, fit.theta);
      tau[j] = estep_tau(delta, config.nu, static_cast<int>(p));
    }
    if (!tau.allFinite()) {
      throw std::runtime_error("estimate_tslope: non-finite weights");
    }
    auto [mu_new, scatter] = mstep_moments(x, tau);
    PrecisionEstimate next = weighted_precision_fit(scatter, lambda, config.inner, &state);
    const double change = (next.theta - fit.theta).norm();
    mu = mu_new;
    fit = std::move(next);
    out.em_iterations = k;
    if (change < config.epsilon) {
      out.converged = true;
      break;
    }
  }

  out.mu = mu;
  out.theta = std::move(fit);
  out.tau_weights = tau;
  return out;
}

double t_penalized_loglik(const Eigen::MatrixXd& x, const Eigen::VectorXd& mu,
                          const Eigen::MatrixXd& theta, double nu,
                          const LambdaSequence& lambda) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) {
    return -std::numeric_limits<double>::infinity();
  }
  double log_det = 0.0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < p; ++i) log_det += 2.0 * std::log(l(i, i));

  double tail = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    tail += std::log(nu + mahalanobis(x.row(j).transpose(), mu, theta));
  }
  const double penalty =
      static_cast<double>(n) * sorted_l1(upper_offdiagonal(theta), lambda);
  return 0.5 * static_cast<double>(n) * log_det -
         0.5 * (nu + static_cast<double>(p)) * tail - penalty;
}

}  // namespace slopegraph
