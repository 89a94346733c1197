#ifndef SLOPEGRAPH_STAT_FNS_HPP
#define SLOPEGRAPH_STAT_FNS_HPP

#include <Eigen/Dense>

#include "slopegraph/rng.hpp"

namespace slopegraph {

// Regularized incomplete beta function I_x(a, b), evaluated with the
// continued-fraction expansion (Lentz).
double regularized_incomplete_beta(double a, double b, double x);

// CDF and density of Student's t with df degrees of freedom.
double student_t_cdf(int df, double t);
double student_t_pdf(int df, double t);

// The prob-quantile of Student's t with df degrees of freedom, computed by
// inverting the incomplete-beta CDF with a Newton/bisection hybrid.
// Absolute accuracy better than 1e-10. Throws std::domain_error for
// prob outside (0,1) or df < 1.
double student_t_quantile(int df, double prob);

// One Gamma(shape, rate) draw from the given stream.
double sample_gamma(double shape, double rate, RngStream& rng);

// n i.i.d. rows from N_p(mean, cov). Throws std::runtime_error if cov has no
// Cholesky factorization (not positive definite).
Eigen::MatrixXd sample_mvnormal(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, Eigen::Index n,
                                RngStream& rng);

}  // namespace slopegraph

#endif
