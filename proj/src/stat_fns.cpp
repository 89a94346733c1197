#include "slopegraph/stat_fns.hpp"

#include <cmath>
#include <stdexcept>

namespace slopegraph {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kFpMin = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error("incomplete beta: x outside [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(int df, double t) {
  if (df < 1) throw std::domain_error("student_t_cdf: df must be >= 1");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  const double nu = static_cast<double>(df);
  const double x = nu / (nu + t * t);
  const double half_tail = 0.5 * regularized_incomplete_beta(0.5 * nu, 0.5, x);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_pdf(int df, double t) {
  if (df < 1) throw std::domain_error("student_t_pdf: df must be >= 1");
  const double nu = static_cast<double>(df);
  const double ln = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                    0.5 * std::log(nu * M_PI) -
                    0.5 * (nu + 1.0) * std::log1p(t * t / nu);
  return std::exp(ln);
}

double student_t_quantile(int df, double prob) {
  if (df < 1) throw std::domain_error("student_t_quantile: df must be >= 1");
  if (!(prob > 0.0 && prob < 1.0)) {
    throw std::domain_error("student_t_quantile: prob must lie in (0,1)");
  }
  if (prob == 0.5) return 0.0;
  if (prob < 0.5) return -student_t_quantile(df, 1.0 - prob);

  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(df, hi) < prob) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("student_t_quantile: bracket overflow");
  }
  // Newton with a bisection safeguard; the bracket [lo, hi] always contains
  // the root.
  double q = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = student_t_cdf(df, q) - prob;
    if (f > 0.0) {
      hi = q;
    } else {
      lo = q;
    }
    const double dens = student_t_pdf(df, q);
    double next = (dens > 0.0) ? q - f / dens : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - q);
    q = next;
    if (step <= 1e-14 * (1.0 + std::fabs(q))) break;
  }
  return q;
}

double sample_gamma(double shape, double rate, RngStream& rng) {
  return rng.gamma(shape, rate);
}

Eigen::MatrixXd sample_mvnormal(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, Eigen::Index n,
                                RngStream& rng) {
  const Eigen::Index p = mean.size();
  if (cov.rows() != p || cov.cols() != p) {
    throw std::invalid_argument("sample_mvnormal: mean/cov dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("sample_mvnormal: covariance is not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd z(p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) z[j] = rng.normal();
    x.row(i) = (mean + l * z).transpose();
  }
  return x;
}

}  // namespace slopegraph
