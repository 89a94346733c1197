#include "slopegraph/tuning.hpp"

#include <cmath>
#include <stdexcept>

#include "slopegraph/stat_fns.hpp"

namespace slopegraph {

namespace {

// t_{n-2}(prob) / sqrt(n-2 + t_{n-2}(prob)^2), the correlation-scale critical
// value shared by every scheme.
double correlation_threshold(int n, double prob) {
  const double t = student_t_quantile(n - 2, prob);
  return t / std::sqrt(static_cast<double>(n - 2) + t * t);
}

double max_diagonal(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw std::invalid_argument("tuning: covariance must be square and non-empty");
  }
  double best = 0.0;
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    if (!(s(i, i) > 0.0)) {
      throw std::invalid_argument("tuning: covariance diagonal must be positive");
    }
    best = std::max(best, s(i, i));
  }
  return best;
}

void check_level(int n, double alpha) {
  if (n < 3) throw std::invalid_argument("tuning: need n >= 3");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("tuning: alpha must lie in (0,1)");
  }
}

}  // namespace

double lambda_banerjee(const Eigen::MatrixXd& s, int n, double alpha) {
  check_level(n, alpha);
  const double smax = max_diagonal(s);
  const double p = static_cast<double>(s.rows());
  return smax * correlation_threshold(n, 1.0 - alpha / (2.0 * p * p));
}

double lambda_bonferroni(const Eigen::MatrixXd& s, int n, double alpha) {
  check_level(n, alpha);
  const double smax = max_diagonal(s);
  const double p = static_cast<double>(s.rows());
  return smax * correlation_threshold(n, 1.0 - alpha / (p * (p - 1.0)));
}

LambdaSequence lambda_holm(int n, Eigen::Index m, double alpha, bool two_sided) {
  check_level(n, alpha);
  if (m < 1) throw std::invalid_argument("lambda_holm: need m >= 1");
  Eigen::VectorXd values(m);
  const double divisor = two_sided ? 2.0 : 1.0;
  for (Eigen::Index k = 1; k <= m; ++k) {
    const double level = alpha / (divisor * static_cast<double>(m + 1 - k));
    values[k - 1] = std::max(0.0, correlation_threshold(n, 1.0 - level));
  }
  return LambdaSequence(std::move(values));
}

LambdaSequence lambda_bh(int n, Eigen::Index m, double alpha) {
  check_level(n, alpha);
  if (m < 1) throw std::invalid_argument("lambda_bh: need m >= 1");
  Eigen::VectorXd values(m);
  for (Eigen::Index k = 1; k <= m; ++k) {
    const double level = alpha * static_cast<double>(k) / (2.0 * static_cast<double>(m));
    values[k - 1] = std::max(0.0, correlation_threshold(n, 1.0 - level));
  }
  return LambdaSequence(std::move(values));
}

LambdaSequence lambda_constant(double value, Eigen::Index m) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument("lambda_constant: value must be nonnegative");
  }
  return LambdaSequence::Constant(value, m);
}

LambdaSequence make_lambda(const TuningSpec& spec, const Eigen::MatrixXd& s, int n) {
  const Eigen::Index p = s.rows();
  const Eigen::Index m = p * (p - 1) / 2;
  switch (spec.scheme) {
    case TuningScheme::kBanerjee:
      return lambda_constant(lambda_banerjee(s, n, spec.alpha), m);
    case TuningScheme::kBonferroni:
      return lambda_constant(lambda_bonferroni(s, n, spec.alpha), m);
    case TuningScheme::kHolm:
      return lambda_holm(n, m, spec.alpha, spec.holm_two_sided);
    case TuningScheme::kBh:
      return lambda_bh(n, m, spec.alpha);
    case TuningScheme::kConstant:
      return lambda_constant(spec.constant_value, m);
  }
  throw std::logic_error("make_lambda: unknown scheme");
}

}  // namespace slopegraph
