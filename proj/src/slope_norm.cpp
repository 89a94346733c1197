#include "slopegraph/slope_norm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace slopegraph {

LambdaSequence::LambdaSequence(Eigen::VectorXd values) : values_(std::move(values)) {
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0)) {
      throw std::invalid_argument("LambdaSequence: entries must be nonnegative");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw std::invalid_argument("LambdaSequence: entries must be non-increasing");
    }
  }
}

LambdaSequence LambdaSequence::Constant(double value, Eigen::Index m) {
  return LambdaSequence(Eigen::VectorXd::Constant(m, value));
}

namespace {

std::vector<Eigen::Index> magnitude_order(const Eigen::VectorXd& x) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&x](Eigen::Index a, Eigen::Index b) {
    return std::abs(x[a]) > std::abs(x[b]);
  });
  return order;
}

}  // namespace

double sorted_l1(const Eigen::VectorXd& x, const LambdaSequence& lambda) {
  if (x.size() != lambda.size()) {
    throw std::invalid_argument("sorted_l1: length mismatch");
  }
  const auto order = magnitude_order(x);
  double value = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    value += lambda[k] * std::abs(x[order[static_cast<std::size_t>(k)]]);
  }
  return value;
}

double dual_sorted_l1(const Eigen::VectorXd& x, const LambdaSequence& lambda) {
  if (x.size() != lambda.size()) {
    throw std::invalid_argument("dual_sorted_l1: length mismatch");
  }
  if (lambda.all_zero() && lambda.size() > 0) {
    throw std::invalid_argument("dual_sorted_l1: lambda is identically zero");
  }
  const auto order = magnitude_order(x);
  double cum_x = 0.0;
  double cum_lambda = 0.0;
  double best = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    cum_x += std::abs(x[order[static_cast<std::size_t>(k)]]);
    cum_lambda += lambda[k];
    if (cum_lambda > 0.0) best = std::max(best, cum_x / cum_lambda);
  }
  return best;
}

Eigen::VectorXd prox_sorted_l1(const Eigen::VectorXd& v,
                               const LambdaSequence& lambda, double rho) {
  if (v.size() != lambda.size()) {
    throw std::invalid_argument("prox_sorted_l1: length mismatch");
  }
  if (!(rho > 0.0)) {
    throw std::invalid_argument("prox_sorted_l1: rho must be positive");
  }
  const Eigen::Index m = v.size();
  Eigen::VectorXd result = Eigen::VectorXd::Zero(m);
  if (m == 0) return result;

  const auto order = magnitude_order(v);

  // Shifted magnitudes in sorted order.
  std::vector<double> z(static_cast<std::size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::abs(v[order[static_cast<std::size_t>(k)]]) - lambda[k] / rho;
  }

  // Stack of blocks (first, last, sum, average); merge while averages violate
  // the non-increasing order.
  std::vector<Eigen::Index> first(static_cast<std::size_t>(m));
  std::vector<Eigen::Index> last(static_cast<std::size_t>(m));
  std::vector<double> sum(static_cast<std::size_t>(m));
  std::vector<double> avg(static_cast<std::size_t>(m));
  std::size_t top = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    first[top] = i;
    last[top] = i;
    sum[top] = z[static_cast<std::size_t>(i)];
    avg[top] = sum[top];
    while (top > 0 && avg[top - 1] <= avg[top]) {
      --top;
      last[top] = i;
      sum[top] += sum[top + 1];
      avg[top] = sum[top] / static_cast<double>(i - first[top] + 1);
    }
    ++top;
  }

  for (std::size_t b = 0; b < top; ++b) {
    const double value = avg[b] > 0.0 ? avg[b] : 0.0;
    for (Eigen::Index i = first[b]; i <= last[b]; ++i) {
      const Eigen::Index src = order[static_cast<std::size_t>(i)];
      result[src] = v[src] < 0.0 ? -value : value;
    }
  }
  return result;
}

}  // namespace slopegraph
