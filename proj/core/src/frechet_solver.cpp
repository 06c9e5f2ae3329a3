#include "frechet/frechet_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frechet/error.hpp"

namespace frechet {

namespace {

double power(double d, double r) { return r == 1.0 ? d : (r == 2.0 ? d * d : std::pow(d, r)); }

}  // namespace

void FrechetProblem::check() const {
  if (!(order >= 1.0) || !std::isfinite(order)) {
    throw Error(ErrorCode::OrderBelowOne, "order " + std::to_string(order));
  }
  if (args.empty()) throw Error(ErrorCode::AllWeightsZero, "no arguments");
  bool any_positive = false;
  for (const auto& arg : args) {
    if (!(arg.weight >= 0.0) || !std::isfinite(arg.weight)) {
      throw Error(ErrorCode::NegativeWeight, "weight " + std::to_string(arg.weight));
    }
    any_positive = any_positive || arg.weight > 0.0;
  }
  if (!any_positive) throw Error(ErrorCode::AllWeightsZero, "every weight is zero");
}

bool FrechetMeanSet::contains(PointIndex p) const noexcept {
  return std::binary_search(minimizers.begin(), minimizers.end(), p);
}

double tie_tolerance(double min_objective) noexcept { return 1e-9 * (1.0 + std::abs(min_objective)); }

double objective(const FiniteMetricSpace& space, const FrechetProblem& problem, PointIndex y) {
  if (y >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(y));
  double total = 0.0;
  for (const auto& arg : problem.args) {
    if (arg.weight == 0.0) continue;
    total += arg.weight * power(point_subset_distance(space, y, arg.subset), problem.order);
  }
  return total;
}

FrechetMeanSet mean_set(const FiniteMetricSpace& space, const FrechetProblem& problem) {
  problem.check();
  for (const auto& arg : problem.args) arg.subset.check(space);

  const std::size_t n = space.size();
  std::vector<double> values(n);
  double best = std::numeric_limits<double>::infinity();
  for (PointIndex y = 0; y < n; ++y) {
    values[y] = objective(space, problem, y);
    best = std::min(best, values[y]);
  }
  FrechetMeanSet out;
  out.objective = best;
  const double cutoff = best + tie_tolerance(best);
  for (PointIndex y = 0; y < n; ++y) {
    if (values[y] <= cutoff) out.minimizers.push_back(y);
  }
  return out;
}

PointIndex representative(const FrechetMeanSet& set) {
  if (set.minimizers.empty()) throw Error(ErrorCode::EmptySubset, "empty mean set");
  return set.minimizers.front();
}

FrechetMeanSet binary_mean(const FiniteMetricSpace& space, double order, double alpha, const Subset& a,
                           double beta, const Subset& b) {
  FrechetProblem problem{order, {{alpha, a}, {beta, b}}};
  return mean_set(space, problem);
}

FrechetMeanSet point_mean(const FiniteMetricSpace& space, double order, std::span<const PointIndex> points,
                          std::span<const double> weights) {
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "points and weights differ in length");
  }
  FrechetProblem problem{order, {}};
  problem.args.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) problem.args.push_back({weights[i], Subset{points[i]}});
  return mean_set(space, problem);
}

}  // namespace frechet
