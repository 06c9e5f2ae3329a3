#pragma once

#include <span>
#include <vector>

#include "frechet/metric_space.hpp"

namespace frechet {

struct WeightedArgument {
  double weight;
  Subset subset;
};

/// Weighted Fréchet mean problem of order r over subsets of a finite space.
struct FrechetProblem {
  double order = 1.0;
  std::vector<WeightedArgument> args;

  /// Throws OrderBelowOne, NegativeWeight, EmptySubset or AllWeightsZero.
  void check() const;
};

/// The full arg-min set (sorted point indices) and the attained minimum.
struct FrechetMeanSet {
  std::vector<PointIndex> minimizers;
  double objective = 0.0;

  bool contains(PointIndex p) const noexcept;
  friend bool operator==(const FrechetMeanSet&, const FrechetMeanSet&) = default;
};

/// Ties within 1e-9 * (1 + |min|) of the minimum are all reported.
double tie_tolerance(double min_objective) noexcept;

/// Σ_i α_i d(A_i, y)^r.
double objective(const FiniteMetricSpace& space, const FrechetProblem& problem, PointIndex y);

/// Exhaustive arg-min over every point of the space.
FrechetMeanSet mean_set(const FiniteMetricSpace& space, const FrechetProblem& problem);

/// Lowest-index minimizer.
PointIndex representative(const FrechetMeanSet& set);

FrechetMeanSet binary_mean(const FiniteMetricSpace& space, double order, double alpha, const Subset& a,
                           double beta, const Subset& b);

/// Cumulative mean of single points with the given weights.
FrechetMeanSet point_mean(const FiniteMetricSpace& space, double order, std::span<const PointIndex> points,
                          std::span<const double> weights);

}  // namespace frechet
