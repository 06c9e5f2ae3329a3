#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace frechet::euclid {

using Point = Eigen::VectorXd;

/// Weighted singleton arguments in R^d: minimize Σ α_i ‖y − y_i‖^r.
struct EuclideanProblem {
  std::vector<Point> points;
  std::vector<double> weights;
  double order = 1.0;

  std::size_t dimension() const noexcept { return points.empty() ? 0 : points.front().size(); }

  /// Throws DimensionMismatch, NegativeWeight, WeightSumZero or OrderBelowOne.
  void check() const;
};

struct SolverConfig {
  double tol = 1e-10;
  std::size_t max_iter = 10'000;
  double anchor_eps = 1e-12;
};

struct EuclideanSolution {
  Point minimizer;
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct Box {
  Point lo;
  Point hi;
};

double objective(const EuclideanProblem& problem, const Point& y);

/// ∇F(y) = Σ α_i r ‖y − y_i‖^{r−2} (y − y_i); anchors contribute zero for r > 1.
Point gradient(const EuclideanProblem& problem, const Point& y);

Point weighted_centroid(const EuclideanProblem& problem);

/// Closed-form weighted average; requires order == 2.
EuclideanSolution weighted_mean_r2(const EuclideanProblem& problem);

/// Weiszfeld iteration with the Vardi–Zhang modification at anchors; order == 1.
EuclideanSolution geometric_median_weiszfeld(const EuclideanProblem& problem, const SolverConfig& config = {});

/// Gradient descent with backtracking for order > 1. Delegates order == 1 to Weiszfeld.
EuclideanSolution general_r_descent(const EuclideanProblem& problem, const SolverConfig& config = {});

/// Dispatches on the order: closed form for 2, Weiszfeld for 1, descent otherwise.
EuclideanSolution solve(const EuclideanProblem& problem, const SolverConfig& config = {});

/// Best node of a regular grid with `resolution` nodes per axis over `box`.
EuclideanSolution grid_oracle(const EuclideanProblem& problem, const Box& box, std::size_t resolution);

/// Axis-aligned bounding box of the problem's points.
Box bounding_box(const EuclideanProblem& problem);

}  // namespace frechet::euclid
