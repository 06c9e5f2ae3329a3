#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "frechet/metric_space.hpp"

namespace frechet {

/// Points reachable as a cumulative mean of the base points under some
/// nonnegative weights, each with a normalized weight vector certifying it.
struct HullResult {
  double order = 1.0;
  Subset base;
  std::vector<PointIndex> members;
  /// Indexed like base.members(); sums to one.
  std::map<PointIndex, std::vector<double>> witnesses;

  bool contains(PointIndex p) const noexcept;
};

/// Feasibility tolerance on the LP value before the witness is re-checked.
inline constexpr double kHullFeasibilityTol = 1e-9;

/// Finds α on the simplex over `base` with `candidate` in the mean set of
/// Σ α_i d(a_i, ·)^r, or nullopt when no such weights exist.
std::optional<std::vector<double>> membership_witness(const FiniteMetricSpace& space, const Subset& base,
                                                      double order, PointIndex candidate);

HullResult hull_members(const FiniteMetricSpace& space, const Subset& base, double order);

/// Union of mean sets over the simplex grid with `grid_steps` subdivisions.
/// Only ever finds a subset of hull_members.
std::vector<PointIndex> hull_grid_oracle(const FiniteMetricSpace& space, const Subset& base, double order,
                                         std::size_t grid_steps);

struct ConvexityCounterexample {
  std::vector<PointIndex> combo;
  std::vector<double> weights;
  PointIndex outside;
};

struct ConvexityReport {
  bool convex = true;
  std::optional<ConvexityCounterexample> counterexample;
  std::size_t combos_checked = 0;
  std::size_t max_combo_size = 0;
};

/// Checks closure of `set` under cumulative means of up to `max_combo_size`
/// of its own points, deciding each outside point exactly.
ConvexityReport check_convexity(const FiniteMetricSpace& space, const Subset& set, double order,
                                std::size_t max_combo_size = 3);

}  // namespace frechet
