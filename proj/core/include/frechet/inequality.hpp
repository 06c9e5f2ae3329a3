#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frechet/metric_space.hpp"
#include "frechet/random_space.hpp"

namespace frechet::lab {

namespace property {
inline constexpr std::string_view kOperatorLaws = "operator-laws";
inline constexpr std::string_view kMedian = "median-inequality";
inline constexpr std::string_view kWeightedMedian = "weighted-median";
inline constexpr std::string_view kCountableAdditivity = "countable-additivity";
inline constexpr std::string_view kWeightedCountableAdditivity = "weighted-countable-additivity";
inline constexpr std::string_view kROrderMedian = "r-order-median";
inline constexpr std::string_view kROrderCumulative = "r-order-cumulative";
inline constexpr std::string_view kFrechetTriangle = "frechet-r-triangle";
}  // namespace property

/// How a random space was produced, so a witness can be regenerated.
struct SpaceOrigin {
  std::uint64_t seed = 0;
  SpaceStrategy strategy = SpaceStrategy::MetricRepair;
  std::size_t n = 0;

  friend bool operator==(const SpaceOrigin&, const SpaceOrigin&) = default;
};

struct SpaceSnapshot {
  std::vector<std::string> labels;
  Matrix distances;

  friend bool operator==(const SpaceSnapshot&, const SpaceSnapshot&) = default;
};

SpaceSnapshot snapshot(const FiniteMetricSpace& space);

/// One concrete instance where a bound is violated, saturated, or where an
/// operator law shows notable behaviour (e.g. non-associativity).
struct ViolationWitness {
  std::string law;
  std::optional<std::uint64_t> trial;
  std::optional<SpaceOrigin> origin;
  std::optional<SpaceSnapshot> space;
  double order = 1.0;
  std::vector<double> weights;
  std::vector<PointIndex> points;
  std::optional<PointIndex> xi;
  std::vector<PointIndex> members;
  double lhs = 0.0;
  double rhs = 0.0;

  friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

/// At most this many witnesses of each kind are kept; counts are exact.
inline constexpr std::size_t kRecordLimit = 16;

struct PropertyReport {
  std::string property;
  bool theorem_regime = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t saturation_count = 0;
  std::vector<ViolationWitness> failures;
  std::vector<ViolationWitness> saturations;
  std::vector<ViolationWitness> exhibits;

  bool held() const noexcept { return failure_count == 0; }
  void add_failure(ViolationWitness w);
  void add_saturation(ViolationWitness w);
  /// Appends counts and witnesses from `other` (kept in call order).
  void merge(const PropertyReport& other);

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Slack used both for violations and for detecting saturation.
double bound_tolerance(double rhs) noexcept;

/// lhs = d(m, ξ)^r and rhs = 2^{r-1} Σ α_i d(y_i, ξ)^r for one mean-set member m.
struct BoundEvaluation {
  PointIndex member;
  double lhs;
  double rhs;
};

/// Evaluates the cumulative r-th order median bound for every member of the
/// mean set of ⊕_r α_i y_i. No precondition on the weights, so it also
/// serves the regime where the bound is not a theorem.
std::vector<BoundEvaluation> evaluate_median_bound(const FiniteMetricSpace& space, PointIndex xi,
                                                   std::span<const PointIndex> points,
                                                   std::span<const double> weights, double order);

/// Classifies each evaluation into failures and saturations of `report`.
void assess(PropertyReport& report, const std::vector<BoundEvaluation>& evaluations,
            const ViolationWitness& context);

// Theorem-regime checkers. Each returns a one-trial report that covers every
// member of the relevant mean set.

PropertyReport check_median_inequality(const FiniteMetricSpace& space, PointIndex xi, PointIndex x, PointIndex y);

/// Requires α, β ≥ 1 (WeightBelowOne otherwise).
PropertyReport check_weighted_median(const FiniteMetricSpace& space, PointIndex xi, PointIndex x, PointIndex y,
                                     double alpha, double beta);

/// Requires every weight ≥ 1. All-ones weights report as countable-additivity.
PropertyReport check_countable_additivity(const FiniteMetricSpace& space, PointIndex xi,
                                          std::span<const PointIndex> points, std::span<const double> weights);

/// Binary r-th order bound plus the r-th order triangle inequality on all triples.
PropertyReport check_r_order(const FiniteMetricSpace& space, PointIndex xi, PointIndex x, PointIndex y,
                             double order);

/// Weighted cumulative r-th order bound; requires order ≥ 1 and weights ≥ 1.
PropertyReport check_r_order_cumulative(const FiniteMetricSpace& space, PointIndex xi,
                                        std::span<const PointIndex> points, std::span<const double> weights,
                                        double order);

/// d(a,b)^r ≤ 2^{r-1}(d(a,c)^r + d(c,b)^r) for every ordered triple.
PropertyReport check_frechet_triangle(const FiniteMetricSpace& space, double order);

struct LawConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  std::vector<double> orders{1.0, 1.5, 2.0, 3.0};
};

/// Commutativity, idempotency, proportionality and the identity element as
/// mean-set equalities on sampled arguments; non-associativity witnesses
/// found along the way go to `exhibits`.
PropertyReport check_operator_laws(const FiniteMetricSpace& space, const LawConfig& config = {});

/// Representatives of (a ⊕ b) ⊕ c and a ⊕ (b ⊕ c).
struct AssociationPair {
  PointIndex left;
  PointIndex right;
};
AssociationPair association_orders(const FiniteMetricSpace& space, double order, PointIndex a, PointIndex b,
                                   PointIndex c);

/// The four-point diamond counterexample with α = β = 1/2: member m of x ⊕ y has
/// d(ξ, m) = 2 against a weighted bound of 1.
ViolationWitness weight_necessity_demo();

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::vector<double> orders{1.0, 1.5, 2.0, 3.0};
  double weight_lo = 1.0;
  double weight_hi = 5.0;
  std::size_t max_sequence = 6;
};

/// Every theorem-regime property on one space: exhaustive over triples for the
/// binary bounds, sampled sequences for the cumulative ones.
std::vector<PropertyReport> verify_space(const FiniteMetricSpace& space, const VerifyConfig& config = {});

}  // namespace frechet::lab
