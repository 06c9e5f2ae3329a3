#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frechet {

using PointIndex = std::size_t;
using Matrix = std::vector<std::vector<double>>;

enum class ViolationKind {
  NonSquare,
  DuplicateLabel,
  NonFinite,
  NegativeDistance,
  Asymmetry,
  ZeroOffDiagonal,
  NonzeroDiagonal,
  TriangleViolation,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct MetricViolation {
  ViolationKind kind;
  // (i, j, k) for triangle violations with j the intermediate point; pair
  // violations use (i, j, j) and single-entry violations (i, i, i).
  std::array<std::size_t, 3> indices{};
  double magnitude = 0.0;

  friend bool operator==(const MetricViolation&, const MetricViolation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<MetricViolation> violations;
};

/// Relative slack used by the triangle check: 1e-9 * (1 + largest entry).
double triangle_tolerance(const Matrix& matrix) noexcept;

/// A finite set of labelled points with a validated proper metric.
///
/// Immutable once built. Indices are positional and follow label order.
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(PointIndex i) const;
  PointIndex index_of(std::string_view label) const;

  double distance(PointIndex i, PointIndex j) const;
  // Unchecked row-major access for hot loops.
  double operator()(PointIndex i, PointIndex j) const noexcept { return dist_[i * size() + j]; }

  Matrix matrix() const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  friend std::variant<FiniteMetricSpace, ValidationReport> validate_metric(const Matrix&,
                                                                           std::vector<std::string>);
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  std::vector<std::string> labels_;
  std::vector<double> dist_;
};

/// Checks all metric axioms; returns the space or every violation found.
std::variant<FiniteMetricSpace, ValidationReport> validate_metric(const Matrix& matrix,
                                                                  std::vector<std::string> labels);

/// Same as validate_metric but throws Error(InvalidMetric) on failure.
FiniteMetricSpace make_space(const Matrix& matrix, std::vector<std::string> labels);

/// Labels "0", "1", ... for matrices without names.
std::vector<std::string> default_labels(std::size_t n);

struct Edge {
  std::string a;
  std::string b;
  double weight;
};

/// Shortest-path metric of a connected undirected weighted graph.
/// Labels appear in order of first mention.
FiniteMetricSpace from_edge_list(std::span<const Edge> edges);

/// The four-point space ξ, x, y, m with unit edges ξ-x, ξ-y, x-m, y-m and
/// d(ξ, m) = d(x, y) = 2.
FiniteMetricSpace figure1_space();

/// Points on the real line with |a - b| distances.
FiniteMetricSpace real_line_space(std::span<const double> coordinates);

/// Nonempty sorted set of point indices.
class Subset {
 public:
  Subset(std::initializer_list<PointIndex> members);
  explicit Subset(std::vector<PointIndex> members);

  static Subset all(std::size_t n);
  static Subset from_labels(const FiniteMetricSpace& space, std::span<const std::string> labels);

  std::span<const PointIndex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(PointIndex i) const noexcept;
  bool includes(const Subset& other) const noexcept;

  /// Throws IndexOutOfRange if any member is not a point of `space`.
  void check(const FiniteMetricSpace& space) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<PointIndex> members_;
};

/// d(y, A) = min over a in A of d(y, a).
double point_subset_distance(const FiniteMetricSpace& space, PointIndex y, const Subset& subset);

}  // namespace frechet
