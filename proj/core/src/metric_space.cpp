#include "frechet/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "frechet/error.hpp"

namespace frechet {

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::NonSquare: return "NonSquare";
    case ViolationKind::DuplicateLabel: return "DuplicateLabel";
    case ViolationKind::NonFinite: return "NonFinite";
    case ViolationKind::NegativeDistance: return "NegativeDistance";
    case ViolationKind::Asymmetry: return "Asymmetry";
    case ViolationKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ViolationKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ViolationKind::TriangleViolation: return "TriangleViolation";
  }
  return "Unknown";
}

double triangle_tolerance(const Matrix& matrix) noexcept {
  double largest = 0.0;
  for (const auto& row : matrix) {
    for (double v : row) {
      if (std::isfinite(v)) largest = std::max(largest, std::abs(v));
    }
  }
  return 1e-9 * (1.0 + largest);
}

const std::string& FiniteMetricSpace::label(PointIndex i) const {
  if (i >= size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(i));
  return labels_[i];
}

PointIndex FiniteMetricSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownLabel, std::string(label));
  return static_cast<PointIndex>(it - labels_.begin());
}

double FiniteMetricSpace::distance(PointIndex i, PointIndex j) const {
  if (i >= size() || j >= size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return (*this)(i, j);
}

Matrix FiniteMetricSpace::matrix() const {
  const std::size_t n = size();
  Matrix out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::variant<FiniteMetricSpace, ValidationReport> validate_metric(const Matrix& matrix,
                                                                  std::vector<std::string> labels) {
  ValidationReport report;
  auto flag = [&report](ViolationKind kind, std::size_t i, std::size_t j, std::size_t k,
                        double magnitude) {
    report.ok = false;
    report.violations.push_back({kind, {i, j, k}, magnitude});
  };

  const std::size_t n = matrix.size();
  bool square = n >= 1 && labels.size() == n;
  for (const auto& row : matrix) square = square && row.size() == n;
  if (!square) {
    flag(ViolationKind::NonSquare, n, labels.size(), 0, 0.0);
    return report;
  }

  std::map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(labels[i], i);
    if (!inserted) flag(ViolationKind::DuplicateLabel, it->second, i, i, 0.0);
  }

  const double tol = triangle_tolerance(matrix);
  bool all_finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix[i][j];
      if (!std::isfinite(v)) {
        flag(ViolationKind::NonFinite, i, j, j, v);
        all_finite = false;
      } else if (v < 0.0) {
        flag(ViolationKind::NegativeDistance, i, j, j, -v);
      } else if (i == j && v != 0.0) {
        flag(ViolationKind::NonzeroDiagonal, i, i, i, v);
      } else if (i != j && v == 0.0) {
        if (i < j) flag(ViolationKind::ZeroOffDiagonal, i, j, j, 0.0);
      }
    }
  }
  if (!all_finite) return report;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(matrix[i][j] - matrix[j][i]);
      if (gap > tol) flag(ViolationKind::Asymmetry, i, j, j, gap);
    }
  }

  // Endpoints unordered (i < k), so each violated triangle is reported once.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double excess = matrix[i][k] - (matrix[i][j] + matrix[j][k]);
        if (excess > tol) flag(ViolationKind::TriangleViolation, i, j, k, excess);
      }
    }
  }

  if (!report.ok) return report;

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = matrix[i][j];
      dist[j * n + i] = matrix[i][j];
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

FiniteMetricSpace make_space(const Matrix& matrix, std::vector<std::string> labels) {
  auto result = validate_metric(matrix, std::move(labels));
  if (auto* space = std::get_if<FiniteMetricSpace>(&result)) return std::move(*space);
  const auto& report = std::get<ValidationReport>(result);
  const auto& first = report.violations.front();
  throw Error(ErrorCode::InvalidMetric,
              std::to_string(report.violations.size()) + " violation(s), first " +
                  std::string(to_string(first.kind)));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

FiniteMetricSpace from_edge_list(std::span<const Edge> edges) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, labels.size());
    if (inserted) labels.push_back(name);
    return it->second;
  };

  struct Arc {
    std::size_t u, v;
    double w;
  };
  std::vector<Arc> arcs;
  for (const auto& e : edges) {
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonpositiveWeight, e.a + " " + e.b);
    }
    if (e.a == e.b) throw Error(ErrorCode::SelfLoop, e.a);
    arcs.push_back({intern(e.a), intern(e.b), e.weight});
  }
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::DisconnectedGraph, "empty edge list");

  constexpr double inf = std::numeric_limits<double>::infinity();
  Matrix d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& a : arcs) {
    d[a.u][a.v] = std::min(d[a.u][a.v], a.w);
    d[a.v][a.u] = d[a.u][a.v];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(d[0][i])) throw Error(ErrorCode::DisconnectedGraph, labels[i]);
  }
  return make_space(d, std::move(labels));
}

FiniteMetricSpace figure1_space() {
  // Order: ξ, x, y, m.
  const Matrix d = {
      {0, 1, 1, 2},
      {1, 0, 2, 1},
      {1, 2, 0, 1},
      {2, 1, 1, 0},
  };
  return make_space(d, {"ξ", "x", "y", "m"});
}

FiniteMetricSpace real_line_space(std::span<const double> coordinates) {
  const std::size_t n = coordinates.size();
  Matrix d(n, std::vector<double>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream os;
    os << coordinates[i];
    labels[i] = os.str();
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::abs(coordinates[i] - coordinates[j]);
  }
  return make_space(d, std::move(labels));
}

Subset::Subset(std::initializer_list<PointIndex> members) : Subset(std::vector<PointIndex>(members)) {}

Subset::Subset(std::vector<PointIndex> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::EmptySubset, "subset must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Subset Subset::all(std::size_t n) {
  std::vector<PointIndex> members(n);
  std::iota(members.begin(), members.end(), PointIndex{0});
  return Subset(std::move(members));
}

Subset Subset::from_labels(const FiniteMetricSpace& space, std::span<const std::string> labels) {
  std::vector<PointIndex> members;
  members.reserve(labels.size());
  for (const auto& l : labels) members.push_back(space.index_of(l));
  return Subset(std::move(members));
}

bool Subset::contains(PointIndex i) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subset::includes(const Subset& other) const noexcept {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

void Subset::check(const FiniteMetricSpace& space) const {
  if (members_.back() >= space.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "subset member " + std::to_string(members_.back()));
  }
}

double point_subset_distance(const FiniteMetricSpace& space, PointIndex y, const Subset& subset) {
  if (y >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(y));
  subset.check(space);
  double best = std::numeric_limits<double>::infinity();
  for (PointIndex a : subset) best = std::min(best, space(y, a));
  return best;
}

}  // namespace frechet
