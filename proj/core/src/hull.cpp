#include "frechet/hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "frechet/error.hpp"
#include "frechet/frechet_solver.hpp"
#include "frechet/simplex.hpp"

namespace frechet {

namespace {

double power(double d, double r) { return r == 1.0 ? d : (r == 2.0 ? d * d : std::pow(d, r)); }

void require_order(double order) {
  if (!(order >= 1.0) || !std::isfinite(order)) {
    throw Error(ErrorCode::OrderBelowOne, "order " + std::to_string(order));
  }
}

}  // namespace

bool HullResult::contains(PointIndex p) const noexcept {
  return std::binary_search(members.begin(), members.end(), p);
}

std::optional<std::vector<double>> membership_witness(const FiniteMetricSpace& space, const Subset& base,
                                                      double order, PointIndex candidate) {
  require_order(order);
  base.check(space);
  if (candidate >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "candidate");

  const auto anchors = base.members();
  const std::size_t k = anchors.size();
  if (base.contains(candidate)) {
    std::vector<double> unit(k, 0.0);
    unit[static_cast<std::size_t>(std::find(anchors.begin(), anchors.end(), candidate) - anchors.begin())] = 1.0;
    return unit;
  }

  // Variables: α_1..α_k, t, one slack per competitor z ≠ candidate.
  //   Σ_i α_i (d(a_i, y)^r − d(a_i, z)^r) − t + s_z = 0
  //   Σ_i α_i = 1
  // Minimizing t decides whether some α makes y at least as good as every z.
  const std::size_t n = space.size();
  const std::size_t competitors = n - 1;
  const std::size_t vars = k + 1 + competitors;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(competitors + 1);
  std::size_t slack = 0;
  for (PointIndex z = 0; z < n; ++z) {
    if (z == candidate) continue;
    std::vector<double> row(vars, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = power(space(anchors[i], candidate), order) - power(space(anchors[i], z), order);
    }
    row[k] = -1.0;
    row[k + 1 + slack++] = 1.0;
    a.push_back(std::move(row));
    b.push_back(0.0);
  }
  std::vector<double> simplex_row(vars, 0.0);
  std::fill_n(simplex_row.begin(), k, 1.0);
  a.push_back(std::move(simplex_row));
  b.push_back(1.0);

  std::vector<double> c(vars, 0.0);
  c[k] = 1.0;
  const lp::Solution sol = lp::minimize(a, b, c);
  if (sol.status != lp::Status::Optimal || sol.value > kHullFeasibilityTol) return std::nullopt;

  std::vector<double> alpha(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k));
  double total = 0.0;
  for (double w : alpha) total += w;
  for (double& w : alpha) w /= total;

  // Re-check the certificate through the solver itself.
  if (!point_mean(space, order, anchors, alpha).contains(candidate)) return std::nullopt;
  return alpha;
}

HullResult hull_members(const FiniteMetricSpace& space, const Subset& base, double order) {
  require_order(order);
  base.check(space);
  HullResult out{order, base, {}, {}};
  for (PointIndex y = 0; y < space.size(); ++y) {
    if (auto w = membership_witness(space, base, order, y)) {
      out.members.push_back(y);
      out.witnesses.emplace(y, std::move(*w));
    }
  }
  return out;
}

std::vector<PointIndex> hull_grid_oracle(const FiniteMetricSpace& space, const Subset& base, double order,
                                         std::size_t grid_steps) {
  require_order(order);
  base.check(space);
  if (grid_steps < 2) throw Error(ErrorCode::InvalidConfig, "grid_steps must be >= 2");

  const auto anchors = base.members();
  const std::size_t k = anchors.size();
  std::vector<bool> found(space.size(), false);
  std::vector<std::size_t> counts(k, 0);
  std::vector<double> weights(k);

  // Every composition of grid_steps into k nonnegative parts.
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t i, std::size_t remaining) {
    if (i + 1 == k) {
      counts[i] = remaining;
      for (std::size_t j = 0; j < k; ++j) {
        weights[j] = static_cast<double>(counts[j]) / static_cast<double>(grid_steps);
      }
      for (PointIndex m : point_mean(space, order, anchors, weights).minimizers) found[m] = true;
      return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      counts[i] = c;
      visit(i + 1, remaining - c);
    }
  };
  visit(0, grid_steps);

  std::vector<PointIndex> members;
  for (PointIndex y = 0; y < space.size(); ++y) {
    if (found[y]) members.push_back(y);
  }
  return members;
}

ConvexityReport check_convexity(const FiniteMetricSpace& space, const Subset& set, double order,
                                std::size_t max_combo_size) {
  require_order(order);
  set.check(space);
  if (max_combo_size == 0) throw Error(ErrorCode::InvalidConfig, "max_combo_size must be >= 1");

  ConvexityReport report;
  report.max_combo_size = max_combo_size;
  const auto members = set.members();
  const std::size_t limit = std::min(max_combo_size, members.size());

  std::vector<PointIndex> combo;
  std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) -> bool {
    if (combo.size() == size) {
      ++report.combos_checked;
      const Subset base(combo);
      for (PointIndex y = 0; y < space.size(); ++y) {
        if (set.contains(y)) continue;
        if (auto w = membership_witness(space, base, order, y)) {
          report.convex = false;
          report.counterexample = ConvexityCounterexample{combo, std::move(*w), y};
          return true;
        }
      }
      return false;
    }
    for (std::size_t i = start; i < members.size(); ++i) {
      combo.push_back(members[i]);
      const bool stop = visit(i + 1, size);
      combo.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (std::size_t size = 1; size <= limit; ++size) {
    if (visit(0, size)) break;
  }
  return report;
}

}  // namespace frechet
