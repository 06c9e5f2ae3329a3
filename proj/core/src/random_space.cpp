#include "frechet/random_space.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "frechet/error.hpp"
#include "frechet/random.hpp"

namespace frechet {

namespace {

constexpr double kWeightLo = 0.1;
constexpr double kWeightHi = 2.0;
constexpr double kEdgeProbability = 0.35;

void shortest_path_closure(Matrix& d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
}

Matrix metric_repair(Rng& rng, std::size_t n) {
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = rng.uniform(kWeightLo, kWeightHi);
    }
  }
  shortest_path_closure(d);
  return d;
}

Matrix random_graph(Rng& rng, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Matrix d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;

  // Random spanning tree over a shuffled order keeps the graph connected.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.between(0, i - 1)]);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t u = order[i];
    const std::size_t v = order[rng.between(0, i - 1)];
    d[u][v] = d[v][u] = rng.uniform(kWeightLo, kWeightHi);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool extra = rng.chance(kEdgeProbability);
      const double w = rng.uniform(kWeightLo, kWeightHi);
      if (extra && std::isinf(d[i][j])) d[i][j] = d[j][i] = w;
    }
  }
  shortest_path_closure(d);
  return d;
}

Matrix euclidean_sample(Rng& rng, std::size_t n) {
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts) {
    for (double& c : p) c = rng.unit();
  }
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < 3; ++c) s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
      d[i][j] = d[j][i] = std::sqrt(s);
    }
  }
  return d;
}

}  // namespace

std::string_view to_string(SpaceStrategy s) noexcept {
  switch (s) {
    case SpaceStrategy::MetricRepair: return "metric-repair";
    case SpaceStrategy::RandomGraph: return "random-graph";
    case SpaceStrategy::EuclideanSample: return "euclidean-sample";
  }
  return "unknown";
}

std::optional<SpaceStrategy> parse_strategy(std::string_view name) noexcept {
  for (SpaceStrategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

FiniteMetricSpace random_space(std::uint64_t seed, std::size_t n, SpaceStrategy strategy) {
  if (n == 0) throw Error(ErrorCode::InvalidConfig, "random_space needs n >= 1");
  Rng rng(seed);
  Matrix d;
  switch (strategy) {
    case SpaceStrategy::MetricRepair: d = metric_repair(rng, n); break;
    case SpaceStrategy::RandomGraph: d = random_graph(rng, n); break;
    case SpaceStrategy::EuclideanSample: d = euclidean_sample(rng, n); break;
  }
  return make_space(d, default_labels(n));
}

}  // namespace frechet
