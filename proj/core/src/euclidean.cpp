#include "frechet/euclidean.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "frechet/error.hpp"

namespace frechet::euclid {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 80;

double power(double d, double r) { return r == 1.0 ? d : (r == 2.0 ? d * d : std::pow(d, r)); }

// Index of the positive-weight anchor within `eps` of y, or npos.
std::size_t coincident_anchor(const EuclideanProblem& p, const Point& y, double eps) {
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (p.weights[i] > 0.0 && (y - p.points[i]).norm() <= eps) return i;
  }
  return std::numeric_limits<std::size_t>::max();
}

struct AnchorTest {
  bool optimal;
  Point step_target;  // Weiszfeld map with the anchor excluded
  double pull;        // ‖Σ_{i≠k} α_i (y_i − y_k)/‖y_i − y_k‖‖
};

// Subgradient optimality at anchor k: it is a minimizer iff the pull of the
// remaining points does not exceed α_k.
AnchorTest test_anchor(const EuclideanProblem& p, std::size_t k) {
  const Point& yk = p.points[k];
  Point pull = Point::Zero(yk.size());
  Point numer = Point::Zero(yk.size());
  double denom = 0.0;
  double coincident_weight = 0.0;
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (i == k || p.weights[i] == 0.0) continue;
    const double d = (p.points[i] - yk).norm();
    if (d == 0.0) {
      coincident_weight += p.weights[i];
      continue;
    }
    pull += p.weights[i] * (p.points[i] - yk) / d;
    numer += p.weights[i] * p.points[i] / d;
    denom += p.weights[i] / d;
  }
  const double norm = pull.norm();
  AnchorTest t{norm <= p.weights[k] + coincident_weight, yk, norm};
  if (denom > 0.0) t.step_target = numer / denom;
  return t;
}

EuclideanSolution finish(const EuclideanProblem& p, Point y, std::size_t iterations, bool converged) {
  EuclideanSolution s;
  s.objective = objective(p, y);
  s.minimizer = std::move(y);
  s.iterations = iterations;
  s.converged = converged;
  return s;
}

void require_order(const EuclideanProblem& p, bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidConfig, std::string(what) + ", got order " + std::to_string(p.order));
}

}  // namespace

void EuclideanProblem::check() const {
  if (points.empty()) throw Error(ErrorCode::WeightSumZero, "no points");
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "points and weights differ in length");
  }
  const auto d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::NegativeWeight, std::to_string(w));
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::WeightSumZero, "weights sum to zero");
  if (!(order >= 1.0) || !std::isfinite(order)) {
    throw Error(ErrorCode::OrderBelowOne, "order " + std::to_string(order));
  }
}

double objective(const EuclideanProblem& problem, const Point& y) {
  double total = 0.0;
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    if (problem.weights[i] == 0.0) continue;
    total += problem.weights[i] * power((y - problem.points[i]).norm(), problem.order);
  }
  return total;
}

Point gradient(const EuclideanProblem& problem, const Point& y) {
  const double r = problem.order;
  Point g = Point::Zero(y.size());
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    if (problem.weights[i] == 0.0) continue;
    const Point diff = y - problem.points[i];
    const double d = diff.norm();
    if (d == 0.0) continue;
    g += problem.weights[i] * r * power(d, r - 2.0) * diff;
  }
  return g;
}

Point weighted_centroid(const EuclideanProblem& problem) {
  Point c = Point::Zero(problem.dimension());
  double total = 0.0;
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    c += problem.weights[i] * problem.points[i];
    total += problem.weights[i];
  }
  return c / total;
}

EuclideanSolution weighted_mean_r2(const EuclideanProblem& problem) {
  problem.check();
  require_order(problem, problem.order == 2.0, "closed form needs order 2");
  return finish(problem, weighted_centroid(problem), 0, true);
}

EuclideanSolution geometric_median_weiszfeld(const EuclideanProblem& problem, const SolverConfig& config) {
  problem.check();
  require_order(problem, problem.order == 1.0, "Weiszfeld needs order 1");

  Point y = weighted_centroid(problem);
  std::size_t iter = 0;
  bool converged = false;
  while (iter < config.max_iter) {
    ++iter;
    Point next;
    const std::size_t k = coincident_anchor(problem, y, config.anchor_eps);
    if (k != std::numeric_limits<std::size_t>::max()) {
      const AnchorTest t = test_anchor(problem, k);
      if (t.optimal) return finish(problem, problem.points[k], iter, true);
      // Vardi–Zhang step away from a non-optimal anchor.
      const Point& yk = problem.points[k];
      next = yk + (1.0 - problem.weights[k] / t.pull) * (t.step_target - yk);
    } else {
      Point numer = Point::Zero(y.size());
      double denom = 0.0;
      for (std::size_t i = 0; i < problem.points.size(); ++i) {
        if (problem.weights[i] == 0.0) continue;
        const double d = (y - problem.points[i]).norm();
        numer += problem.weights[i] * problem.points[i] / d;
        denom += problem.weights[i] / d;
      }
      next = numer / denom;
    }
    const double moved = (next - y).norm();
    y = std::move(next);
    if (moved < config.tol) {
      converged = true;
      break;
    }
  }

  // Iterates approach an optimal anchor only asymptotically; land on it when
  // it certifies optimality and improves the objective beyond roundoff. Ties
  // (e.g. two equal weights, where the whole segment is optimal) keep y.
  std::size_t nearest = 0;
  double nearest_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    if (problem.weights[i] == 0.0) continue;
    const double d = (y - problem.points[i]).norm();
    if (d < nearest_d) {
      nearest_d = d;
      nearest = i;
    }
  }
  const double fy = objective(problem, y);
  if (test_anchor(problem, nearest).optimal &&
      objective(problem, problem.points[nearest]) < fy - 1e-13 * (1.0 + fy)) {
    return finish(problem, problem.points[nearest], iter, true);
  }
  return finish(problem, std::move(y), iter, converged);
}

EuclideanSolution general_r_descent(const EuclideanProblem& problem, const SolverConfig& config) {
  problem.check();
  if (problem.order == 1.0) return geometric_median_weiszfeld(problem, config);

  Point y = weighted_centroid(problem);
  double f = objective(problem, y);
  Point g = gradient(problem, y);
  double weight_sum = 0.0;
  for (double w : problem.weights) weight_sum += w;
  double step = 1.0 / (problem.order * weight_sum);

  Point prev_y, prev_g;
  std::size_t iter = 0;
  while (iter < config.max_iter) {
    const double gnorm = g.norm();
    if (gnorm <= config.tol) return finish(problem, std::move(y), iter, true);
    ++iter;

    if (iter > 1) {
      // Barzilai–Borwein initial trial step.
      const Point dy = y - prev_y;
      const Point dg = g - prev_g;
      const double curvature = dy.dot(dg);
      if (curvature > 0.0) step = dy.squaredNorm() / curvature;
      else step *= 2.0;
    }

    bool accepted = false;
    Point trial;
    double f_trial = 0.0;
    Point g_trial;
    for (int h = 0; h < kMaxHalvings; ++h, step *= 0.5) {
      trial = y - step * g;
      f_trial = objective(problem, trial);
      if (f_trial <= f - kArmijo * step * gnorm * gnorm) {
        g_trial = gradient(problem, trial);
        accepted = true;
        break;
      }
      // Below roundoff the objective cannot certify progress; fall back to a
      // decrease in gradient norm.
      if (std::abs(f_trial - f) <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(f)) {
        g_trial = gradient(problem, trial);
        if (g_trial.norm() < gnorm) {
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) break;

    prev_y = std::move(y);
    prev_g = std::move(g);
    y = std::move(trial);
    g = std::move(g_trial);
    f = f_trial;
  }
  const bool converged = g.norm() <= config.tol;
  return finish(problem, std::move(y), iter, converged);
}

EuclideanSolution solve(const EuclideanProblem& problem, const SolverConfig& config) {
  if (problem.order == 2.0) return weighted_mean_r2(problem);
  if (problem.order == 1.0) return geometric_median_weiszfeld(problem, config);
  return general_r_descent(problem, config);
}

Box bounding_box(const EuclideanProblem& problem) {
  problem.check();
  Box box{problem.points.front(), problem.points.front()};
  for (const auto& p : problem.points) {
    box.lo = box.lo.cwiseMin(p);
    box.hi = box.hi.cwiseMax(p);
  }
  return box;
}

EuclideanSolution grid_oracle(const EuclideanProblem& problem, const Box& box, std::size_t resolution) {
  problem.check();
  if (resolution < 2) throw Error(ErrorCode::InvalidConfig, "grid resolution must be >= 2");
  const auto dim = static_cast<std::size_t>(problem.dimension());
  if (static_cast<std::size_t>(box.lo.size()) != dim || static_cast<std::size_t>(box.hi.size()) != dim) {
    throw Error(ErrorCode::DimensionMismatch, "box dimension");
  }

  std::vector<std::size_t> idx(dim, 0);
  Point node(dim);
  Point best;
  double best_f = std::numeric_limits<double>::infinity();
  const double denom = static_cast<double>(resolution - 1);
  std::size_t visited = 0;
  while (true) {
    for (std::size_t a = 0; a < dim; ++a) {
      node[a] = box.lo[a] + (box.hi[a] - box.lo[a]) * (static_cast<double>(idx[a]) / denom);
    }
    const double f = objective(problem, node);
    ++visited;
    if (f < best_f) {
      best_f = f;
      best = node;
    }
    std::size_t a = 0;
    while (a < dim && ++idx[a] == resolution) idx[a++] = 0;
    if (a == dim) break;
  }
  EuclideanSolution s{best, best_f, visited, true};
  return s;
}

}  // namespace frechet::euclid
