#include "frechet/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frechet/error.hpp"
#include "frechet/frechet_solver.hpp"
#include "frechet/random.hpp"

namespace frechet::lab {

namespace {

double power(double d, double r) { return r == 1.0 ? d : (r == 2.0 ? d * d : std::pow(d, r)); }

void require_order(double order) {
  if (!(order >= 1.0) || !std::isfinite(order)) {
    throw Error(ErrorCode::OrderBelowOne, "order " + std::to_string(order));
  }
}

void require_unit_or_more(std::span<const double> weights) {
  for (double w : weights) {
    if (!(w >= 1.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::WeightBelowOne,
                  "weight " + std::to_string(w) + " is outside the theorem regime; see weight_necessity_demo");
    }
  }
}

void require_point(const FiniteMetricSpace& space, PointIndex p) {
  if (p >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(p));
}

ViolationWitness context(std::string_view law, double order, std::vector<double> weights,
                         std::vector<PointIndex> points, std::optional<PointIndex> xi) {
  ViolationWitness w;
  w.law = std::string(law);
  w.order = order;
  w.weights = std::move(weights);
  w.points = std::move(points);
  w.xi = xi;
  return w;
}

PropertyReport one_trial(std::string_view id) {
  PropertyReport r;
  r.property = std::string(id);
  r.trials = 1;
  return r;
}

// Random subset of {0..n-1} with at least one member.
Subset random_subset(Rng& rng, std::size_t n) {
  std::vector<PointIndex> members;
  for (PointIndex i = 0; i < n; ++i) {
    if (rng.chance(0.4)) members.push_back(i);
  }
  if (members.empty()) members.push_back(static_cast<PointIndex>(rng.between(0, n - 1)));
  return Subset(std::move(members));
}

std::vector<WeightedArgument> random_args(Rng& rng, std::size_t n) {
  const auto count = static_cast<std::size_t>(rng.between(2, 4));
  std::vector<WeightedArgument> args;
  for (std::size_t i = 0; i < count; ++i) args.push_back({rng.uniform(0.0, 3.0), random_subset(rng, n)});
  args[rng.between(0, count - 1)].weight += 0.5;
  return args;
}

std::vector<PointIndex> members_of(const std::vector<WeightedArgument>& args) {
  std::vector<PointIndex> all;
  for (const auto& a : args) all.insert(all.end(), a.subset.begin(), a.subset.end());
  return all;
}

std::vector<double> weights_of(const std::vector<WeightedArgument>& args) {
  std::vector<double> w;
  for (const auto& a : args) w.push_back(a.weight);
  return w;
}

}  // namespace

SpaceSnapshot snapshot(const FiniteMetricSpace& space) { return {space.labels(), space.matrix()}; }

void PropertyReport::add_failure(ViolationWitness w) {
  ++failure_count;
  if (failures.size() < kRecordLimit) failures.push_back(std::move(w));
}

void PropertyReport::add_saturation(ViolationWitness w) {
  ++saturation_count;
  if (saturations.size() < kRecordLimit) saturations.push_back(std::move(w));
}

void PropertyReport::merge(const PropertyReport& other) {
  trials += other.trials;
  theorem_regime = theorem_regime && other.theorem_regime;
  failure_count += other.failure_count;
  saturation_count += other.saturation_count;
  for (const auto& w : other.failures) {
    if (failures.size() < kRecordLimit) failures.push_back(w);
  }
  for (const auto& w : other.saturations) {
    if (saturations.size() < kRecordLimit) saturations.push_back(w);
  }
  for (const auto& w : other.exhibits) {
    if (exhibits.size() < kRecordLimit) exhibits.push_back(w);
  }
}

double bound_tolerance(double rhs) noexcept { return 1e-9 * (1.0 + std::abs(rhs)); }

std::vector<BoundEvaluation> evaluate_median_bound(const FiniteMetricSpace& space, PointIndex xi,
                                                   std::span<const PointIndex> points,
                                                   std::span<const double> weights, double order) {
  require_point(space, xi);
  const FrechetMeanSet means = point_mean(space, order, points, weights);
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) sum += weights[i] * power(space(points[i], xi), order);
  const double rhs = std::pow(2.0, order - 1.0) * sum;

  std::vector<BoundEvaluation> out;
  out.reserve(means.minimizers.size());
  for (PointIndex m : means.minimizers) out.push_back({m, power(space(m, xi), order), rhs});
  return out;
}

void assess(PropertyReport& report, const std::vector<BoundEvaluation>& evaluations,
            const ViolationWitness& ctx) {
  for (const auto& e : evaluations) {
    const double tol = bound_tolerance(e.rhs);
    const bool violated = e.lhs > e.rhs + tol;
    const bool saturated = std::abs(e.lhs - e.rhs) <= tol;
    if (!violated && !saturated) continue;
    ViolationWitness w = ctx;
    w.members = {e.member};
    w.lhs = e.lhs;
    w.rhs = e.rhs;
    if (violated) report.add_failure(std::move(w));
    else report.add_saturation(std::move(w));
  }
}

PropertyReport check_median_inequality(const FiniteMetricSpace& space, PointIndex xi, PointIndex x,
                                       PointIndex y) {
  const PointIndex pts[] = {x, y};
  const double ws[] = {1.0, 1.0};
  PropertyReport report = one_trial(property::kMedian);
  assess(report, evaluate_median_bound(space, xi, pts, ws, 1.0),
         context(property::kMedian, 1.0, {1.0, 1.0}, {x, y}, xi));
  return report;
}

PropertyReport check_weighted_median(const FiniteMetricSpace& space, PointIndex xi, PointIndex x, PointIndex y,
                                     double alpha, double beta) {
  const double ws[] = {alpha, beta};
  require_unit_or_more(ws);
  const PointIndex pts[] = {x, y};
  PropertyReport report = one_trial(property::kWeightedMedian);
  assess(report, evaluate_median_bound(space, xi, pts, ws, 1.0),
         context(property::kWeightedMedian, 1.0, {alpha, beta}, {x, y}, xi));
  return report;
}

PropertyReport check_countable_additivity(const FiniteMetricSpace& space, PointIndex xi,
                                          std::span<const PointIndex> points, std::span<const double> weights) {
  require_unit_or_more(weights);
  const bool unweighted = std::all_of(weights.begin(), weights.end(), [](double w) { return w == 1.0; });
  const auto id = unweighted ? property::kCountableAdditivity : property::kWeightedCountableAdditivity;
  PropertyReport report = one_trial(id);
  assess(report, evaluate_median_bound(space, xi, points, weights, 1.0),
         context(id, 1.0, {weights.begin(), weights.end()}, {points.begin(), points.end()}, xi));
  return report;
}

PropertyReport check_frechet_triangle(const FiniteMetricSpace& space, double order) {
  require_order(order);
  PropertyReport report = one_trial(property::kFrechetTriangle);
  const double factor = std::pow(2.0, order - 1.0);
  const std::size_t n = space.size();
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex b = 0; b < n; ++b) {
      for (PointIndex c = 0; c < n; ++c) {
        const double lhs = power(space(a, b), order);
        const double rhs = factor * (power(space(a, c), order) + power(space(c, b), order));
        if (lhs > rhs + bound_tolerance(rhs)) {
          ViolationWitness w = context(property::kFrechetTriangle, order, {}, {a, b, c}, std::nullopt);
          w.lhs = lhs;
          w.rhs = rhs;
          report.add_failure(std::move(w));
        }
      }
    }
  }
  return report;
}

PropertyReport check_r_order(const FiniteMetricSpace& space, PointIndex xi, PointIndex x, PointIndex y,
                             double order) {
  require_order(order);
  const PointIndex pts[] = {x, y};
  const double ws[] = {1.0, 1.0};
  PropertyReport report = one_trial(property::kROrderMedian);
  assess(report, evaluate_median_bound(space, xi, pts, ws, order),
         context(property::kROrderMedian, order, {1.0, 1.0}, {x, y}, xi));
  // The bound rests on the r-th order triangle inequality; a failure there
  // means the space itself is broken.
  const PropertyReport tri = check_frechet_triangle(space, order);
  report.failure_count += tri.failure_count;
  for (const auto& w : tri.failures) {
    if (report.failures.size() < kRecordLimit) report.failures.push_back(w);
  }
  return report;
}

PropertyReport check_r_order_cumulative(const FiniteMetricSpace& space, PointIndex xi,
                                        std::span<const PointIndex> points, std::span<const double> weights,
                                        double order) {
  require_order(order);
  require_unit_or_more(weights);
  PropertyReport report = one_trial(property::kROrderCumulative);
  assess(report, evaluate_median_bound(space, xi, points, weights, order),
         context(property::kROrderCumulative, order, {weights.begin(), weights.end()},
                 {points.begin(), points.end()}, xi));
  return report;
}

AssociationPair association_orders(const FiniteMetricSpace& space, double order, PointIndex a, PointIndex b,
                                   PointIndex c) {
  const PointIndex ab = representative(binary_mean(space, order, 1.0, Subset{a}, 1.0, Subset{b}));
  const PointIndex left = representative(binary_mean(space, order, 1.0, Subset{ab}, 1.0, Subset{c}));
  const PointIndex bc = representative(binary_mean(space, order, 1.0, Subset{b}, 1.0, Subset{c}));
  const PointIndex right = representative(binary_mean(space, order, 1.0, Subset{a}, 1.0, Subset{bc}));
  return {left, right};
}

PropertyReport check_operator_laws(const FiniteMetricSpace& space, const LawConfig& config) {
  PropertyReport report;
  report.property = std::string(property::kOperatorLaws);
  report.seed = config.seed;
  const std::size_t n = space.size();

  auto fail = [&](std::string_view law, double r, const std::vector<WeightedArgument>& args, double lhs,
                  double rhs) {
    ViolationWitness w = context(law, r, weights_of(args), members_of(args), std::nullopt);
    w.lhs = lhs;
    w.rhs = rhs;
    report.add_failure(std::move(w));
  };

  for (std::size_t s = 0; s < config.samples; ++s) {
    for (std::size_t oi = 0; oi < config.orders.size(); ++oi) {
      const double r = config.orders[oi];
      require_order(r);
      Rng rng(derive_seed(config.seed, s * config.orders.size() + oi));
      ++report.trials;

      // Commutativity: any permutation of the arguments gives the same set.
      {
        FrechetProblem p{r, random_args(rng, n)};
        const FrechetMeanSet base = mean_set(space, p);
        FrechetProblem q = p;
        for (std::size_t i = q.args.size(); i > 1; --i) std::swap(q.args[i - 1], q.args[rng.between(0, i - 1)]);
        std::reverse(q.args.begin(), q.args.end());
        const FrechetMeanSet permuted = mean_set(space, q);
        if (permuted.minimizers != base.minimizers) fail("commutativity", r, p.args, permuted.objective, base.objective);
      }

      // Idempotency: k copies of (1, A) have mean set exactly A.
      {
        const Subset a = random_subset(rng, n);
        const auto copies = static_cast<std::size_t>(rng.between(1, 4));
        FrechetProblem p{r, std::vector<WeightedArgument>(copies, WeightedArgument{1.0, a})};
        const FrechetMeanSet m = mean_set(space, p);
        if (!std::equal(m.minimizers.begin(), m.minimizers.end(), a.begin(), a.end())) {
          fail("idempotency", r, p.args, m.objective, 0.0);
        }
      }

      // Proportionality: scaling every weight keeps the set, scales the minimum.
      {
        FrechetProblem p{r, random_args(rng, n)};
        const double c = rng.uniform(0.1, 10.0);
        FrechetProblem q = p;
        for (auto& arg : q.args) arg.weight *= c;
        const FrechetMeanSet base = mean_set(space, p);
        const FrechetMeanSet scaled = mean_set(space, q);
        const double expected = c * base.objective;
        const bool same_set = scaled.minimizers == base.minimizers;
        const bool scaled_ok = std::abs(scaled.objective - expected) <= 1e-9 * std::max(1.0, std::abs(expected));
        if (!same_set || !scaled_ok) fail("proportionality", r, q.args, scaled.objective, expected);
      }

      // Identity element: A ⊕ Y = A.
      {
        const Subset a = random_subset(rng, n);
        FrechetProblem p{r, {{1.0, a}, {1.0, Subset::all(n)}}};
        const FrechetMeanSet m = mean_set(space, p);
        if (!std::equal(m.minimizers.begin(), m.minimizers.end(), a.begin(), a.end())) {
          fail("identity-element", r, p.args, m.objective, 0.0);
        }
      }
    }
  }

  // Non-associativity is exhibited, never required: scan distinct triples and
  // keep the first witness per order.
  for (double r : config.orders) {
    bool found = false;
    for (PointIndex a = 0; a < n && !found; ++a) {
      for (PointIndex b = 0; b < n && !found; ++b) {
        for (PointIndex c = 0; c < n && !found; ++c) {
          if (a == b || b == c || a == c) continue;
          const AssociationPair pair = association_orders(space, r, a, b, c);
          if (pair.left == pair.right) continue;
          ViolationWitness w = context("non-associativity", r, {1.0, 1.0, 1.0}, {a, b, c}, std::nullopt);
          w.members = {pair.left, pair.right};
          w.lhs = static_cast<double>(pair.left);
          w.rhs = static_cast<double>(pair.right);
          if (report.exhibits.size() < kRecordLimit) report.exhibits.push_back(std::move(w));
          found = true;
        }
      }
    }
  }
  return report;
}

ViolationWitness weight_necessity_demo() {
  const FiniteMetricSpace space = figure1_space();
  const PointIndex xi = space.index_of("ξ");
  const PointIndex x = space.index_of("x");
  const PointIndex y = space.index_of("y");
  const PointIndex m = space.index_of("m");
  const PointIndex pts[] = {x, y};
  const double ws[] = {0.5, 0.5};

  const auto evals = evaluate_median_bound(space, xi, pts, ws, 1.0);
  const auto it = std::find_if(evals.begin(), evals.end(), [m](const BoundEvaluation& e) { return e.member == m; });
  if (it == evals.end()) throw Error(ErrorCode::InvalidMetric, "m is not in the mean set of x and y");

  ViolationWitness w = context(property::kWeightedMedian, 1.0, {0.5, 0.5}, {x, y}, xi);
  w.space = snapshot(space);
  w.members = {m};
  w.lhs = it->lhs;
  w.rhs = it->rhs;
  return w;
}

std::vector<PropertyReport> verify_space(const FiniteMetricSpace& space, const VerifyConfig& config) {
  for (double r : config.orders) require_order(r);
  if (config.weight_lo < 1.0) {
    throw Error(ErrorCode::WeightBelowOne, "verify only runs theorem-regime weights (>= 1)");
  }
  if (config.weight_hi < config.weight_lo || config.max_sequence < 1) {
    throw Error(ErrorCode::InvalidConfig, "bad weight range or sequence length");
  }
  const std::size_t n = space.size();
  Rng rng(derive_seed(config.seed, 0xfeed));

  std::vector<PropertyReport> reports;
  reports.push_back(check_operator_laws(space, {config.seed, config.samples, config.orders}));

  PropertyReport median;
  median.property = std::string(property::kMedian);
  PropertyReport weighted;
  weighted.property = std::string(property::kWeightedMedian);
  PropertyReport r_median;
  r_median.property = std::string(property::kROrderMedian);
  for (PointIndex xi = 0; xi < n; ++xi) {
    for (PointIndex x = 0; x < n; ++x) {
      for (PointIndex y = 0; y < n; ++y) {
        median.merge(check_median_inequality(space, xi, x, y));
        weighted.merge(check_weighted_median(space, xi, x, y, rng.uniform(config.weight_lo, config.weight_hi),
                                             rng.uniform(config.weight_lo, config.weight_hi)));
        for (double r : config.orders) {
          const PointIndex pts[] = {x, y};
          const double ws[] = {1.0, 1.0};
          PropertyReport one = one_trial(property::kROrderMedian);
          assess(one, evaluate_median_bound(space, xi, pts, ws, r),
                 context(property::kROrderMedian, r, {1.0, 1.0}, {x, y}, xi));
          r_median.merge(one);
        }
      }
    }
  }

  PropertyReport additivity;
  additivity.property = std::string(property::kCountableAdditivity);
  PropertyReport weighted_additivity;
  weighted_additivity.property = std::string(property::kWeightedCountableAdditivity);
  PropertyReport r_cumulative;
  r_cumulative.property = std::string(property::kROrderCumulative);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const auto len = static_cast<std::size_t>(rng.between(1, config.max_sequence));
    std::vector<PointIndex> pts(len);
    std::vector<double> ws(len);
    for (auto& p : pts) p = static_cast<PointIndex>(rng.between(0, n - 1));
    for (auto& w : ws) w = rng.uniform(config.weight_lo, config.weight_hi);
    const auto xi = static_cast<PointIndex>(rng.between(0, n - 1));
    const std::vector<double> ones(len, 1.0);
    additivity.merge(check_countable_additivity(space, xi, pts, ones));
    weighted_additivity.merge(check_countable_additivity(space, xi, pts, ws));
    for (double r : config.orders) r_cumulative.merge(check_r_order_cumulative(space, xi, pts, ws, r));
  }

  PropertyReport triangle;
  triangle.property = std::string(property::kFrechetTriangle);
  for (double r : config.orders) triangle.merge(check_frechet_triangle(space, r));

  for (PropertyReport* r : {&median, &weighted, &additivity, &weighted_additivity, &r_median, &r_cumulative,
                            &triangle}) {
    r->seed = config.seed;
    reports.push_back(std::move(*r));
  }
  return reports;
}

}  // namespace frechet::lab
