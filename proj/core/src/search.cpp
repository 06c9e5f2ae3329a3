#include "frechet/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "frechet/error.hpp"
#include "frechet/random.hpp"

namespace frechet::lab {

namespace {

// Report slots, in output order.
enum Slot : std::size_t {
  kMedianSlot,
  kWeightedMedianSlot,
  kAdditivitySlot,
  kWeightedAdditivitySlot,
  kROrderSlot,
  kROrderCumulativeSlot,
  kTriangleSlot,
  kSlotCount,
};

constexpr std::string_view kSlotIds[kSlotCount] = {
    property::kMedian,         property::kWeightedMedian, property::kCountableAdditivity,
    property::kWeightedCountableAdditivity, property::kROrderMedian, property::kROrderCumulative,
    property::kFrechetTriangle,
};

using TrialOutcome = std::array<PropertyReport, kSlotCount>;

TrialOutcome run_trial(const SearchConfig& config, std::uint64_t index) {
  Rng rng(derive_seed(config.seed, index));
  const SpaceStrategy strategy = config.strategies[rng.between(0, config.strategies.size() - 1)];
  const auto n = static_cast<std::size_t>(rng.between(config.n_min, config.n_max));
  const std::uint64_t space_seed = rng.next();
  const FiniteMetricSpace space = random_space(space_seed, n, strategy);
  const double r = config.orders[rng.between(0, config.orders.size() - 1)];

  auto pick = [&] { return static_cast<PointIndex>(rng.between(0, n - 1)); };
  const PointIndex x = pick();
  const PointIndex y = pick();
  const PointIndex xi = pick();
  const double alpha = rng.uniform(config.weight_lo, config.weight_hi);
  const double beta = rng.uniform(config.weight_lo, config.weight_hi);
  const auto len = static_cast<std::size_t>(rng.between(config.sequence_min, config.sequence_max));
  std::vector<PointIndex> seq(len);
  std::vector<double> seq_weights(len);
  for (auto& p : seq) p = pick();
  for (auto& w : seq_weights) w = rng.uniform(config.weight_lo, config.weight_hi);
  const std::vector<double> ones(len, 1.0);
  const PointIndex pair[] = {x, y};
  const double unit_pair[] = {1.0, 1.0};
  const double weighted_pair[] = {alpha, beta};

  const bool weighted_theorem = config.weights_in_theorem_regime();
  TrialOutcome out;
  auto evaluate = [&](Slot slot, std::span<const PointIndex> pts, std::span<const double> ws, double order,
                      bool theorem) {
    PropertyReport& rep = out[slot];
    rep.property = std::string(kSlotIds[slot]);
    rep.seed = config.seed;
    rep.trials = 1;
    rep.theorem_regime = theorem;
    ViolationWitness ctx;
    ctx.law = rep.property;
    ctx.trial = index;
    ctx.origin = SpaceOrigin{space_seed, strategy, n};
    ctx.order = order;
    ctx.weights.assign(ws.begin(), ws.end());
    ctx.points.assign(pts.begin(), pts.end());
    ctx.xi = xi;
    assess(rep, evaluate_median_bound(space, xi, pts, ws, order), ctx);
  };

  evaluate(kMedianSlot, pair, unit_pair, 1.0, true);
  evaluate(kWeightedMedianSlot, pair, weighted_pair, 1.0, weighted_theorem);
  evaluate(kAdditivitySlot, seq, ones, 1.0, true);
  evaluate(kWeightedAdditivitySlot, seq, seq_weights, 1.0, weighted_theorem);
  evaluate(kROrderSlot, pair, unit_pair, r, true);
  evaluate(kROrderCumulativeSlot, seq, seq_weights, r, weighted_theorem);

  PropertyReport tri = check_frechet_triangle(space, r);
  tri.seed = config.seed;
  for (auto& w : tri.failures) {
    w.trial = index;
    w.origin = SpaceOrigin{space_seed, strategy, n};
  }
  out[kTriangleSlot] = std::move(tri);
  return out;
}

}  // namespace

void SearchConfig::check() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (trials < 1) bad("trials must be >= 1");
  if (n_min < 1 || n_max < n_min) bad("need 1 <= n_min <= n_max");
  if (orders.empty()) bad("order list is empty");
  for (double r : orders) {
    if (!(r >= 1.0) || !std::isfinite(r)) bad("orders must be >= 1");
  }
  if (!(weight_lo > 0.0) || !(weight_hi >= weight_lo) || !std::isfinite(weight_hi)) {
    bad("need 0 < weight_lo <= weight_hi");
  }
  if (sequence_min < 1 || sequence_max < sequence_min) bad("need 1 <= sequence_min <= sequence_max");
  if (strategies.empty()) bad("strategy list is empty");
}

bool SearchReport::theorem_failure() const noexcept {
  return std::any_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.theorem_regime && !r.held(); });
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("FRECHET_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 1024UL));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

SearchReport search_counterexamples(const SearchConfig& config) {
  config.check();
  const std::uint64_t trials = config.trials;
  std::vector<TrialOutcome> outcomes(trials);

  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(config.threads ? config.threads : default_thread_count(), trials));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t i = next++; i < trials; i = next++) outcomes[i] = run_trial(config, i);
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = trials;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SearchReport report;
  report.seed = config.seed;
  report.trials = trials;
  report.reports.resize(kSlotCount);
  for (std::size_t s = 0; s < kSlotCount; ++s) {
    report.reports[s].property = std::string(kSlotIds[s]);
    report.reports[s].seed = config.seed;
  }
  for (const auto& outcome : outcomes) {
    for (std::size_t s = 0; s < kSlotCount; ++s) report.reports[s].merge(outcome[s]);
  }
  return report;
}

}  // namespace frechet::lab
