#pragma once

#include <cstdint>
#include <vector>

#include "frechet/inequality.hpp"
#include "frechet/random_space.hpp"

namespace frechet::lab {

struct SearchConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::vector<double> orders{1.0, 1.5, 2.0, 3.0};
  double weight_lo = 1.0;
  double weight_hi = 5.0;
  std::size_t sequence_min = 2;
  std::size_t sequence_max = 6;
  std::vector<SpaceStrategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  /// 0 means FRECHET_LAB_THREADS or hardware concurrency. Never affects results.
  unsigned threads = 0;

  /// Throws InvalidConfig (e.g. trials == 0, empty order list).
  void check() const;
  /// Weighted bounds are theorems only when every sampled weight is ≥ 1.
  bool weights_in_theorem_regime() const noexcept { return weight_lo >= 1.0; }
};

struct SearchReport {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<PropertyReport> reports;

  /// True when some theorem-regime property recorded a failure.
  bool theorem_failure() const noexcept;
  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Thread count from FRECHET_LAB_THREADS, else hardware concurrency (≥ 1).
unsigned default_thread_count();

/// Randomized stress of every bound. Trial i draws from derive_seed(seed, i),
/// and per-trial results are merged in trial order, so output is identical
/// for any thread count.
SearchReport search_counterexamples(const SearchConfig& config);

}  // namespace frechet::lab
