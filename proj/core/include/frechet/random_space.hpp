#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "frechet/metric_space.hpp"

namespace frechet {

enum class SpaceStrategy {
  MetricRepair,     // symmetric uniform(0.1, 2.0) matrix closed under shortest paths
  RandomGraph,      // connected random graph, uniform(0.1, 2.0) weights
  EuclideanSample,  // uniform points in [0, 1]^3
};

std::string_view to_string(SpaceStrategy s) noexcept;
std::optional<SpaceStrategy> parse_strategy(std::string_view name) noexcept;

inline constexpr SpaceStrategy kAllStrategies[] = {
    SpaceStrategy::MetricRepair, SpaceStrategy::RandomGraph, SpaceStrategy::EuclideanSample};

/// Deterministic in (seed, n, strategy). Always returns a validated space.
FiniteMetricSpace random_space(std::uint64_t seed, std::size_t n, SpaceStrategy strategy);

}  // namespace frechet
