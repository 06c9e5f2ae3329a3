#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "frechet/frechet_solver.hpp"
#include "frechet/hull.hpp"
#include "frechet/inequality.hpp"
#include "frechet/metric_space.hpp"
#include "frechet/search.hpp"

namespace frechet {

using json = nlohmann::ordered_json;

json to_json(const ValidationReport& report, const std::vector<std::string>& labels);

/// { "members": [labels], "objective": x, "representative": label }
json to_json(const FiniteMetricSpace& space, const FrechetMeanSet& set);

/// { "order": r, "base": [labels], "members": [labels], "witnesses": { label: [weights] } }
json to_json(const FiniteMetricSpace& space, const HullResult& hull);

/// Inverse of the hull JSON; weights are matched to base labels.
HullResult hull_from_json(const FiniteMetricSpace& space, const json& j);

struct LoadedProblem {
  FiniteMetricSpace space;
  FrechetProblem problem;
};

/// { "space": <inline or file>, "r": number, "args": [ { "weight": w, "subset": [labels] } ] }
/// The space is either { "labels": [...], "distances": [[...]] }, a path string,
/// or { "file": path, "format": "csv" | "edges" }. Paths resolve against `base_dir`.
LoadedProblem parse_problem(const json& j, const std::filesystem::path& base_dir = {});

namespace lab {

json to_json(const ViolationWitness& w);
json to_json(const PropertyReport& r);
json to_json(const SearchReport& r);

ViolationWitness witness_from_json(const json& j);
PropertyReport report_from_json(const json& j);
SearchReport search_report_from_json(const json& j);

}  // namespace lab

}  // namespace frechet
