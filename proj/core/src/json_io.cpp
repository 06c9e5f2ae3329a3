#include "frechet/json_io.hpp"

#include <string>

#include "frechet/error.hpp"
#include "frechet/metric_io.hpp"

namespace frechet {

namespace {

json labels_of(const FiniteMetricSpace& space, std::span<const PointIndex> points) {
  json out = json::array();
  for (PointIndex p : points) out.push_back(space.label(p));
  return out;
}

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

FiniteMetricSpace space_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return load_space(base_dir / j.get<std::string>());
  if (j.is_object() && j.contains("file")) {
    SpaceFormat format = SpaceFormat::Auto;
    if (j.contains("format")) {
      const auto f = get_field<std::string>(j, "format");
      if (f == "csv") format = SpaceFormat::Csv;
      else if (f == "edges") format = SpaceFormat::Edges;
      else throw Error(ErrorCode::ParseError, "unknown space format '" + f + "'");
    }
    return load_space(base_dir / get_field<std::string>(j, "file"), format);
  }
  auto labels = get_field<std::vector<std::string>>(j, "labels");
  const auto distances = get_field<Matrix>(j, "distances");
  return make_space(distances, std::move(labels));
}

}  // namespace

json to_json(const ValidationReport& report, const std::vector<std::string>& labels) {
  json v = json::array();
  for (const auto& viol : report.violations) {
    json idx = json::array();
    for (auto i : viol.indices) idx.push_back(i);
    json item{{"kind", std::string(to_string(viol.kind))}, {"indices", idx}, {"magnitude", viol.magnitude}};
    if (viol.kind != ViolationKind::NonSquare) {
      json names = json::array();
      for (auto i : viol.indices) names.push_back(i < labels.size() ? labels[i] : std::to_string(i));
      item["labels"] = names;
    }
    v.push_back(std::move(item));
  }
  return json{{"ok", report.ok}, {"violations", v}};
}

json to_json(const FiniteMetricSpace& space, const FrechetMeanSet& set) {
  return json{{"members", labels_of(space, set.minimizers)},
              {"objective", set.objective},
              {"representative", space.label(representative(set))}};
}

json to_json(const FiniteMetricSpace& space, const HullResult& hull) {
  json witnesses = json::object();
  for (const auto& [member, weights] : hull.witnesses) witnesses[space.label(member)] = weights;
  return json{{"order", hull.order},
              {"base", labels_of(space, hull.base.members())},
              {"members", labels_of(space, hull.members)},
              {"witnesses", witnesses}};
}

HullResult hull_from_json(const FiniteMetricSpace& space, const json& j) {
  const auto base_labels = get_field<std::vector<std::string>>(j, "base");
  const auto member_labels = get_field<std::vector<std::string>>(j, "members");
  HullResult hull{get_field<double>(j, "order"), Subset::from_labels(space, base_labels), {}, {}};
  for (const auto& l : member_labels) hull.members.push_back(space.index_of(l));
  std::sort(hull.members.begin(), hull.members.end());
  const json witnesses = get_field<json>(j, "witnesses");
  for (const auto& [label, weights] : witnesses.items()) {
    hull.witnesses.emplace(space.index_of(label), weights.get<std::vector<double>>());
  }
  return hull;
}

LoadedProblem parse_problem(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "problem must be a JSON object");
  FiniteMetricSpace space = space_from_json(get_field<json>(j, "space"), base_dir);
  FrechetProblem problem;
  problem.order = get_field<double>(j, "r");
  const auto args = get_field<json>(j, "args");
  if (!args.is_array()) throw Error(ErrorCode::ParseError, "'args' must be an array");
  for (const auto& a : args) {
    const auto labels = get_field<std::vector<std::string>>(a, "subset");
    problem.args.push_back({get_field<double>(a, "weight"), Subset::from_labels(space, labels)});
  }
  problem.check();
  return {std::move(space), std::move(problem)};
}

namespace lab {

json to_json(const ViolationWitness& w) {
  json j{{"law", w.law}};
  if (w.trial) j["trial"] = *w.trial;
  if (w.origin) {
    j["origin"] = {{"seed", w.origin->seed},
                   {"strategy", std::string(frechet::to_string(w.origin->strategy))},
                   {"n", w.origin->n}};
  }
  if (w.space) j["space"] = {{"labels", w.space->labels}, {"distances", w.space->distances}};
  j["r"] = w.order;
  j["weights"] = w.weights;
  j["points"] = w.points;
  if (w.xi) j["xi"] = *w.xi;
  j["members"] = w.members;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

json to_json(const PropertyReport& r) {
  auto list = [](const std::vector<ViolationWitness>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(to_json(w));
    return a;
  };
  return json{{"property", r.property},         {"theorem_regime", r.theorem_regime},
              {"seed", r.seed},                 {"trials", r.trials},
              {"failure_count", r.failure_count}, {"saturation_count", r.saturation_count},
              {"failures", list(r.failures)},   {"saturations", list(r.saturations)},
              {"exhibits", list(r.exhibits)}};
}

json to_json(const SearchReport& r) {
  json reports = json::array();
  for (const auto& p : r.reports) reports.push_back(to_json(p));
  return json{{"seed", r.seed}, {"trials", r.trials}, {"theorem_failure", r.theorem_failure()}, {"reports", reports}};
}

ViolationWitness witness_from_json(const json& j) {
  ViolationWitness w;
  w.law = get_field<std::string>(j, "law");
  if (j.contains("trial")) w.trial = get_field<std::uint64_t>(j, "trial");
  if (j.contains("origin")) {
    const auto& o = j.at("origin");
    const auto name = get_field<std::string>(o, "strategy");
    const auto strategy = parse_strategy(name);
    if (!strategy) throw Error(ErrorCode::ParseError, "unknown strategy '" + name + "'");
    w.origin = SpaceOrigin{get_field<std::uint64_t>(o, "seed"), *strategy, get_field<std::size_t>(o, "n")};
  }
  if (j.contains("space")) {
    const auto& s = j.at("space");
    w.space = SpaceSnapshot{get_field<std::vector<std::string>>(s, "labels"), get_field<Matrix>(s, "distances")};
  }
  w.order = get_field<double>(j, "r");
  w.weights = get_field<std::vector<double>>(j, "weights");
  w.points = get_field<std::vector<PointIndex>>(j, "points");
  if (j.contains("xi")) w.xi = get_field<PointIndex>(j, "xi");
  w.members = get_field<std::vector<PointIndex>>(j, "members");
  w.lhs = get_field<double>(j, "lhs");
  w.rhs = get_field<double>(j, "rhs");
  return w;
}

PropertyReport report_from_json(const json& j) {
  PropertyReport r;
  r.property = get_field<std::string>(j, "property");
  r.theorem_regime = get_field<bool>(j, "theorem_regime");
  r.seed = get_field<std::uint64_t>(j, "seed");
  r.trials = get_field<std::uint64_t>(j, "trials");
  r.failure_count = get_field<std::uint64_t>(j, "failure_count");
  r.saturation_count = get_field<std::uint64_t>(j, "saturation_count");
  for (const auto& w : get_field<json>(j, "failures")) r.failures.push_back(witness_from_json(w));
  for (const auto& w : get_field<json>(j, "saturations")) r.saturations.push_back(witness_from_json(w));
  for (const auto& w : get_field<json>(j, "exhibits")) r.exhibits.push_back(witness_from_json(w));
  return r;
}

SearchReport search_report_from_json(const json& j) {
  SearchReport r;
  r.seed = get_field<std::uint64_t>(j, "seed");
  r.trials = get_field<std::uint64_t>(j, "trials");
  for (const auto& p : get_field<json>(j, "reports")) r.reports.push_back(report_from_json(p));
  return r;
}

}  // namespace lab

}  // namespace frechet
