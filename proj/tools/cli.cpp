#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "frechet/error.hpp"
#include "frechet/frechet_solver.hpp"
#include "frechet/hull.hpp"
#include "frechet/inequality.hpp"
#include "frechet/json_io.hpp"
#include "frechet/metric_io.hpp"
#include "frechet/search.hpp"

namespace frechet::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}};
const std::map<std::string, SpaceFormat> kSpaceFormats{
    {"auto", SpaceFormat::Auto}, {"csv", SpaceFormat::Csv}, {"edges", SpaceFormat::Edges}};

std::string num(double v) { return format_number(v); }

std::string set_text(const FiniteMetricSpace& space, std::span<const PointIndex> points) {
  std::vector<std::string> names;
  for (PointIndex p : points) names.push_back(space.label(p));
  return fmt::format("{{{}}}", fmt::join(names, ", "));
}

// Right-aligns by code points; fmt pads by bytes, which skews non-ASCII labels.
std::string pad_left(const std::string& s, std::size_t width) {
  const auto cps = static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  return std::string(width > cps ? width - cps : 0, ' ') + s;
}

std::string matrix_text(const FiniteMetricSpace& space) {
  std::string out = "      ";
  for (const auto& l : space.labels()) out += pad_left(l, 8);
  out += '\n';
  for (PointIndex i = 0; i < space.size(); ++i) {
    out += pad_left(space.label(i), 6);
    for (PointIndex j = 0; j < space.size(); ++j) out += fmt::format("{:>8}", num(space(i, j)));
    out += '\n';
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "<weight>:<label>,<label>..."
WeightedArgument parse_arg(const FiniteMetricSpace& space, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--arg expects <weight>:<label>[,<label>...], got '" + spec + "'");
  double weight = 0.0;
  try {
    std::size_t used = 0;
    weight = std::stod(spec.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError("bad weight in --arg '" + spec + "'");
  }
  const auto labels = split_list(spec.substr(colon + 1));
  return {weight, Subset::from_labels(space, labels)};
}

void print_reports(std::ostream& out, const std::vector<lab::PropertyReport>& reports) {
  out << fmt::format("{:<30} {:>8} {:>9} {:>12}  {}\n", "property", "trials", "failures", "saturations", "regime");
  for (const auto& r : reports) {
    out << fmt::format("{:<30} {:>8} {:>9} {:>12}  {}\n", r.property, r.trials, r.failure_count,
                       r.saturation_count, r.theorem_regime ? "theorem" : "exploratory");
    for (const auto& w : r.failures) {
      out << fmt::format("    failure [{}] r={} lhs={} rhs={}\n", w.law, num(w.order), num(w.lhs), num(w.rhs));
    }
  }
}

struct Options {
  std::string format = "text";
  std::string space_path;
  std::string space_format = "auto";
  std::string problem_path;
  std::optional<double> order;
  std::vector<std::string> args;
  std::string base;
  bool convexity = false;
  std::size_t max_combo = 3;
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::size_t samples = 64;
  std::vector<double> orders;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  double weight_min = 1.0;
  double weight_max = 5.0;
  std::vector<std::string> strategies;
  unsigned threads = 0;
};

Format format_of(const Options& o) { return kFormats.at(o.format); }

FiniteMetricSpace load(const Options& o) { return load_space(o.space_path, kSpaceFormats.at(o.space_format)); }

int cmd_validate(const Options& o, std::ostream& out) {
  const std::string text = read_text_file(o.space_path);
  SpaceFormat fmt = kSpaceFormats.at(o.space_format);
  if (fmt == SpaceFormat::Auto) {
    fmt = std::filesystem::path(o.space_path).extension() == ".csv" ? SpaceFormat::Csv : SpaceFormat::Edges;
  }
  LabeledMatrix raw;
  if (fmt == SpaceFormat::Csv) {
    raw = parse_distance_csv(text);
  } else {
    // Edge lists are metric by construction; failures surface as errors.
    const FiniteMetricSpace s = from_edge_list(parse_edge_list(text));
    raw = {s.labels(), s.matrix()};
  }
  const auto result = validate_metric(raw.matrix, raw.labels);
  const ValidationReport report =
      std::holds_alternative<ValidationReport>(result) ? std::get<ValidationReport>(result) : ValidationReport{};

  if (format_of(o) == Format::Json) {
    out << to_json(report, raw.labels).dump(2) << '\n';
  } else if (report.ok) {
    out << fmt::format("valid metric space with {} point(s)\n", raw.labels.size());
  } else {
    out << fmt::format("invalid: {} violation(s)\n", report.violations.size());
    for (const auto& v : report.violations) {
      out << fmt::format("  {} at ({}, {}, {}) magnitude {}\n", to_string(v.kind), v.indices[0], v.indices[1],
                         v.indices[2], num(v.magnitude));
    }
  }
  return report.ok ? kExitOk : kExitViolation;
}

int cmd_mean(const Options& o, std::ostream& out) {
  std::optional<LoadedProblem> loaded;
  if (!o.problem_path.empty()) {
    const std::filesystem::path path(o.problem_path);
    json j;
    try {
      j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("problem JSON: ") + e.what());
    }
    loaded.emplace(parse_problem(j, path.parent_path()));
  } else {
    if (o.space_path.empty()) throw UsageError("mean needs --problem or --space");
    FiniteMetricSpace space = load(o);
    loaded.emplace(LoadedProblem{std::move(space), FrechetProblem{1.0, {}}});
    if (!o.order) throw UsageError("mean with --space needs --r");
  }
  if (o.order) loaded->problem.order = *o.order;
  if (!o.args.empty()) {
    loaded->problem.args.clear();
    for (const auto& a : o.args) loaded->problem.args.push_back(parse_arg(loaded->space, a));
  }

  const FrechetMeanSet set = mean_set(loaded->space, loaded->problem);
  if (format_of(o) == Format::Json) {
    json j = to_json(loaded->space, set);
    j["r"] = loaded->problem.order;
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("mean set = {}\nobjective = {}\nrepresentative = {}\n",
                       set_text(loaded->space, set.minimizers), num(set.objective),
                       loaded->space.label(representative(set)));
  }
  return kExitOk;
}

int cmd_hull(const Options& o, std::ostream& out) {
  const FiniteMetricSpace space = load(o);
  const auto labels = split_list(o.base);
  if (labels.empty()) throw UsageError("hull needs --base <label>[,<label>...]");
  const Subset base = Subset::from_labels(space, labels);
  const double order = o.order.value_or(1.0);
  const HullResult hull = hull_members(space, base, order);
  std::optional<ConvexityReport> convexity;
  if (o.convexity) convexity = check_convexity(space, Subset(hull.members), order, o.max_combo);

  if (format_of(o) == Format::Json) {
    json j = to_json(space, hull);
    if (convexity) {
      json c{{"convex", convexity->convex},
             {"combos_checked", convexity->combos_checked},
             {"max_combo_size", convexity->max_combo_size}};
      if (const auto& ce = convexity->counterexample) {
        json combo = json::array();
        for (PointIndex p : ce->combo) combo.push_back(space.label(p));
        c["counterexample"] = {{"combo", combo}, {"weights", ce->weights}, {"outside", space.label(ce->outside)}};
      }
      j["convexity"] = c;
    }
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("hull (r = {}) of {} = {}\n", num(order), set_text(space, base.members()),
                       set_text(space, hull.members));
    for (const auto& [member, weights] : hull.witnesses) {
      std::vector<std::string> ws;
      for (double w : weights) ws.push_back(num(w));
      out << fmt::format("  {}: weights ({})\n", space.label(member), fmt::join(ws, ", "));
    }
    if (convexity) {
      out << fmt::format("closed under means of up to {} members: {} ({} combinations checked)\n",
                         convexity->max_combo_size, convexity->convex ? "yes" : "no", convexity->combos_checked);
      if (const auto& ce = convexity->counterexample) {
        out << fmt::format("  counterexample: {} reaches {}\n", set_text(space, ce->combo), space.label(ce->outside));
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FiniteMetricSpace space = load(o);
  lab::VerifyConfig config;
  config.seed = o.seed;
  config.samples = o.samples;
  if (!o.orders.empty()) config.orders = o.orders;
  const auto reports = lab::verify_space(space, config);
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.held(); });

  if (format_of(o) == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(lab::to_json(r));
    out << json{{"seed", o.seed}, {"failed", failed}, {"reports", arr}}.dump(2) << '\n';
  } else {
    print_reports(out, reports);
    out << (failed ? "FAILED\n" : "all properties held\n");
  }
  return failed ? kExitViolation : kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  lab::SearchConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.n_min = o.n_min;
  config.n_max = o.n_max;
  if (!o.orders.empty()) config.orders = o.orders;
  config.weight_lo = o.weight_min;
  config.weight_hi = o.weight_max;
  config.threads = o.threads;
  if (!o.strategies.empty()) {
    config.strategies.clear();
    for (const auto& name : o.strategies) {
      const auto s = parse_strategy(name);
      if (!s) throw UsageError("unknown strategy '" + name + "'");
      config.strategies.push_back(*s);
    }
  }
  const lab::SearchReport report = lab::search_counterexamples(config);
  if (format_of(o) == Format::Json) {
    out << lab::to_json(report).dump(2) << '\n';
  } else {
    out << fmt::format("seed {} trials {}\n", report.seed, report.trials);
    print_reports(out, report.reports);
  }
  return report.theorem_failure() ? kExitViolation : kExitOk;
}

int cmd_demo(const Options& o, std::ostream& out) {
  const FiniteMetricSpace space = figure1_space();
  const PointIndex xi = space.index_of("ξ");
  const PointIndex x = space.index_of("x");
  const PointIndex y = space.index_of("y");
  const PointIndex m = space.index_of("m");
  const FrechetMeanSet set = binary_mean(space, 1.0, 1.0, Subset{x}, 1.0, Subset{y});
  const lab::PropertyReport median = lab::check_median_inequality(space, xi, x, y);
  const lab::ViolationWitness necessity = lab::weight_necessity_demo();

  const double lhs = space(xi, m);
  const double dx = space(x, xi);
  const double dy = space(xi, y);
  const double half = 0.5 * (dx + dy);

  if (format_of(o) == Format::Json) {
    json saturations = json::array();
    for (const auto& w : median.saturations) saturations.push_back(lab::to_json(w));
    out << json{{"space", {{"labels", space.labels()}, {"distances", space.matrix()}}},
                {"mean_set", to_json(space, set)},
                {"median_bound", lab::to_json(median)},
                {"half_bound", {{"lhs", lhs}, {"rhs", half}, {"holds", lhs <= half}}},
                {"weight_necessity", lab::to_json(necessity)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }

  out << "four-point space with negative curvature:\n" << matrix_text(space);
  out << fmt::format("mean set = {} (r = 1, objective {})\n", set_text(space, set.minimizers), num(set.objective));
  out << fmt::format("median bound d(ξ, m) <= d(x, ξ) + d(ξ, y) for every member; {} saturation(s)\n",
                     median.saturation_count);
  out << fmt::format("saturated: {} = {} + {}\n", num(lhs), num(dx), num(dy));
  out << fmt::format("classical half bound fails: {} > {}\n", num(lhs), num(half));
  out << fmt::format("violation at α=β=0.5: {} > {}\n", num(necessity.lhs), num(necessity.rhs));
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  for (const auto& a : args) {
    if (!is_valid_utf8(a)) {
      err << "error: arguments must be valid UTF-8\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Weighted Fréchet means, hulls and median inequalities on finite metric spaces", "frechet-lab"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    return c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_space = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--space", o.space_path, "Distance-matrix CSV or edge-list file");
    if (required) opt->required();
    c->add_option("--space-format", o.space_format, "Space file format")
        ->check(CLI::IsMember({"auto", "csv", "edges"}));
  };

  auto* validate = app.add_subcommand("validate", "Check the metric axioms of a space file");
  add_space(validate, true);
  add_format(validate);

  auto* mean = app.add_subcommand("mean", "Compute a weighted Fréchet mean set");
  mean->add_option("--problem", o.problem_path, "Problem JSON file");
  add_space(mean, false);
  mean->add_option("--r", o.order, "Order r >= 1 (overrides the problem)");
  mean->add_option("--arg,--args", o.args, "Weighted argument <weight>:<label>[,<label>...]; repeatable");
  add_format(mean);

  auto* hull = app.add_subcommand("hull", "Compute the mean hull of a base set with witness weights");
  add_space(hull, true);
  hull->add_option("--base", o.base, "Comma-separated base labels")->required();
  hull->add_option("--r", o.order, "Order r >= 1 (default 1)");
  hull->add_flag("--check-convexity", o.convexity, "Also test closure of the hull under means");
  hull->add_option("--max-combo", o.max_combo, "Largest member combination for the closure test");
  add_format(hull);

  auto* verify = app.add_subcommand("verify", "Check every theorem-regime property on a space");
  add_space(verify, true);
  verify->add_option("--r", o.orders, "Orders to check, comma-separated")->delimiter(',');
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--samples", o.samples, "Sampled sequences per property");
  add_format(verify);

  auto* search = app.add_subcommand("search", "Seeded randomized counterexample search");
  search->add_option("--seed", o.seed, "Master seed");
  search->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  search->add_option("--n-min", o.n_min, "Smallest space size");
  search->add_option("--n-max", o.n_max, "Largest space size");
  search->add_option("--r", o.orders, "Orders, comma-separated")->delimiter(',');
  search->add_option("--weight-min", o.weight_min, "Lower weight bound");
  search->add_option("--weight-max", o.weight_max, "Upper weight bound");
  search->add_option("--strategy", o.strategies, "metric-repair, random-graph, euclidean-sample")->delimiter(',');
  search->add_option("--threads", o.threads, "Worker threads (default FRECHET_LAB_THREADS or all cores)");
  // Search output is meant for diffing and archiving, so it defaults to JSON.
  auto* search_format = add_format(search);

  auto* demo = app.add_subcommand("demo-fig1", "Walk through the four-point negative-curvature example");
  add_format(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*mean) return cmd_mean(o, out);
    if (*hull) return cmd_hull(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*search) {
      if (search_format->count() == 0) o.format = "json";
      return cmd_search(o, out);
    }
    if (*demo) return cmd_demo(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidMetric ? kExitViolation : kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace frechet::cli
