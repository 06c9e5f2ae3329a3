// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "frechet/euclidean.hpp"
#include "frechet/frechet_solver.hpp"
#include "frechet/hull.hpp"
#include "frechet/inequality.hpp"
#include "frechet/metric_io.hpp"
#include "frechet/random.hpp"
#include "frechet/random_space.hpp"
#include "frechet/search.hpp"

#ifndef FRECHET_LAB_EXE
#error "FRECHET_LAB_EXE must point at the frechet-lab binary"
#endif

namespace {

using namespace frechet;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Appends to the detail and folds `ok` into the verdict.
struct Checker {
  Outcome out;
  void check(bool ok, const std::string& what) {
    out.pass = out.pass && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string num(double v) { return format_number(v); }

Outcome figure1_reproduction() {
  const auto start = Clock::now();
  Checker c;
  const Matrix d = {{0, 1, 1, 2}, {1, 0, 2, 1}, {1, 2, 0, 1}, {2, 1, 1, 0}};
  const auto validated = validate_metric(d, {"ξ", "x", "y", "m"});
  c.check(std::holds_alternative<FiniteMetricSpace>(validated), "validates");

  const auto s = figure1_space();
  const PointIndex xi = s.index_of("ξ"), x = s.index_of("x"), y = s.index_of("y"), m = s.index_of("m");
  const auto set = binary_mean(s, 1.0, 1.0, Subset{x}, 1.0, Subset{y});
  c.check(set.minimizers == std::vector<PointIndex>{xi, x, y, m}, "mean set {ξ,x,y,m}");
  c.check(set.objective == 2.0, "objective " + num(set.objective));

  const double lhs = s.distance(xi, m);
  const double rhs = s.distance(x, xi) + s.distance(xi, y);
  c.check(std::abs(lhs - rhs) <= 1e-9, "saturated " + num(lhs) + " = " + num(rhs));
  const auto report = lab::check_median_inequality(s, xi, x, y);
  c.check(report.held() && report.saturation_count == 1, "checker reports one saturation");
  c.check(lhs > 0.5 * rhs, "half bound fails " + num(lhs) + " > " + num(0.5 * rhs));

  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.check(secs < 1.0, "runtime < 1 s");
  return c.out;
}

Outcome operator_laws() {
  const auto start = Clock::now();
  Checker c;
  std::uint64_t failures = 0, trials = 0, exhibits = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(2718, i));
    const std::size_t n = rng.between(2, 10);
    const auto space = random_space(rng.next(), n, kAllStrategies[i % 3]);
    const auto report = lab::check_operator_laws(space, lab::LawConfig{rng.next(), 8, {1.0, 1.5, 2.0, 3.0}});
    failures += report.failure_count;
    trials += report.trials;
    exhibits += report.exhibits.size();
  }
  c.check(failures == 0, std::to_string(failures) + " failures in " + std::to_string(trials) + " law checks");
  c.out.detail += " (" + std::to_string(exhibits) + " non-associativity exhibits)";
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.check(secs < 60.0, "runtime " + num(std::round(secs * 100) / 100) + " s < 60 s");
  return c.out;
}

Outcome non_associativity() {
  Checker c;
  const double pts[] = {0, 1, 5};
  const auto line = real_line_space(pts);
  const auto pair = lab::association_orders(line, 2.0, 0, 1, 2);
  c.check(line.label(pair.left) == "1" && line.label(pair.right) == "0",
          "(0⊕1)⊕5 -> " + line.label(pair.left) + ", 0⊕(1⊕5) -> " + line.label(pair.right));
  return c.out;
}

Outcome theorem_regime() {
  const auto start = Clock::now();
  Checker c;
  lab::SearchConfig config;
  config.seed = 42;
  config.trials = 10000;
  const auto result = lab::search_counterexamples(config);
  for (const auto& r : result.reports) {
    c.check(r.theorem_regime && r.trials == 10000 && r.failure_count == 0,
            r.property + " " + std::to_string(r.failure_count) + "/" + std::to_string(r.trials));
  }
  c.check(result.reports.size() == 7, std::to_string(result.reports.size()) + " properties");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.check(secs < 300.0, "runtime " + num(std::round(secs * 100) / 100) + " s < 300 s");
  return c.out;
}

Outcome weight_necessity() {
  Checker c;
  const auto w = lab::weight_necessity_demo();
  c.check(w.lhs == 2.0 && w.rhs == 1.0, "demo lhs " + num(w.lhs) + " rhs " + num(w.rhs));
  c.check(w.space && w.space->distances == figure1_space().matrix(), "demo space is the diamond");

  lab::SearchConfig config;
  config.seed = 42;
  config.trials = 10000;
  config.weight_lo = 0.1;
  config.weight_hi = 0.9;
  const auto result = lab::search_counterexamples(config);
  std::uint64_t violations = 0;
  for (const auto& r : result.reports) {
    if (!r.theorem_regime) violations += r.failure_count;
  }
  c.check(violations >= 1, std::to_string(violations) + " sub-unit-weight violations in 10000 trials");
  c.check(!result.theorem_failure(), "unweighted properties still clean");
  return c.out;
}

Outcome euclidean_backend() {
  using namespace frechet::euclid;
  Checker c;
  auto p2 = [](double a, double b) { return (Point(2) << a, b).finished(); };

  const EuclideanProblem tri{{p2(0, 0), p2(1, 0), p2(0, 1)}, {1, 1, 1}, 1.0};
  const auto w = geometric_median_weiszfeld(tri);
  const auto grid = grid_oracle(tri, {p2(0, 0), p2(1, 1)}, 2001);
  const double t = (3.0 - std::sqrt(3.0)) / 6.0;
  const double grid_gap = (w.minimizer - grid.minimizer).cwiseAbs().maxCoeff();
  const double exact_gap = std::max(std::abs(w.minimizer[0] - t), std::abs(w.minimizer[1] - t));
  c.check(grid_gap <= 1e-3, "Weiszfeld vs grid " + num(grid_gap));
  c.check(exact_gap <= 1e-4, "Weiszfeld vs (3-√3)/6 " + num(exact_gap));

  Rng rng(6);
  auto random_problem = [&](double r) {
    EuclideanProblem p;
    p.order = r;
    const auto dim = rng.between(1, 3), n = rng.between(2, 6);
    for (std::uint64_t i = 0; i < n; ++i) {
      Point q(static_cast<Eigen::Index>(dim));
      for (Eigen::Index k = 0; k < q.size(); ++k) q[k] = rng.uniform(-2.0, 2.0);
      p.points.push_back(q);
      p.weights.push_back(rng.uniform(0.2, 3.0));
    }
    return p;
  };

  double worst_r2 = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_problem(2.0);
    worst_r2 = std::max(worst_r2, (weighted_mean_r2(p).minimizer - general_r_descent(p).minimizer).norm());
  }
  c.check(worst_r2 <= 1e-8, "r=2 closed form vs descent " + num(worst_r2));

  double worst_fd = 0.0;
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_problem(rng.uniform(1.25, 4.0));
    Point y(static_cast<Eigen::Index>(p.dimension()));
    for (Eigen::Index k = 0; k < y.size(); ++k) y[k] = rng.uniform(-2.0, 2.0);
    const Point g = gradient(p, y);
    Point fd(y.size());
    for (Eigen::Index k = 0; k < y.size(); ++k) {
      Point a = y, b = y;
      a[k] += h;
      b[k] -= h;
      fd[k] = (objective(p, a) - objective(p, b)) / (2 * h);
    }
    worst_fd = std::max(worst_fd, (g - fd).norm() / std::max(1.0, g.norm()));
  }
  c.check(worst_fd <= 1e-5, "gradient vs finite differences " + num(worst_fd) + " relative");
  return c.out;
}

Outcome hull_oracle() {
  Checker c;
  std::size_t checks = 0, misses = 0, exact_total = 0, grid_total = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(31415, i));
    const std::size_t n = rng.between(2, 8);
    const auto space = random_space(rng.next(), n, kAllStrategies[i % 3]);
    const std::size_t k = rng.between(1, std::min<std::size_t>(4, n));
    std::vector<PointIndex> base;
    while (base.size() < k) {
      const PointIndex p = rng.between(0, n - 1);
      if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
    }
    for (double r : {1.0, 2.0}) {
      const auto exact = hull_members(space, Subset(base), r);
      const auto grid = hull_grid_oracle(space, Subset(base), r, 20);
      ++checks;
      for (PointIndex g : grid) misses += exact.contains(g) ? 0 : 1;
      exact_total += exact.members.size();
      grid_total += grid.size();
    }
  }
  c.check(misses == 0, "grid ⊆ exact on " + std::to_string(checks) + " hulls (grid found " +
                           std::to_string(grid_total) + " of " + std::to_string(exact_total) + ")");

  const auto s = figure1_space();
  const auto h = hull_members(s, Subset{s.index_of("x"), s.index_of("y")}, 1.0);
  c.check(h.members == std::vector<PointIndex>{0, 1, 2, 3}, "diamond hull of {x,y} at r=1 is the whole space");
  return c.out;
}

std::string run_in_process(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != cli::kExitOk) return "exit-error: " + err.str();
  return out.str();
}

std::string run_subprocess(const std::string& env) {
  const std::string cmd = env + " '" + std::string(FRECHET_LAB_EXE) + "' search --seed 42 --trials 1000";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "popen failed";
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return status == 0 ? text : "exit status " + std::to_string(status);
}

Outcome determinism() {
  Checker c;
  const std::string a = run_subprocess("FRECHET_LAB_THREADS=1");
  const std::string b = run_subprocess("FRECHET_LAB_THREADS=1");
  const std::string d = run_subprocess("FRECHET_LAB_THREADS=4");
  const std::string e = run_subprocess("FRECHET_LAB_THREADS=8");
  c.check(!a.empty() && a.front() == '{', "emits JSON (" + std::to_string(a.size()) + " bytes)");
  c.check(a == b, "repeat run identical");
  c.check(a == d && a == e, "1, 4 and 8 threads identical");
  const std::string inproc = run_in_process({"search", "--seed", "42", "--trials", "1000", "--threads", "3"});
  c.check(a == inproc, "in-process run with 3 threads identical");
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "four-point diamond reproduction", figure1_reproduction},
      {2, "operator laws on 1000 random spaces", operator_laws},
      {3, "non-associativity witness", non_associativity},
      {4, "theorem-regime inequality suite", theorem_regime},
      {5, "weight necessity", weight_necessity},
      {6, "Euclidean backend", euclidean_backend},
      {7, "hull oracle equivalence", hull_oracle},
      {8, "search determinism", determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << "): " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
