#include <gtest/gtest.h>

#include "frechet/error.hpp"
#include "frechet/json_io.hpp"
#include "frechet/metric_io.hpp"

#ifndef FRECHET_TEST_DATA_DIR
#error "FRECHET_TEST_DATA_DIR must be defined"
#endif

namespace frechet {
namespace {

const std::filesystem::path kData = FRECHET_TEST_DATA_DIR;

TEST(MeanJson, LabelsAndRepresentative) {
  const auto s = figure1_space();
  const auto set = binary_mean(s, 1.0, 1.0, Subset{1}, 1.0, Subset{2});
  const json j = to_json(s, set);
  EXPECT_EQ(j.dump(), R"({"members":["ξ","x","y","m"],"objective":2.0,"representative":"ξ"})");
}

TEST(ValidationJson, ListsViolations) {
  const auto raw = parse_distance_csv(read_text_file(kData / "triangle_violation.csv"));
  const auto result = validate_metric(raw.matrix, raw.labels);
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  const json j = to_json(std::get<ValidationReport>(result), raw.labels);
  EXPECT_FALSE(j.at("ok").get<bool>());
  ASSERT_EQ(j.at("violations").size(), 1u);
  EXPECT_EQ(j["violations"][0]["kind"], "TriangleViolation");
}

TEST(HullJson, RoundTrip) {
  const auto s = figure1_space();
  const auto hull = hull_members(s, Subset{1, 2}, 1.0);
  const json j = to_json(s, hull);
  EXPECT_EQ(j.at("order"), 1.0);
  EXPECT_EQ(j.at("base"), json({"x", "y"}));
  EXPECT_EQ(j.at("members"), json({"ξ", "x", "y", "m"}));
  EXPECT_EQ(j.at("witnesses").at("x"), json({1.0, 0.0}));
  const auto back = hull_from_json(s, j);
  EXPECT_EQ(back.members, hull.members);
  EXPECT_EQ(back.witnesses, hull.witnesses);
  EXPECT_EQ(back.base, hull.base);
  EXPECT_EQ(back.order, hull.order);
}

TEST(ProblemJson, InlineSpace) {
  const auto j = json::parse(read_text_file(kData / "line_problem.json"));
  const auto loaded = parse_problem(j);
  EXPECT_EQ(loaded.space.size(), 3u);
  EXPECT_EQ(loaded.problem.order, 2.0);
  ASSERT_EQ(loaded.problem.args.size(), 2u);
  const auto set = mean_set(loaded.space, loaded.problem);
  EXPECT_EQ(set.minimizers, (std::vector<PointIndex>{0, 1}));
}

TEST(ProblemJson, SpaceFromFiles) {
  const json by_path = {{"space", "diamond.edges"}, {"r", 1}, {"args", {{{"weight", 1}, {"subset", {"x"}}}}}};
  EXPECT_EQ(parse_problem(by_path, kData).space, figure1_space());
  const json by_format = {{"space", {{"file", "diamond.csv"}, {"format", "csv"}}},
                          {"r", 1},
                          {"args", {{{"weight", 1}, {"subset", {"x", "y"}}}}}};
  const auto loaded = parse_problem(by_format, kData);
  EXPECT_EQ(loaded.space, figure1_space());
  EXPECT_EQ(loaded.problem.args[0].subset, (Subset{1, 2}));
}

TEST(ProblemJson, Errors) {
  const json unknown = {{"space", "diamond.edges"}, {"r", 1}, {"args", {{{"weight", 1}, {"subset", {"q"}}}}}};
  EXPECT_THROW(parse_problem(unknown, kData), Error);
  const json invalid = {{"space", "triangle_violation.csv"}, {"r", 1}, {"args", {{{"weight", 1}, {"subset", {"a"}}}}}};
  try {
    parse_problem(invalid, kData);
    FAIL() << "expected InvalidMetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidMetric);
  }
  EXPECT_ANY_THROW(parse_problem(json{{"r", 1}}, kData));
}

TEST(ReportJson, WitnessRoundTrip) {
  const auto w = lab::weight_necessity_demo();
  const json j = lab::to_json(w);
  EXPECT_EQ(j.at("lhs"), 2.0);
  EXPECT_EQ(j.at("rhs"), 1.0);
  EXPECT_EQ(lab::witness_from_json(j), w);
  EXPECT_EQ(lab::witness_from_json(json::parse(j.dump())), w);
}

TEST(ReportJson, SearchRoundTrip) {
  lab::SearchConfig c;
  c.trials = 200;
  c.weight_lo = 0.2;
  c.weight_hi = 0.8;
  const auto report = lab::search_counterexamples(c);
  const json j = lab::to_json(report);
  EXPECT_EQ(j.at("seed"), 42u);
  EXPECT_EQ(j.at("trials"), 200u);
  EXPECT_FALSE(j.at("theorem_failure").get<bool>());
  for (const auto& r : j.at("reports")) {
    for (auto key : {"property", "trials", "failures", "saturations", "seed"}) EXPECT_TRUE(r.contains(key)) << key;
  }
  const auto back = lab::search_report_from_json(json::parse(j.dump()));
  EXPECT_EQ(back, report);
  EXPECT_EQ(lab::to_json(back).dump(), j.dump());
}

}  // namespace
}  // namespace frechet
