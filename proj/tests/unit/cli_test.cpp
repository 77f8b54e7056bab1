#include <sstream>

#include <gtest/gtest.h>

#include "evaluate.hpp"
#include "runner.hpp"
#include "scenario.hpp"
#include "suites.hpp"

namespace koszul::cli {
namespace {

Json file_with(Json scenarios, Json top = Json::object()) {
  Json doc = {{"schema", 1}};
  for (auto& [k, v] : top.items()) doc[k] = v;
  doc["scenarios"] = std::move(scenarios);
  return doc;
}

Json index_scenario(const std::string& id, const std::string& system) {
  return {{"id", id},
          {"kind", "index"},
          {"domain", {{"kind", "polydisc"}, {"center", "0"}, {"radii", "1"}}},
          {"system", system}};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Schema, RejectsUnknownFieldsAndVersions) {
  Json bad = index_scenario("a", "z");
  bad["colour"] = "blue";
  EXPECT_THROW(parse_scenario_file(file_with({bad}), {}), SchemaError);
  Json doc = file_with({index_scenario("a", "z")});
  doc["schema"] = 2;
  EXPECT_THROW(parse_scenario_file(doc, {}), SchemaError);
  doc.erase("schema");
  EXPECT_THROW(parse_scenario_file(doc, {}), SchemaError);
  EXPECT_THROW(parse_scenario_file(file_with({index_scenario("a", "z"), index_scenario("a", "z")}), {}), SchemaError);
  Json wrong_kind = index_scenario("a", "z");
  wrong_kind["kind"] = "volume";
  EXPECT_THROW(parse_scenario_file(file_with({wrong_kind}), {}), SchemaError);
  Json bad_matrix = {{"id", "m"}, {"kind", "homology"}, {"operators", {{{"1", "2"}, {"3"}}}}};
  EXPECT_THROW(parse_scenario_file(file_with({bad_matrix}), {}), SchemaError);
  EXPECT_THROW(parse_scenario_file(file_with({index_scenario("a", "z +")}), {}), SchemaError);
}

TEST(Schema, SettingPrecedence) {
  Json sc = index_scenario("a", "z");
  Json pinned = index_scenario("b", "z");
  pinned["backend"] = "exact";
  pinned["seed"] = 3;
  const Json doc = file_with({sc, pinned}, {{"backend", "float"}, {"tol", 1e-8}, {"seed", 5}});

  auto plain = parse_scenario_file(doc, {});
  EXPECT_EQ(plain[0].settings.backend, Backend::Float);
  EXPECT_EQ(plain[0].settings.seed, 5u);
  EXPECT_DOUBLE_EQ(plain[0].settings.tol.relative, 1e-8);

  Overrides flags;
  flags.backend = Backend::Exact;
  flags.seed = 9;
  auto flagged = parse_scenario_file(doc, flags);
  EXPECT_EQ(flagged[0].settings.backend, Backend::Exact);
  EXPECT_EQ(flagged[0].settings.seed, 9u);
  EXPECT_EQ(flagged[1].settings.seed, 3u);

  auto defaults = parse_scenario_file(file_with({sc}), {});
  EXPECT_EQ(defaults[0].settings.backend, Backend::Exact);
  EXPECT_EQ(defaults[0].settings.seed, kDefaultSeed);
}

TEST(Evaluate, ReportShape) {
  const auto s = parse_scenario_file(file_with({index_scenario("two", "z^2 - 1/4")}), {});
  const Json r = evaluate(s[0]);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "kind", "backend", "tol", "seed", "inputs", "outputs", "verdicts", "pass"}));
  EXPECT_EQ(r["outputs"]["global_index"], -2);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_FALSE(r.contains("wall_ms"));
  EXPECT_TRUE(evaluate(s[0], true).contains("wall_ms"));
}

TEST(Evaluate, ComputationalErrorsBecomeFailureRecords) {
  const auto s = parse_scenario_file(file_with({index_scenario("edge", "z - 1")}), {});
  const Json r = evaluate(s[0]);
  EXPECT_FALSE(r["pass"].get<bool>());
  EXPECT_EQ(r["error"]["code"], "ZeroOnBoundary");
}

TEST(Evaluate, FailedExpectationFails) {
  Json sc = index_scenario("wrong", "z^2 - 1/4");
  sc["expect"] = {{"index", -1}};
  const Json r = evaluate(parse_scenario_file(file_with({sc}), {})[0]);
  EXPECT_FALSE(r["pass"].get<bool>());
}

TEST(Runner, OrderIsIndependentOfWorkers) {
  Json list = Json::array();
  for (int i = 0; i < 24; ++i)
    list.push_back(index_scenario("s" + std::to_string(i), "z^" + std::to_string(1 + i % 5) + " - 1/" + std::to_string(2 + i)));
  const auto scenarios = parse_scenario_file(file_with(list), {});
  std::ostringstream one, four;
  EXPECT_TRUE(run_scenarios(scenarios, {1, false}, one));
  EXPECT_TRUE(run_scenarios(scenarios, {4, false}, four));
  EXPECT_EQ(one.str(), four.str());
  const auto out = lines(one.str());
  ASSERT_EQ(out.size(), scenarios.size());
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(Json::parse(out[i])["id"], scenarios[i].id);
}

TEST(Runner, ResolveJobs) {
  EXPECT_EQ(resolve_jobs(3), 3u);
  EXPECT_GE(resolve_jobs(0), 1u);
}

TEST(Suites, SeedChangesOnlyRandomSections) {
  const auto a = builtin_sections(7);
  const auto b = builtin_sections(7);
  const auto c = builtin_sections(8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].scenarios, b[i].scenarios) << a[i].name;
  EXPECT_NE(a[0].scenarios, c[0].scenarios);
  for (const auto& s : a) EXPECT_NO_THROW(validate_section(s, {})) << s.name;
}

}  // namespace
}  // namespace koszul::cli
