#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "smallworld/compare.hpp"
#include "smallworld/errors.hpp"
#include "smallworld/report.hpp"
#include "smallworld/rng.hpp"
#include "support.hpp"

namespace sw = smallworld;

namespace {

// Graphs keyed by string ids, so cross-graph lookup by external id is
// actually exercised (make_undirected's ids are just "0".."n-1").
sw::UndirectedGraph named_undirected(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  sw::EdgeList list;
  list.directed = false;
  sw::IdMap ids;
  for (const auto& [a, b] : edges) {
    list.edges.emplace_back(ids.insert_or_get(a), ids.insert_or_get(b));
  }
  list.node_count = ids.size();
  return build_undirected(list, std::move(ids));
}

sw::DirectedGraph named_directed(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  sw::EdgeList list;
  list.directed = true;
  sw::IdMap ids;
  for (const auto& [a, b] : edges) {
    list.edges.emplace_back(ids.insert_or_get(a), ids.insert_or_get(b));
  }
  list.node_count = ids.size();
  return build_directed(list, std::move(ids));
}

}  // namespace

TEST_CASE("top-k ranks by degree with id tiebreak") {
  auto star = named_undirected(
      {{"hub", "a"}, {"hub", "b"}, {"hub", "c"}, {"a", "b"}});
  auto top = sw::top_k(star, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0].external_id == "hub");
  CHECK(top[0].value == 3);
  CHECK(top[1].external_id == "a");  // a and b tie at 2; byte order wins
  CHECK(top[1].value == 2);

  // k above N clamps to N.
  CHECK(sw::top_k(star, 100).size() == 4);
  CHECK_THROWS_AS((void)sw::top_k(star, 0), sw::UsageError);

  // Numeric-looking ids still compare as bytes: "10" < "2".
  auto g = support::make_undirected(11, {{2, 10}, {2, 1}, {10, 3}});
  auto pair = sw::top_k(g, 2);
  CHECK(pair[0].external_id == "10");
  CHECK(pair[1].external_id == "2");
}

TEST_CASE("top-k prefix property and mode checks") {
  sw::SplitMix64 rng(20260814);
  auto g = support::make_undirected(
      40, oracles::random_undirected_edges(40, 0.15, rng));
  auto k5 = sw::top_k(g, 5);
  auto k6 = sw::top_k(g, 6);
  REQUIRE(k6.size() == 6);
  for (int i = 0; i < 5; ++i) {
    CHECK(k5[i].external_id == k6[i].external_id);
    CHECK(k5[i].value == k6[i].value);
  }
  CHECK(std::is_sorted(k6.begin(), k6.end(), [](auto& a, auto& b) {
    return a.value > b.value || (a.value == b.value && a.external_id < b.external_id);
  }));

  CHECK_THROWS_AS((void)sw::top_k(g, 3, sw::DegreeMode::In), sw::UsageError);
  auto d = named_directed({{"x", "y"}, {"z", "y"}});
  CHECK_THROWS_AS((void)sw::top_k(d, 3, sw::DegreeMode::Degree),
                  sw::UsageError);
  auto din = sw::top_k(d, 1, sw::DegreeMode::In);
  CHECK(din[0].external_id == "y");
  CHECK(din[0].value == 2);
  auto dout = sw::top_k(d, 3, sw::DegreeMode::Out);
  CHECK(dout[0].value == 1);
  CHECK(dout[2].value == 0);
}

TEST_CASE("cross table reports both graphs' values by shared id") {
  // Undirected degrees: n1=3, n2=2, n3=2, n4=1. Directed indegrees differ.
  auto primary = named_undirected(
      {{"n1", "n2"}, {"n1", "n3"}, {"n1", "n4"}, {"n2", "n3"}});
  auto cross = named_directed(
      {{"n2", "n1"}, {"n3", "n1"}, {"n1", "n2"}, {"n4", "n9"}});

  auto table = sw::cross_rank_table(primary, cross, 3);
  CHECK_FALSE(table.primary_directed);
  CHECK(table.cross_directed);
  CHECK(table.k == 3);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].external_id == "n1");
  CHECK(table.rows[0].primary_value == 3);
  CHECK(table.rows[0].cross_value == 2u);  // indegree in the cross graph
  CHECK(table.rows[1].external_id == "n2");
  CHECK(table.rows[1].cross_value == 1u);
  CHECK(table.rows[2].external_id == "n3");
  CHECK(table.rows[2].cross_value == 0u);
}

TEST_CASE("ids absent from the cross graph stay absent") {
  auto primary = named_undirected({{"a", "b"}, {"a", "c"}});
  auto cross = named_undirected({{"a", "z"}});
  auto table = sw::cross_rank_table(primary, cross, 3);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].external_id == "a");
  CHECK(table.rows[0].cross_value == 1u);
  // b and c don't exist over there; the table must say so, not invent 0.
  CHECK_FALSE(table.rows[1].cross_value.has_value());
  CHECK_FALSE(table.rows[2].cross_value.has_value());
  CHECK(table.rank_overlap == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("identical graphs give overlap 1 and equal columns") {
  sw::SplitMix64 rng(20260815);
  auto edges = oracles::random_undirected_edges(30, 0.2, rng);
  auto a = support::make_undirected(30, edges);
  auto b = support::make_undirected(30, edges);
  auto table = sw::cross_rank_table(a, b, 10);
  CHECK(table.rank_overlap == 1.0);
  for (const auto& row : table.rows) {
    REQUIRE(row.cross_value.has_value());
    CHECK(*row.cross_value == row.primary_value);
  }

  // k beyond N still reports overlap 1 over the rows that exist.
  auto clamped = sw::cross_rank_table(a, b, 1000);
  CHECK(clamped.rows.size() == 30);
  CHECK(clamped.rank_overlap == 1.0);

  CHECK_THROWS_AS((void)sw::cross_rank_table(a, b, 0), sw::UsageError);
}

TEST_CASE("directed primary ranks by indegree") {
  auto primary = named_directed({{"u", "w"}, {"v", "w"}, {"w", "v"}});
  auto cross = named_undirected({{"w", "u"}});
  auto table = sw::cross_rank_table(primary, cross, 2);
  CHECK(table.primary_directed);
  CHECK_FALSE(table.cross_directed);
  CHECK(table.rows[0].external_id == "w");  // indegree 2
  CHECK(table.rows[0].primary_value == 2);
  CHECK(table.rows[0].cross_value == 1u);  // degree over there
  CHECK(table.rows[1].external_id == "v");
  CHECK(table.rows[1].cross_value.has_value() == false);
}

TEST_CASE("compare rendering") {
  auto primary = named_undirected({{"a", "b"}, {"a", "c"}});
  auto cross = named_undirected({{"a", "z"}});
  auto table = sw::cross_rank_table(primary, cross, 2);
  CHECK(sw::compare_csv(table) ==
        "id,primary_value,cross_value\na,2,1\nb,1,None\n");

  auto j = nlohmann::json::parse(sw::compare_json(table));
  CHECK(j["direction"] == "degree-to-degree");
  CHECK(j["k"] == 2);
  CHECK(j["rank_overlap"] == doctest::Approx(0.5));
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["id"] == "a");
  CHECK(j["rows"][0]["primary_value"] == 2);
  CHECK(j["rows"][0]["cross_value"] == 1);
  CHECK(j["rows"][1]["cross_value"].is_null());

  auto d = named_directed({{"u", "w"}, {"v", "w"}});
  auto dj = nlohmann::json::parse(
      sw::compare_json(sw::cross_rank_table(d, primary, 1)));
  CHECK(dj["direction"] == "indegree-to-degree");

  // CSV fields with separators or quotes get quoted. The ids tie at value 1,
  // and '"' sorts before ','.
  auto odd = named_undirected({{"has,comma", "has\"quote"}});
  CHECK(sw::top_k_csv(sw::top_k(odd, 2)) ==
        "id,value\n\"has\"\"quote\",1\n\"has,comma\",1\n");
}
