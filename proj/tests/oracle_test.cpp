// The exhaustive-scan oracle recomputes the hand-derived TINY5 values. Other
// suites freeze these numbers, so they are checked here first.

#include <doctest.h>

#include "support/oracle.hpp"
#include "support/tiny5.hpp"

using termheat::oracle::Ordinals;
using termheat::oracle::Ranked;
using termheat::oracle::Scan;

TEST_CASE("oracle reproduces TINY5 query matches") {
  Scan scan(termheat::testing::tiny5());
  CHECK(scan.vocabulary() == std::set<std::string>{"a", "b", "c"});
  CHECK(scan.match("Violence") == Ordinals{0, 1, 2, 4});
  CHECK(scan.match("peace note") == Ordinals{3});
  CHECK(scan.match("unseen").empty());
}

TEST_CASE("oracle reproduces TINY5 conjunction counts") {
  Scan scan(termheat::testing::tiny5());
  const Ordinals base{0, 1, 2, 4};
  CHECK(scan.filter(base, {"a"}) == Ordinals{0, 1, 2, 4});
  CHECK(scan.filter(base, {"a", "b"}) == Ordinals{0, 1});
  CHECK(scan.filter(base, {}) == base);
  // Term postings over the whole corpus.
  const Ordinals all{0, 1, 2, 3, 4};
  CHECK(scan.filter(all, {"a"}) == Ordinals{0, 1, 2, 4});
  CHECK(scan.filter(all, {"b"}) == Ordinals{0, 1, 3});
  CHECK(scan.filter(all, {"c"}) == Ordinals{0, 2, 3});
}

TEST_CASE("oracle reproduces TINY5 recommendations and second-order lists") {
  Scan scan(termheat::testing::tiny5());
  CHECK(scan.first_order("violence", 3, {}) == Ranked{{"a", 4}, {"b", 2}, {"c", 2}});
  CHECK(scan.first_order("violence", 1, {}) == Ranked{{"a", 4}});
  CHECK(scan.first_order("unseen", 10, {}).empty());

  const Ordinals qdocs{0, 1, 2, 4};
  CHECK(scan.second_order(qdocs, "a", 2, {}) == Ranked{{"b", 2}, {"c", 2}});
  CHECK(scan.second_order(qdocs, "b", 3, {}) == Ranked{{"a", 2}, {"c", 1}});
}

TEST_CASE("oracle reproduces the TINY5 k=2 m=2 heat map") {
  Scan scan(termheat::testing::tiny5());
  auto map = scan.heatmap("violence", 2, 2, {});
  CHECK(map.query_doc_count == 4);
  CHECK(map.columns == Ranked{{"a", 4}, {"b", 2}});
  // Column a contributes b, c; column b contributes a (c is already a row).
  CHECK(map.rows == Ranked{{"b", 2}, {"c", 2}, {"a", 4}});
  REQUIRE(map.cells.size() == 3);
  CHECK(map.cells[0][0]->count == 2);
  CHECK_FALSE(map.cells[0][1].has_value());
  CHECK(map.cells[1][0]->count == 2);
  CHECK(map.cells[1][1]->count == 1);
  CHECK_FALSE(map.cells[2][0].has_value());
  CHECK(map.cells[2][1]->count == 2);
  CHECK(map.cells[1][1]->color.hex == "#0000FF");
  CHECK(map.cells[0][0]->color.hex == "#FF0000");

  auto cross = scan.cells(Ordinals{0, 1, 2, 4}, {{"a", 4}, {"b", 2}}, {{"b", 2}, {"c", 2}});
  CHECK(cross[0][0] == 2u);
  CHECK_FALSE(cross[0][1].has_value());
  CHECK(cross[1][0] == 2u);
  CHECK(cross[1][1] == 1u);
}

TEST_CASE("oracle reproduces TINY5 drilldown pages") {
  Scan scan(termheat::testing::tiny5());
  auto cell = scan.drilldown("violence", {}, {"a", "b"}, 1, 10);
  CHECK(cell.total == 2);
  CHECK(cell.ids == std::vector<std::string>{"d1", "d2"});
  auto p1 = scan.drilldown("violence", {}, {}, 1, 2);
  auto p2 = scan.drilldown("violence", {}, {}, 2, 2);
  CHECK(p1.total == 4);
  CHECK(p1.ids == std::vector<std::string>{"d1", "d2"});
  CHECK(p2.ids == std::vector<std::string>{"d3", "d5"});
}

TEST_CASE("exact color evaluation at the named stops") {
  using termheat::oracle::color_exact;
  CHECK(color_exact(0, 1).hex == "#0000FF");
  CHECK(color_exact(0, 1).band == "cold");
  CHECK(color_exact(1, 2).hex == "#80FF00");
  CHECK(color_exact(1, 2).band == "warm");
  CHECK(color_exact(1, 1).hex == "#FF0000");
  CHECK(color_exact(1, 1).band == "hot");
  CHECK(color_exact(1, 3).hex == "#00FF00");
  CHECK(color_exact(2, 3).hex == "#FFFF00");
}
