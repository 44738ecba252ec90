#include <doctest.h>

#include <random>

#include "shiftforge/schreier.hpp"

using namespace shiftforge;

namespace {

GraphSpec three_cycle() {
  return GraphSpec::finite_explicit(
      {"0", "1", "2"}, {{"t", {{"0", "1"}, {"1", "2"}, {"2", "0"}}}});
}

}  // namespace

TEST_CASE("steps on catalogued graphs") {
  GraphSpec za = GraphSpec::cayley(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  CHECK(za.basepoint() == "1");
  CHECK(za.step("1", Letter("a", 1)) == "a");
  CHECK(za.step("a b", Letter("a", 1)) == "a^2 b");
  CHECK(za.step(za.step("1", Letter("a", 1)), Letter("a", -1)) == "1");

  GraphSpec f2 = GraphSpec::cayley(GroupOracle::free_group({"a", "b"}), {"a", "b"});
  CHECK(f2.step("a b", Letter("b", -1)) == "a");

  GraphSpec cyc = three_cycle();
  CHECK(cyc.step("2", Letter("t", 1)) == "0");
  CHECK(cyc.step("0", Letter("t", -1)) == "2");

  CHECK_THROWS_AS(cyc.step("0", Letter("x", 1)), SpecError);
}

TEST_CASE("kernel coset graphs") {
  WeightMap f;
  f.set("a", 0);
  f.set("t", 1);
  GraphSpec k = GraphSpec::kernel_cosets(GroupOracle::bs1n(3), {"a", "t"}, f);
  CHECK(k.basepoint() == "0");
  CHECK(k.step("0", Letter("t", 1)) == "1");
  CHECK(k.step("5", Letter("a", 1)) == "5");  // loop at every vertex
  CHECK(k.step("1", Letter("t", -1)) == "0");

  OrbitInfo loop = k.s_orbit("0", "a", 6);
  CHECK(loop.finite_cycle);
  CHECK(loop.cycle_length == 1);

  WeightMap bad;
  bad.set("a", 1);
  bad.set("t", 1);
  CHECK_THROWS_AS(GraphSpec::kernel_cosets(GroupOracle::bs1n(3), {"a", "t"}, bad),
                  SpecError);
}

TEST_CASE("balls") {
  GraphSpec f2 = GraphSpec::cayley(GroupOracle::free_group({"a", "b"}), {"a", "b"});
  CHECK(f2.ball("1", 1).nodes.size() == 5);
  CHECK(f2.ball("1", 2).nodes.size() == 17);

  GraphSpec za = GraphSpec::cayley(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  CHECK(za.ball("1", 1).nodes.size() == 5);
  CHECK(za.ball("1", 2).nodes.size() == 13);

  GraphSpec cyc = three_cycle();
  CHECK(cyc.ball("0", 2).nodes.size() == 3);

  Ball b = cyc.ball("0", 2);
  CHECK(b.edges.size() == 3);  // the three cycle edges, positive direction
}

TEST_CASE("single-letter orbits") {
  GraphSpec cyc = three_cycle();
  OrbitInfo o = cyc.s_orbit("0", "t", 8);
  CHECK(o.finite_cycle);
  CHECK(o.cycle_length == 3);
  CHECK(o.nodes.size() == 3);

  GraphSpec za = GraphSpec::cayley(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  OrbitInfo line = za.s_orbit("1", "a", 4);
  CHECK_FALSE(line.finite_cycle);
  CHECK(line.nodes.size() == 9);  // two-sided window segment

  // Orbits of distinct representatives are disjoint windows.
  OrbitInfo o1 = za.s_orbit("1", "a", 3);
  OrbitInfo o2 = za.s_orbit("b", "a", 3);
  for (const std::string& n1 : o1.nodes) {
    for (const std::string& n2 : o2.nodes) CHECK(n1 != n2);
  }
}

TEST_CASE("steps invert on random window nodes") {
  std::mt19937 rng(5);
  GraphSpec graphs[] = {
      GraphSpec::cayley(GroupOracle::free_group({"a", "b"}), {"a", "b"}),
      GraphSpec::cayley(GroupOracle::free_abelian({"a", "b"}), {"a", "b"}),
      three_cycle(),
  };
  for (const GraphSpec& g : graphs) {
    Ball b = g.ball(g.basepoint(), 3);
    std::uniform_int_distribution<std::size_t> pick(0, b.nodes.size() - 1);
    for (int i = 0; i < 100; ++i) {
      const std::string& v = b.nodes[pick(rng)];
      for (const std::string& s : g.letters()) {
        CHECK(g.step(g.step(v, Letter(s, 1)), Letter(s, -1)) == v);
        CHECK(g.step(g.step(v, Letter(s, -1)), Letter(s, 1)) == v);
      }
    }
  }
}

TEST_CASE("cayley labels round-trip through the oracle") {
  GraphSpec za = GraphSpec::cayley(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  Ball b = za.ball("1", 3);
  GroupOracle o = GroupOracle::free_abelian({"a", "b"});
  for (const std::string& label : b.nodes) {
    CHECK(o.normalize(Word::parse(label)).str() == label);
  }
}

TEST_CASE("lazy graphs") {
  // A line built lazily with integer labels.
  GraphSpec lazy = GraphSpec::lazy(
      {"t"},
      [](const std::string& node, const Letter& l) {
        return std::to_string(std::stoll(node) + l.sign);
      },
      "0", "line", true);
  CHECK(lazy.step("3", Letter("t", 1)) == "4");
  CHECK(lazy.ball("0", 2).nodes.size() == 5);
  CHECK_FALSE(lazy.s_orbit("0", "t", 4).finite_cycle);
}

TEST_CASE("finite graph validation and counts") {
  CHECK_THROWS_AS(GraphSpec::finite_explicit({"0", "1"}, {{"t", {{"0", "1"}}}}), SpecError);
  CHECK_THROWS_AS(
      GraphSpec::finite_explicit({"0", "1"}, {{"t", {{"0", "1"}, {"1", "1"}}}}),
      SpecError);

  GraphSpec cyc = three_cycle();
  CHECK(cyc.finite_edge_count() == 3);
  CHECK(cyc.finite_component_count() == 1);

  GraphSpec two_loops = GraphSpec::finite_explicit(
      {"0", "1"}, {{"t", {{"0", "0"}, {"1", "1"}}}});
  CHECK(two_loops.finite_component_count() == 2);
  CHECK(two_loops.finite_edge_count() == 2);
}

TEST_CASE("dot output") {
  GraphSpec cyc = three_cycle();
  std::string dot = ball_to_dot(cyc.ball("0", 2), "cycle", {{"t", "blue"}}, {"0"}, {});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("blue") != std::string::npos);
  CHECK(dot.find("lightgoldenrod") != std::string::npos);
}
