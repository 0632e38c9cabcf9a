#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gp/error.hpp"
#include "gp/walls.hpp"

using gp::Cubulation;
using gp::FiniteGraph;
using gp::GraphProductSpec;
using gp::GroupDescriptor;
using gp::Orientation;
using gp::SpaceWithPartitions;

namespace {

using Walls = std::vector<std::vector<std::vector<int>>>;

GraphProductSpec make_spec(const std::vector<std::pair<int, int>>& edges,
                           std::vector<GroupDescriptor> groups) {
  gp::SimplicialGraph g;
  for (size_t i = 0; i < groups.size(); ++i)
    g.add_vertex(std::string(1, char('u' + i)));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return GraphProductSpec(std::move(g), std::move(groups));
}

GroupDescriptor c2() { return GroupDescriptor::cyclic(2); }

FiniteGraph cycle_graph(int n) {
  FiniteGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

FiniteGraph path_graph(int n) {
  FiniteGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

FiniteGraph complete_graph(int n) {
  FiniteGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

FiniteGraph star_graph(int leaves) {
  FiniteGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

FiniteGraph product_graph(const FiniteGraph& a, const FiniteGraph& b) {
  FiniteGraph g(a.size() * b.size());
  auto id = [&](int i, int j) { return i * b.size() + j; };
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      for (int i2 : a.neighbors(i))
        if (i2 > i) g.add_edge(id(i, j), id(i2, j));
      for (int j2 : b.neighbors(j))
        if (j2 > j) g.add_edge(id(i, j), id(i, j2));
    }
  return g;
}

bool triangle_free(const FiniteGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    for (int a : g.neighbors(v))
      for (int b : g.neighbors(v))
        if (a < b && g.adjacent(a, b)) return false;
  return true;
}

int differing_walls(const Orientation& a, const Orientation& b) {
  int count = 0;
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] != b[w]) ++count;
  return count;
}

// Distance formula and axiom checks that every cubulation must pass.
void check_cubulation(const SpaceWithPartitions& S, const Cubulation& c) {
  auto dist = c.graph.all_distances();
  for (int i = 0; i < c.graph.size(); ++i)
    for (int j = 0; j < c.graph.size(); ++j)
      CHECK(dist[i][j] == differing_walls(c.orientations[i], c.orientations[j]));
  for (int x = 0; x < S.ground(); ++x)
    for (int y = 0; y < S.ground(); ++y) {
      int separating = 0;
      for (int w = 0; w < S.wall_count(); ++w)
        if (S.sector_of(w, x) != S.sector_of(w, y)) ++separating;
      CHECK(dist[c.point_vertex[x]][c.point_vertex[y]] == separating);
    }
  CHECK(gp::check_axioms(c.graph).ok());
}

} // namespace

TEST_CASE("wall systems validate their partitions") {
  {
    SpaceWithPartitions S(3, {{{0}, {2, 1}}, {{0, 1}, {2}}});
    CHECK(S.ground() == 3);
    CHECK(S.wall_count() == 2);
    CHECK(S.wall(0) == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(S.sector_of(0, 2) == 1);
    CHECK(S.sector_of(1, 1) == 0);
    CHECK(S.distinguishable(0, 1));
  }
  {
    // Duplicate walls are legal and stay distinct.
    SpaceWithPartitions S(2, {{{0}, {1}}, {{0}, {1}}});
    CHECK(S.wall_count() == 2);
    CHECK_FALSE(S.distinguishable(0, 1));
  }
  {
    // The binary walls of a 3-clique's sector decomposition are
    // pairwise nested.
    SpaceWithPartitions S(3, {{{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}});
    CHECK(S.wall_count() == 3);
  }

  CHECK_THROWS_WITH_AS(SpaceWithPartitions(0, {}),
                       "ground set must be nonempty", gp::domain_error);
  CHECK_THROWS_WITH_AS(SpaceWithPartitions(2, {{{0, 1}}}),
                       "wall 0: needs at least two sectors", gp::domain_error);
  CHECK_THROWS_WITH_AS(SpaceWithPartitions(2, {{{0, 1}, {}}}),
                       "wall 0: empty sector", gp::domain_error);
  CHECK_THROWS_WITH_AS(SpaceWithPartitions(3, {{{0, 1}, {1, 2}}}),
                       "wall 0: sectors overlap", gp::domain_error);
  CHECK_THROWS_WITH_AS(SpaceWithPartitions(3, {{{0}, {1}}}),
                       "wall 0: sectors do not cover the ground set",
                       gp::domain_error);
  CHECK_THROWS_WITH_AS(SpaceWithPartitions(2, {{{0}, {1, 7}}}),
                       "wall 0: point out of range", gp::domain_error);
  // A full 3-part decomposition cannot coexist with a coarsening of
  // itself: no sector of the fine wall can absorb the leftover part.
  CHECK_THROWS_WITH_AS(
      SpaceWithPartitions(3, {{{0}, {1}, {2}}, {{0}, {1, 2}}}),
      "walls 0 and 1 violate the nesting condition", gp::domain_error);
}

TEST_CASE("principal orientations choose the sectors of a point") {
  SpaceWithPartitions S(3, {{{0}, {1, 2}}, {{0, 1}, {2}}});
  Orientation s0 = principal_orientation(S, 0);
  Orientation s1 = principal_orientation(S, 1);
  Orientation s2 = principal_orientation(S, 2);
  CHECK(s0 == Orientation{0, 0});
  CHECK(s1 == Orientation{1, 0});
  CHECK(s2 == Orientation{1, 1});
  CHECK(valid_orientation(S, s0));
  CHECK(valid_orientation(S, s1));
  CHECK(valid_orientation(S, s2));
  // Choosing {0} in the first wall forces {0,1} in the second.
  CHECK_FALSE(valid_orientation(S, {0, 1}));

  // Two principal orientations differ exactly on the separating walls.
  CHECK(differing_walls(s0, s1) == 1);
  CHECK(differing_walls(s0, s2) == 2);
  CHECK(differing_walls(s1, s2) == 1);

  SpaceWithPartitions empty(1, {});
  CHECK(principal_orientation(empty, 0).empty());

  CHECK_THROWS_AS(principal_orientation(S, 3), gp::domain_error);
  CHECK_THROWS_AS(valid_orientation(S, {0}), gp::domain_error);
  CHECK_THROWS_AS(valid_orientation(S, {0, 5}), gp::domain_error);
}

TEST_CASE("quasi-cubulation of small wall systems") {
  {
    // One wall with three sectors: every choice is valid, all pairs
    // adjacent.
    SpaceWithPartitions S(3, {{{0}, {1}, {2}}});
    Cubulation c = quasi_cubulate(S);
    REQUIRE(c.graph.size() == 3);
    CHECK(c.graph.edge_count() == 3);
    CHECK(gp::graphs_isomorphic(c.graph, complete_graph(3)));
    CHECK(c.graph.labels[c.point_vertex[1]] == "1");
    check_cubulation(S, c);
  }
  {
    // Two transverse binary walls quarter the square into a 4-cycle.
    SpaceWithPartitions S(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    Cubulation c = quasi_cubulate(S);
    REQUIRE(c.graph.size() == 4);
    CHECK(gp::graphs_isomorphic(c.graph, cycle_graph(4)));
    check_cubulation(S, c);
  }
  {
    // Two nested binary walls: the co-oriented choice is invalid,
    // leaving a path through the middle orientation.
    SpaceWithPartitions S(3, {{{0}, {1, 2}}, {{0, 1}, {2}}});
    Cubulation c = quasi_cubulate(S);
    REQUIRE(c.graph.size() == 3);
    CHECK(c.graph.edge_count() == 2);
    CHECK(gp::graphs_isomorphic(c.graph, path_graph(3)));
    CHECK(c.orientations[c.point_vertex[1]] == Orientation{1, 0});
    check_cubulation(S, c);
  }
  {
    SpaceWithPartitions S(2, {});
    Cubulation c = quasi_cubulate(S);
    CHECK(c.graph.size() == 1);
    CHECK(c.point_vertex == std::vector<int>{0, 0});
  }
  SpaceWithPartitions quad(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  CHECK_THROWS_WITH_AS(quasi_cubulate(quad, 2),
                       "cubulation exceeds the orientation cap",
                       gp::domain_error);
}

TEST_CASE("sector-walls of verified quasi-median graphs") {
  {
    SpaceWithPartitions S = sector_walls(complete_graph(2));
    CHECK(S.wall_count() == 1);
  }
  {
    SpaceWithPartitions S = sector_walls(complete_graph(3));
    CHECK(S.wall_count() == 3);
  }
  {
    SpaceWithPartitions S = sector_walls(cycle_graph(4));
    CHECK(S.wall_count() == 2);
  }
  {
    // K3 cubulates to the star on its three singleton sectors, with
    // the all-complement orientation in the middle; clique distances
    // double.
    Cubulation c = cubulate_sector_walls(complete_graph(3));
    REQUIRE(c.graph.size() == 4);
    CHECK(gp::graphs_isomorphic(c.graph, star_graph(3)));
    auto dist = c.graph.all_distances();
    CHECK(dist[c.point_vertex[0]][c.point_vertex[1]] == 2);
  }
  {
    Cubulation c = cubulate_sector_walls(complete_graph(2));
    CHECK(gp::graphs_isomorphic(c.graph, complete_graph(2)));
    CHECK(c.point_vertex[0] != c.point_vertex[1]);
  }
  {
    Cubulation c = cubulate_sector_walls(cycle_graph(4));
    CHECK(gp::graphs_isomorphic(c.graph, cycle_graph(4)));
  }

  // Median output and the 1-to-2 distance sandwich, with equality
  // exactly when every hyperplane is binary.
  std::vector<std::pair<FiniteGraph, bool>> cases;
  cases.push_back({cycle_graph(4), true});
  cases.push_back({path_graph(5), true});
  cases.push_back({product_graph(path_graph(3), path_graph(3)), true});
  cases.push_back({complete_graph(3), false});
  cases.push_back({complete_graph(4), false});
  cases.push_back({product_graph(complete_graph(3), complete_graph(2)), false});
  for (auto& [g, all_binary] : cases) {
    Cubulation c = cubulate_sector_walls(g);
    CHECK(triangle_free(c.graph));
    CHECK(gp::check_axioms(c.graph).ok());
    auto dg = g.all_distances();
    auto dc = c.graph.all_distances();
    bool tight = true;
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        int d = dg[x][y];
        int dsw = dc[c.point_vertex[x]][c.point_vertex[y]];
        CHECK(d <= dsw);
        CHECK(dsw <= 2 * d);
        if (d != dsw) tight = false;
      }
    CHECK(tight == all_binary);
  }
}

TEST_CASE("quasi-cubulating the full sector decompositions reproduces the graph") {
  CHECK(gp::self_cubulation_check(complete_graph(2)));
  CHECK(gp::self_cubulation_check(complete_graph(3)));
  CHECK(gp::self_cubulation_check(complete_graph(4)));
  CHECK(gp::self_cubulation_check(cycle_graph(4)));
  CHECK(gp::self_cubulation_check(path_graph(5)));
  CHECK(gp::self_cubulation_check(product_graph(complete_graph(3), complete_graph(2))));
  CHECK(gp::self_cubulation_check(product_graph(path_graph(3), path_graph(3))));
  FiniteGraph cube =
      product_graph(product_graph(complete_graph(2), complete_graph(2)),
                    complete_graph(2));
  CHECK(gp::self_cubulation_check(cube));
  CHECK(gp::self_cubulation_check(product_graph(complete_graph(3), complete_graph(3))));
}

TEST_CASE("tree factors of ball wall systems") {
  {
    // One C2 vertex: a single factor that is the ball itself.
    GraphProductSpec spec = make_spec({}, {c2()});
    gp::Ball b = gp::ball(spec, 1, 0);
    gp::TreeFactors t = tree_embedding(spec, b, {0});
    REQUIRE(t.factors.size() == 1);
    CHECK(gp::graphs_isomorphic(t.factors[0], complete_graph(2)));
    CHECK(tree_distance(t, 0, 1) == 1);
  }
  {
    // One C3 vertex: the 3-clique cubulates to a star, doubling the
    // in-clique distances but staying within the sandwich.
    GraphProductSpec spec = make_spec({}, {GroupDescriptor::cyclic(3)});
    gp::Ball b = gp::ball(spec, 1, 0);
    gp::TreeFactors t = tree_embedding(spec, b, {0});
    REQUIRE(t.factors.size() == 1);
    CHECK(gp::graphs_isomorphic(t.factors[0], star_graph(3)));
    CHECK(tree_distance(t, 0, 1) == 2);
  }
  {
    // Product of two C2 factors: each color contributes one segment
    // and the embedding is an isometry.
    GraphProductSpec spec = make_spec({{0, 1}}, {c2(), c2()});
    gp::Ball b = gp::ball(spec, 2, 0);
    gp::TreeFactors t = tree_embedding(spec, b, {0, 1});
    REQUIRE(t.factors.size() == 2);
    CHECK(gp::graphs_isomorphic(t.factors[0], complete_graph(2)));
    CHECK(gp::graphs_isomorphic(t.factors[1], complete_graph(2)));
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y)
        CHECK(tree_distance(t, x, y) ==
              gp::distance(spec, b.word(x), b.word(y)));
  }
  {
    // Free product of two C2 factors: the dihedral line splits into
    // two path factors, one per letter, and distances add up exactly.
    GraphProductSpec spec = make_spec({}, {c2(), c2()});
    gp::Ball b = gp::ball(spec, 3, 0);
    gp::TreeFactors t = tree_embedding(spec, b, {0, 1});
    REQUIRE(t.factors.size() == 2);
    CHECK(gp::graphs_isomorphic(t.factors[0], path_graph(4)));
    CHECK(gp::graphs_isomorphic(t.factors[1], path_graph(4)));
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y)
        CHECK(tree_distance(t, x, y) ==
              gp::distance(spec, b.word(x), b.word(y)));
  }
  {
    // Triangle of C2 factors needs three colors; the embedding stays
    // isometric away from the window boundary.
    GraphProductSpec spec =
        make_spec({{0, 1}, {1, 2}, {0, 2}}, {c2(), c2(), c2()});
    gp::Ball b = gp::ball(spec, 2, 0);
    gp::TreeFactors t = tree_embedding(spec, b, {0, 1, 2});
    REQUIRE(t.factors.size() == 3);
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y) {
        if (b.layer(x) > 1 || b.layer(y) > 1) continue;
        CHECK(tree_distance(t, x, y) ==
              gp::distance(spec, b.word(x), b.word(y)));
      }
    CHECK_THROWS_WITH_AS(tree_embedding(spec, b, {0, 0, 1}),
                         "coloring is not proper", gp::domain_error);
    CHECK_THROWS_AS(tree_embedding(spec, b, {0, 1}), gp::domain_error);
    CHECK_THROWS_AS(tree_embedding(spec, b, {0, -1, 1}), gp::domain_error);
  }
}

TEST_CASE("wall files parse and print canonically") {
  const std::string text =
      "point a\n"
      "point b\n"
      "point c\n"
      "wall a|b,c\n"
      "wall a,b|c\n";
  gp::WallFile f = gp::parse_walls(text);
  CHECK(f.points == std::vector<std::string>{"a", "b", "c"});
  CHECK(f.space.wall_count() == 2);
  CHECK(f.space.wall(0) == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(gp::format_walls(f) == text);

  gp::WallFile commented = gp::parse_walls(
      "# ground\npoint a\npoint b\n\nwall a|b # split\n");
  CHECK(commented.space.wall_count() == 1);

  CHECK_THROWS_WITH_AS(gp::parse_walls("point a\npoint a\n"),
                       "line 2: duplicate point 'a'", gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("wall a|b\n"),
                       "line 1: unknown point 'a'", gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("point a\npoint b\nwall a||b\n"),
                       "line 3: empty sector", gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("point a\npoint b\nwall a,,b|a\n"),
                       "line 3: empty point id", gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("frob a\n"),
                       "line 1: unknown directive 'frob'", gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("point a extra\n"),
                       "line 1: unexpected trailing input 'extra'",
                       gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("point\n"), "line 1: point needs an id",
                       gp::parse_error);
  CHECK_THROWS_WITH_AS(gp::parse_walls("point a\nwall\n"),
                       "line 2: wall needs sectors", gp::parse_error);
  CHECK_THROWS_AS(gp::parse_walls(""), gp::parse_error);
  // Per-wall partition defects surface as parse errors too.
  CHECK_THROWS_WITH_AS(gp::parse_walls("point a\npoint b\nwall a|a\n"),
                       "wall 0: sectors overlap", gp::parse_error);
}
