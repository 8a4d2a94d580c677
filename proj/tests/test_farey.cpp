#include "doctest.h"

#include <set>
#include <vector>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/graph.hpp"
#include "farey/path.hpp"

using namespace farey;

namespace {
VertexId vid(int v) { return VertexId{v}; }
Fraction fr(long long n, long long d) { return Fraction(n, d); }

std::size_t count_blue(const Graph& g) {
  std::size_t blue = 0;
  for (const auto& [e, c] : g.colours()) {
    if (c == EdgeColour::blue) blue += 1;
  }
  return blue;
}
}  // namespace

TEST_CASE("the order-0 halved graph is the blue root edge") {
  HalvedFarey built = build_halved_farey(0);
  CHECK(built.graph.vertex_count() == 2);
  CHECK(built.graph.edge_count() == 1);
  CHECK(built.graph.colour(vid(0), vid(1)) == EdgeColour::blue);
  CHECK(built.graph.label(vid(0)) == fr(0, 1));
  CHECK(built.graph.label(vid(1)) == Fraction::infinity());
  REQUIRE(built.stage_paths.size() == 1);
  CHECK(built.stage_paths[0] == Path({vid(0), vid(1)}));
}

TEST_CASE("the order-2 halved graph has frozen ids, labels and sweep") {
  HalvedFarey built = build_halved_farey(2);
  const Graph& g = built.graph;
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 7);
  CHECK(count_blue(g) == 4);
  CHECK(g.label(vid(0)) == fr(0, 1));
  CHECK(g.label(vid(1)) == Fraction::infinity());
  CHECK(g.label(vid(2)) == fr(1, 1));
  CHECK(g.label(vid(3)) == fr(1, 2));
  CHECK(g.label(vid(4)) == fr(2, 1));
  REQUIRE(built.stage_paths.size() == 3);
  CHECK(built.stage_paths[2] ==
        Path({vid(0), vid(3), vid(2), vid(4), vid(1)}));
  // The superseded stage edges turn black; the newest sweep is blue.
  CHECK(g.colour(vid(0), vid(1)) == EdgeColour::black);
  CHECK(g.colour(vid(0), vid(2)) == EdgeColour::black);
  CHECK(g.colour(vid(0), vid(3)) == EdgeColour::blue);
  CHECK(g.colour(vid(3), vid(2)) == EdgeColour::blue);
  CHECK(g.fully_coloured());
}

TEST_CASE("the order-4 halved graph has the frozen counts") {
  HalvedFarey built = build_halved_farey(4);
  CHECK(built.graph.vertex_count() == 17);
  CHECK(built.graph.edge_count() == 31);
  CHECK(count_blue(built.graph) == 16);
  const Path& sweep = built.stage_paths.back();
  CHECK(sweep.size() == 17);
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
    CHECK(built.graph.label(sweep.vertices()[i]) <
          built.graph.label(sweep.vertices()[i + 1]));
  }
}

TEST_CASE("the full graph glues a negative copy onto the roots") {
  Graph g = build_farey(3);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 29);
  CHECK(g.colours().empty());
  CHECK(g.label(vid(0)) == fr(0, 1));
  CHECK(g.label(vid(1)) == Fraction::infinity());
  CHECK(g.label(vid(2)) == fr(1, 1));
  // The negative copy's first interior vertex follows the positive copy.
  CHECK(g.label(vid(9)) == fr(-1, 1));
  std::set<Fraction> labels;
  for (const auto& [v, f] : g.labels()) labels.insert(f);
  CHECK(labels.contains(fr(-1, 2)));
  CHECK(labels.contains(fr(-2, 1)));
  CHECK(labels.contains(fr(2, 3)));
  CHECK(labels.size() == 16);
  CHECK(g.has_edge(vid(0), vid(9)));  // 0/1 adjacent to -1/1
  CHECK(g.has_edge(vid(1), vid(9)));  // 1/0 adjacent to -1/1
}

TEST_CASE("builders reject orders outside the supported window") {
  CHECK_THROWS_AS(build_halved_farey(-1), InputError);
  CHECK_THROWS_AS(build_halved_farey(17), InputError);
  CHECK_THROWS_AS(build_farey(-1), InputError);
  CHECK_THROWS_AS(build_farey(17), InputError);
}

TEST_CASE("the determinant builder connects exactly the adjacent pairs") {
  Graph triangle = build_determinant_graph(
      {fr(0, 1), fr(1, 1), Fraction::infinity()});
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle.label(vid(0)) == fr(0, 1));
  CHECK(triangle.label(vid(1)) == fr(1, 1));
  CHECK(triangle.label(vid(2)) == Fraction::infinity());

  Graph sparse = build_determinant_graph({fr(0, 1), fr(1, 3), fr(2, 3)});
  // 0/1-1/3 has determinant 1; 1/3-2/3 has determinant 3; 0/1-2/3 has 2.
  CHECK(sparse.edge_count() == 1);

  Graph empty = build_determinant_graph({});
  CHECK(empty.vertex_count() == 0);
}

TEST_CASE("the determinant builder rebuilds the order-2 full graph") {
  Graph recursive = build_farey(2);
  std::set<Fraction> labels;
  for (const auto& [v, f] : recursive.labels()) labels.insert(f);
  Graph determinant = build_determinant_graph(labels);
  CHECK(determinant.vertex_count() == recursive.vertex_count());
  CHECK(determinant.edge_count() == recursive.edge_count());
  for (const Edge& e : recursive.edges()) {
    VertexId a = *determinant.vertex_with_label(recursive.label(e.a));
    VertexId b = *determinant.vertex_with_label(recursive.label(e.b));
    CHECK(determinant.has_edge(a, b));
  }
}

TEST_CASE("canonical label rows interleave mediants") {
  std::vector<std::vector<Fraction>> rows =
      canonical_label_paths(fr(0, 1), Fraction::infinity(), 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] ==
        std::vector<Fraction>{fr(0, 1), fr(1, 1), Fraction::infinity()});
  CHECK(rows[1] == std::vector<Fraction>{fr(0, 1), fr(1, 2), fr(1, 1),
                                         fr(2, 1), Fraction::infinity()});
  CHECK(rows[2].size() == 9);
  CHECK(rows[2][1] == fr(1, 3));
  CHECK(rows[2][7] == fr(3, 1));
  CHECK(canonical_label_paths(fr(0, 1), fr(1, 1), 0).empty());
  CHECK_THROWS_AS(canonical_label_paths(fr(0, 1), fr(2, 1), 1), InputError);
}

TEST_CASE("canonical rows resolve to vertex paths when the graph has them") {
  Graph g = build_farey(2);
  std::vector<Path> rows = canonical_paths(g, vid(0), vid(1), 2);
  REQUIRE(rows.size() == 2);
  for (const Path& row : rows) {
    CHECK(row.front() == vid(0));
    CHECK(row.back() == vid(1));
    CHECK(row.lies_in(g));
  }
  CHECK(rows[0].size() == 3);
  CHECK(rows[1].size() == 5);
  // Row 3 would need a vertex labelled 1/3, which the order-2 graph lacks.
  CHECK_THROWS_AS(canonical_paths(g, vid(0), vid(1), 3), SupplyError);
}

TEST_CASE("the hub gadget glues full copies across two hub classes") {
  Graph flat = build_k23_with_farey_edges(0);
  CHECK(flat.vertex_count() == 5);
  CHECK(flat.edge_count() == 6);

  Graph gadget = build_k23_with_farey_edges(1);
  CHECK(gadget.vertex_count() == 17);
  CHECK(gadget.edge_count() == 30);
  for (int hub = 0; hub < 2; ++hub) {
    CHECK(gadget.label(vid(hub)) == fr(0, 1));
  }
  for (int hub = 2; hub < 5; ++hub) {
    CHECK(gadget.label(vid(hub)) == Fraction::infinity());
  }
  // Every hub pair keeps its direct edge (the copy's root edge).
  for (int a = 0; a < 2; ++a) {
    for (int b = 2; b < 5; ++b) {
      CHECK(gadget.has_edge(vid(a), vid(b)));
    }
  }
  // No edges inside a hub class.
  CHECK(!gadget.has_edge(vid(0), vid(1)));
  CHECK(!gadget.has_edge(vid(2), vid(3)));

  Graph deeper = build_k23_with_farey_edges(2);
  CHECK(deeper.vertex_count() == 41);
}
