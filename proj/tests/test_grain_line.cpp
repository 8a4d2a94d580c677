#include "doctest.h"

#include <string>
#include <vector>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/grain_line.hpp"
#include "farey/graph.hpp"
#include "farey/path.hpp"

using namespace farey;

namespace {
VertexId vid(int v) { return VertexId{v}; }

Path mk(std::initializer_list<int> ids) {
  std::vector<VertexId> vs;
  for (int i : ids) vs.push_back(vid(i));
  return Path(vs);
}

GrainLinePrefix two_path_prefix() {
  // x = 0, y = 1; line (x, y); private interiors 2 and 3.
  GrainLinePrefix p;
  p.x = vid(0);
  p.y = vid(1);
  p.order = {vid(0), vid(1)};
  p.paths = {mk({0, 2, 1}), mk({0, 3, 1})};
  return p;
}
}  // namespace

TEST_CASE("a minimal two-path prefix passes all conditions") {
  GrainLinePrefix p = two_path_prefix();
  PrefixReport report = validate_prefix(p);
  CHECK(report.pass());
  CHECK(report.summary() == "all conditions hold");
  CHECK(!report.note.empty());
}

TEST_CASE("each condition reports its own failure") {
  SUBCASE("shape: paths must run between the endpoints") {
    GrainLinePrefix p = two_path_prefix();
    p.y = vid(9);
    PrefixReport report = validate_prefix(p);
    CHECK(!report.shape.ok);
    CHECK(report.summary().find("shape:") != std::string::npos);
  }
  SUBCASE("shape: the ambient graph must carry every path") {
    GrainLinePrefix p = two_path_prefix();
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex(vid(i));
    g.add_edge(vid(0), vid(2));
    g.add_edge(vid(2), vid(1));
    // Edges 0-3 and 3-1 are missing.
    PrefixReport report = validate_prefix(p, &g);
    CHECK(!report.shape.ok);
    g.add_edge(vid(0), vid(3));
    g.add_edge(vid(3), vid(1));
    CHECK(validate_prefix(p, &g).pass());
  }
  SUBCASE("edge_disjoint: a repeated edge is charged to both paths") {
    GrainLinePrefix p = two_path_prefix();
    p.paths.push_back(p.paths.back());
    PrefixReport report = validate_prefix(p);
    CHECK(!report.edge_disjoint.ok);
    CHECK(report.edge_disjoint.failure.find("share edge") !=
          std::string::npos);
  }
  SUBCASE("final_segment: line vertices live on a final run of paths") {
    GrainLinePrefix p = two_path_prefix();
    p.order = {vid(0), vid(7), vid(1)};  // 7 lies on no path
    PrefixReport report = validate_prefix(p);
    CHECK(!report.final_segment.ok);
    CHECK(report.shape.ok);
  }
  SUBCASE("single_use: private vertices belong to one path") {
    GrainLinePrefix p = two_path_prefix();
    p.paths[1] = mk({0, 3, 2, 5, 1});  // 2 now on both paths, off the line
    PrefixReport report = validate_prefix(p);
    CHECK(!report.single_use.ok);
    CHECK(!report.overlap.ok);  // the intersection grew as well
    CHECK(report.edge_disjoint.ok);
  }
  SUBCASE("order_agreement: previously seen vertices keep the line order") {
    GrainLinePrefix p;
    p.x = vid(0);
    p.y = vid(1);
    p.order = {vid(0), vid(2), vid(3), vid(1)};
    p.paths = {mk({0, 10, 2, 11, 3, 12, 1}), mk({0, 13, 3, 14, 2, 15, 1})};
    PrefixReport report = validate_prefix(p);
    CHECK(!report.order_agreement.ok);
    CHECK(report.final_segment.ok);
    CHECK(report.edge_disjoint.ok);
  }
}

TEST_CASE("the blue sweeps of a halved build form a valid wild prefix") {
  HalvedFarey built = build_halved_farey(2);
  GrainLinePrefix p = blue_hamilton_prefix(built);
  CHECK(p.x == vid(0));
  CHECK(p.y == vid(1));
  CHECK(p.order ==
        std::vector<VertexId>{vid(0), vid(3), vid(2), vid(4), vid(1)});
  CHECK(p.paths.size() == 3);
  CHECK(p.start_index == 0);
  CHECK(validate_prefix(p, &built.graph).pass());
  CHECK(is_wildly_presented(p));
}

TEST_CASE("grains compares traces against the line on a final run") {
  GrainLinePrefix p = blue_hamilton_prefix(build_halved_farey(2));
  CHECK(!grains(p, 0, {vid(2)}));  // the root path misses 1/1
  CHECK(grains(p, 1, {vid(2)}));
  CHECK(grains(p, 0, {}));
  CHECK(grains(p, 0, {vid(0), vid(1)}));
  CHECK(grains(p, -3, {vid(0), vid(1)}));  // clamped to 0
  CHECK(grains(p, 5, {vid(2)}));           // vacuous: no paths that late
}

TEST_CASE("extraction distils the frozen two-round example") {
  std::vector<Path> supply{mk({0, 2, 1}), mk({0, 3, 1}), mk({0, 4, 2, 5, 1})};
  ExtractResult result = extract(supply, 2);
  CHECK(result.prefix.x == vid(0));
  CHECK(result.prefix.y == vid(1));
  // Round 2 groups the survivors into singleton classes and keeps the one
  // with the least signature, so the long path is discarded and the line
  // falls back to the endpoints.
  CHECK(result.prefix.order == std::vector<VertexId>{vid(0), vid(1)});
  CHECK(result.prefix.paths ==
        std::vector<Path>{mk({0, 2, 1}), mk({0, 3, 1})});
  CHECK(result.residual.empty());
  CHECK(validate_prefix(result.prefix).pass());

  CHECK_THROWS_AS(extract(supply, 3), SupplyError);
  CHECK_THROWS_AS(extract(supply, 0), InputError);
}

TEST_CASE("extraction accepts either orientation and rejects mismatches") {
  std::vector<Path> supply{mk({0, 2, 1}), mk({1, 3, 0}), mk({0, 4, 1})};
  ExtractResult result = extract(supply, 2);
  CHECK(result.prefix.paths[1] == mk({0, 3, 1}));  // reversed to match
  std::vector<Path> bad{mk({0, 2, 1}), mk({0, 3, 9})};
  CHECK_THROWS_AS(extract(bad, 1), InputError);
  std::vector<Path> bare{mk({0, 2, 1}), mk({0})};
  CHECK_THROWS_AS(extract(bare, 1), InputError);
}

TEST_CASE("extraction dies cleanly when the pool empties mid-run") {
  std::vector<Path> supply{mk({0, 2, 1}),       mk({0, 3, 1}),
                           mk({0, 4, 1}),       mk({0, 5, 2, 6, 1}),
                           mk({0, 7, 2, 8, 1})};
  // Round 2 splits 2/2 between signatures; the tie keeps the least
  // signature, leaving one path. Round 3 consumes it; round 4 starves.
  CHECK_THROWS_AS(extract(supply, 4), SupplyError);
  try {
    extract(supply, 4);
  } catch (const SupplyError& e) {
    CHECK(std::string(e.what()).find("after 3 of 4 rounds") !=
          std::string::npos);
  }
}

TEST_CASE("newly born vertices may sit misplaced on their birth path") {
  std::vector<Path> supply{mk({0, 4, 1}), mk({0, 2, 3, 1}),
                           mk({0, 5, 3, 6, 2, 7, 1})};
  ExtractResult result = extract(supply, 2);
  // The surviving path orders the newcomers 3 before 2.
  CHECK(result.prefix.order ==
        std::vector<VertexId>{vid(0), vid(3), vid(2), vid(1)});
  CHECK(result.prefix.paths ==
        std::vector<Path>{mk({0, 4, 1}), mk({0, 2, 3, 1})});
  CHECK(result.residual.size() == 1);
  // Valid even though path 1 carries its newborns against the line order.
  CHECK(validate_prefix(result.prefix).pass());

  SUBCASE("restriction to a reachable pair advances past the bad path") {
    GrainLinePrefix cut = restrict_to(result.prefix, vid(0), vid(2));
    CHECK(cut.x == vid(0));
    CHECK(cut.y == vid(2));
    CHECK(cut.start_index == 1);
    CHECK(cut.order == std::vector<VertexId>{vid(0), vid(3), vid(2)});
    CHECK(cut.paths == std::vector<Path>{mk({0, 2})});
  }
  SUBCASE("restriction can starve when a newborn sits out of order") {
    CHECK_THROWS_AS(restrict_to(result.prefix, vid(3), vid(2)), SupplyError);
  }
  SUBCASE("restriction endpoints must be ordered line vertices") {
    CHECK_THROWS_AS(restrict_to(result.prefix, vid(2), vid(3)), InputError);
    CHECK_THROWS_AS(restrict_to(result.prefix, vid(0), vid(9)), InputError);
    CHECK_THROWS_AS(restrict_to(result.prefix, vid(2), vid(2)), InputError);
  }
}

TEST_CASE("extraction over the order-6 sweeps recovers the order-3 line") {
  HalvedFarey big = build_halved_farey(6);
  ExtractResult result = extract(big.stage_paths, 4);
  CHECK(result.prefix.paths.size() == 4);
  CHECK(result.residual.size() == 3);
  REQUIRE(result.prefix.order.size() == 9);
  std::vector<Fraction> expected{
      Fraction(0, 1), Fraction(1, 3), Fraction(1, 2),
      Fraction(2, 3), Fraction(1, 1), Fraction(3, 2),
      Fraction(2, 1), Fraction(3, 1), Fraction::infinity()};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(big.graph.label(result.prefix.order[i]) == expected[i]);
  }
  // The chosen paths are exactly the first four sweeps, i.e. the order-3
  // build, and the whole prefix matches the order-3 blue prefix.
  HalvedFarey small = build_halved_farey(3);
  CHECK(result.prefix.paths == small.stage_paths);
  GrainLinePrefix direct = blue_hamilton_prefix(small);
  CHECK(result.prefix.order == direct.order);
  CHECK(validate_prefix(result.prefix, &big.graph).pass());
  CHECK(is_wildly_presented(result.prefix));
}

TEST_CASE("the wild pass keeps witnessed paths and re-reads the line") {
  GrainLinePrefix tame;
  tame.x = vid(0);
  tame.y = vid(1);
  tame.order = {vid(0), vid(1)};
  tame.paths = {mk({0, 5, 1}), mk({0, 6, 1})};
  CHECK(!is_wildly_presented(tame));
  GrainLinePrefix kept = wild_subsequence(tame);
  CHECK(kept.paths == std::vector<Path>{mk({0, 5, 1})});
  CHECK(kept.order == std::vector<VertexId>{vid(0), vid(1)});
  CHECK(kept.start_index == 0);

  GrainLinePrefix wild;
  wild.x = vid(0);
  wild.y = vid(1);
  wild.order = {vid(0), vid(2), vid(1)};
  wild.paths = {mk({0, 5, 1}), mk({0, 6, 2, 7, 1})};
  CHECK(is_wildly_presented(wild));
  GrainLinePrefix same = wild_subsequence(wild);
  CHECK(same.paths == wild.paths);
  CHECK(same.order == wild.order);

  GrainLinePrefix blue = blue_hamilton_prefix(build_halved_farey(4));
  CHECK(is_wildly_presented(blue));
  GrainLinePrefix fixed = wild_subsequence(blue);
  CHECK(fixed.paths == blue.paths);
  CHECK(fixed.order == blue.order);
}

TEST_CASE("dropping leading paths advances the start index") {
  HalvedFarey built = build_halved_farey(2);
  GrainLinePrefix p = blue_hamilton_prefix(built);
  GrainLinePrefix dropped = drop_leading(p, 1);
  CHECK(dropped.paths.size() == 2);
  CHECK(dropped.start_index == 1);
  CHECK(dropped.order == p.order);
  CHECK(validate_prefix(dropped, &built.graph).pass());
  GrainLinePrefix again = drop_leading(dropped, 1);
  CHECK(again.start_index == 2);
  CHECK_THROWS_AS(drop_leading(p, 3), InputError);
  CHECK_THROWS_AS(drop_leading(p, -1), InputError);
  CHECK(drop_leading(p, 0).paths == p.paths);
}
