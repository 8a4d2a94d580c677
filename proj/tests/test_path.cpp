#include "doctest.h"

#include "farey/errors.hpp"
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
}  // namespace

TEST_CASE("paths reject empty and repeating sequences") {
  CHECK_THROWS_AS(Path(std::vector<VertexId>{}), InputError);
  CHECK_THROWS_AS(mk({0, 1, 0}), InputError);
  CHECK(mk({0}).size() == 1);
  CHECK(mk({0}).length() == 0);
  CHECK(mk({0, 1, 2}).length() == 2);
}

TEST_CASE("basic accessors") {
  Path p = mk({3, 1, 4, 2});
  CHECK(p.front() == vid(3));
  CHECK(p.back() == vid(2));
  CHECK(p.contains(vid(4)));
  CHECK(!p.contains(vid(9)));
  CHECK(p.position(vid(4)) == std::size_t{2});
  CHECK(!p.position(vid(9)).has_value());
  CHECK(p.interior() == std::vector<VertexId>{vid(1), vid(4)});
  CHECK(p.edges().size() == 3);
  CHECK(p.edges()[0] == Edge(vid(3), vid(1)));
}

TEST_CASE("subpath orients itself from its first argument") {
  Path p = mk({0, 5, 6, 7, 1});
  Path fwd = p.subpath(vid(5), vid(7));
  CHECK(fwd.vertices() == mk({5, 6, 7}).vertices());
  Path bwd = p.subpath(vid(7), vid(5));
  CHECK(bwd.vertices() == mk({7, 6, 5}).vertices());
  CHECK(p.subpath(vid(0), vid(0)).size() == 1);
  CHECK_THROWS_AS(p.subpath(vid(0), vid(9)), InputError);
}

TEST_CASE("drop operations keep at least one vertex") {
  Path p = mk({0, 5, 6, 1});
  CHECK(p.drop_front(1).vertices() == mk({5, 6, 1}).vertices());
  CHECK(p.drop_back(2).vertices() == mk({0, 5}).vertices());
  CHECK(p.drop_front(0).vertices() == p.vertices());
  CHECK_THROWS_AS(p.drop_front(4), InputError);
  CHECK_THROWS_AS(p.drop_back(4), InputError);
}

TEST_CASE("reversal and containment in a graph") {
  Path p = mk({0, 5, 1});
  CHECK(p.reversed().vertices() == mk({1, 5, 0}).vertices());
  Graph g;
  for (int i : {0, 1, 5}) g.add_vertex(vid(i));
  g.add_edge(vid(0), vid(5));
  CHECK(!p.lies_in(g));  // edge 5-1 missing
  g.add_edge(vid(5), vid(1));
  CHECK(p.lies_in(g));
  g.remove_vertex(vid(5));
  CHECK(!p.lies_in(g));
}

TEST_CASE("oriented_like flips the second path to match the first") {
  Path anchor = mk({0, 2, 1});
  Path same = mk({0, 3, 1});
  Path flipped = mk({1, 4, 0});
  CHECK(oriented_like(anchor, same).front() == vid(0));
  CHECK(oriented_like(anchor, flipped).front() == vid(0));
  CHECK(oriented_like(anchor, flipped).vertices() == mk({0, 4, 1}).vertices());
  CHECK_THROWS_AS(oriented_like(anchor, mk({0, 5, 9})), InputError);
}
