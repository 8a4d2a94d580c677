#include "doctest.h"

#include <string>
#include <vector>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/grain_line.hpp"
#include "farey/graph.hpp"
#include "farey/io.hpp"
#include "farey/splitter.hpp"

using namespace farey;

namespace {
VertexId vid(int v) { return VertexId{v}; }
Fraction fr(long long n, long long d) { return Fraction(n, d); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("vertex tokens prefer unique labels and fall back to ids") {
  Graph g;
  g.add_vertex(vid(0));
  g.add_vertex(vid(1));
  g.add_vertex(vid(2));
  g.set_label(vid(0), fr(1, 2));
  g.set_label(vid(1), fr(3, 4));
  g.set_label(vid(2), fr(3, 4));  // shared: both fall back to ids
  CHECK(vertex_token(g, vid(0)) == "1/2");
  CHECK(vertex_token(g, vid(1)) == "1");
  CHECK(vertex_token(g, vid(2)) == "2");

  CHECK(parse_vertex_token(g, "1/2") == vid(0));
  CHECK(parse_vertex_token(g, "2") == vid(2));
  CHECK_THROWS_AS(parse_vertex_token(g, "3/4"), InputError);  // ambiguous
  CHECK_THROWS_AS(parse_vertex_token(g, "5/9"), InputError);  // unknown label
  CHECK_THROWS_AS(parse_vertex_token(g, "9"), InputError);    // unknown id
  CHECK_THROWS_AS(parse_vertex_token(g, "2x"), InputError);   // trailing junk
  CHECK_THROWS_AS(parse_vertex_token(g, "abc"), InputError);
  CHECK_THROWS_AS(parse_vertex_token(g, ""), InputError);
}

TEST_CASE("graph JSON round trips byte for byte") {
  SUBCASE("coloured halved graph") {
    Graph g = build_halved_farey(2).graph;
    std::string text = emit_graph_json(g);
    Graph back = parse_graph_json(text);
    CHECK(back == g);
    CHECK(emit_graph_json(back) == text);
  }
  SUBCASE("uncoloured full graph") {
    Graph g = build_farey(3);
    std::string text = emit_graph_json(g);
    CHECK(parse_graph_json(text) == g);
  }
  SUBCASE("partially labelled, partially coloured graph") {
    Graph g;
    g.add_vertex(vid(0));
    g.add_vertex(vid(4));
    g.add_vertex(vid(7));
    g.add_edge(vid(0), vid(4));
    g.add_edge(vid(4), vid(7));
    g.set_label(vid(4), fr(-2, 3));
    g.set_colour(vid(0), vid(4), EdgeColour::black);
    std::string text = emit_graph_json(g);
    Graph back = parse_graph_json(text);
    CHECK(back == g);
    CHECK(emit_graph_json(back) == text);
  }
  SUBCASE("provenance is recorded in the metadata") {
    Graph g;
    g.add_vertex(vid(0));
    std::string text = emit_graph_json(g, "unit test");
    CHECK(contains(text, "\"provenance\": \"unit test\""));
    CHECK(parse_graph_json(text) == g);
  }
}

TEST_CASE("malformed JSON reports its position") {
  std::string text = "{\n  \"format\": \"farey-graph/1\",\n  broken\n}";
  try {
    parse_graph_json(text);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
    CHECK(contains(e.what(), "line 3"));
  }
}

TEST_CASE("schema violations are rejected as input errors") {
  CHECK_THROWS_AS(parse_graph_json("[1, 2]"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "wrong/9"})"), InputError);
  CHECK_THROWS_AS(
      parse_graph_json(R"({"format": "farey-graph/1", "edges": []})"),
      InputError);  // vertices missing
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": 0}, {"id": 0}], "edges": []})"),
                  InputError);  // duplicate vertex
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": 0}], "edges": [{"u": 0, "v": 5}]})"),
                  InputError);  // missing endpoint
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": 0}, {"id": 1}],
      "edges": [{"u": 0, "v": 1}, {"u": 1, "v": 0}]})"),
                  InputError);  // duplicate edge
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": 0}, {"id": 1}],
      "edges": [{"u": 0, "v": 1, "colour": "green"}]})"),
                  InputError);  // unknown colour
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": 0, "label": "x/y"}], "edges": []})"),
                  InputError);  // malformed label
  CHECK_THROWS_AS(parse_graph_json(R"({"format": "farey-graph/1",
      "vertices": [{"id": "zero"}], "edges": []})"),
                  InputError);  // non-integer id

  // Metadata is optional on input.
  Graph g = parse_graph_json(
      R"({"format": "farey-graph/1", "vertices": [{"id": 0}], "edges": []})");
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("path lists and prefixes survive the round trip") {
  Graph g = build_farey(3);
  std::vector<Path> rows = canonical_paths(g, vid(0), vid(1), 3);
  std::string text = emit_path_list_json(g, rows);
  CHECK(contains(text, "\"path-list/1\""));
  CHECK(contains(text, "\"1/2\""));  // tokens resolve through labels
  CHECK(parse_path_list_json(g, text) == rows);

  HalvedFarey built = build_halved_farey(3);
  GrainLinePrefix p = blue_hamilton_prefix(built);
  std::string ptext = emit_prefix_json(built.graph, p);
  CHECK(contains(ptext, "\"grain-prefix/1\""));
  GrainLinePrefix back = parse_prefix_json(built.graph, ptext);
  CHECK(back.x == p.x);
  CHECK(back.y == p.y);
  CHECK(back.order == p.order);
  CHECK(back.paths == p.paths);
  CHECK(back.start_index == p.start_index);
  CHECK(emit_prefix_json(built.graph, back) == ptext);

  CHECK_THROWS_AS(parse_path_list_json(g, R"({"format": "path-list/1",
      "paths": [[]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_path_list_json(g, R"({"format": "grain-prefix/1",
      "paths": []})"),
                  InputError);
}

TEST_CASE("split results serialize with label tokens") {
  Graph g = build_farey(4);
  CanonicalFareySupply supply;
  SplitResult r = split_step(g, vid(0), vid(1), supply, 4);
  std::string text = emit_split_json(g, r);
  CHECK(contains(text, "\"split-result/1\""));
  CHECK(contains(text, "\"spine\""));
  CHECK(contains(text, "\"1/1\""));
  CHECK(contains(text, "\"-1/1\""));  // the far separator vertex
  CHECK(contains(text, "\"prefix_u\""));
  CHECK(contains(text, "\"contracted_v\""));
}

TEST_CASE("dot output lists labelled vertices and blue edges") {
  Graph g = build_halved_farey(1).graph;
  std::string dot = emit_dot(g);
  CHECK(contains(dot, "graph farey {"));
  CHECK(contains(dot, "0 [label=\"0/1\"];"));
  CHECK(contains(dot, "2 [label=\"1/1\"];"));
  CHECK(contains(dot, "[color=blue]"));
  CHECK(contains(dot, "0 -- 1;"));  // the black root edge carries no colour
  CHECK(dot.back() == '\n');
}

TEST_CASE("svg output is deterministic and styled") {
  Graph g = build_halved_farey(2).graph;
  std::string svg = emit_svg_circle(g);
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "fill=\"white\""));
  CHECK(contains(svg, "#2060c0"));  // blue edges keep their colour
  CHECK(contains(svg, "<path"));    // circular-arc edges
  CHECK(contains(svg, ">1/2<"));    // label text
  CHECK(svg == emit_svg_circle(g));

  std::string chords = emit_svg_circle(g, false);
  CHECK(!contains(chords, "<path"));
  CHECK(contains(chords, "<line"));

  // Negative labels push the layout onto the full circle; the far side
  // appears with its own label.
  std::string full = emit_svg_circle(build_farey(2));
  CHECK(contains(full, ">-1/1<"));

  Graph plain;
  plain.add_vertex(vid(3));
  plain.add_vertex(vid(8));
  plain.add_edge(vid(3), vid(8));
  std::string byid = emit_svg_circle(plain);
  CHECK(contains(byid, ">3<"));
  CHECK(contains(byid, ">8<"));
}
