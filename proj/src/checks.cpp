#include "farey/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "farey/builders.hpp"
#include "farey/errors.hpp"
#include "farey/flow.hpp"
#include "farey/grain_line.hpp"
#include "farey/graph_ops.hpp"
#include "farey/io.hpp"
#include "farey/isomorphism.hpp"
#include "farey/minor_map.hpp"
#include "farey/minor_search.hpp"
#include "farey/splitter.hpp"

namespace farey {
namespace {

// First failure wins; `detail` keeps the successful summary otherwise.
struct CheckLog {
  bool ok = true;
  std::string failure;

  void require(bool condition, const std::string& message) {
    if (ok && !condition) {
      ok = false;
      failure = message;
    }
  }
};

CriterionResult finish(int number, const std::string& name, const CheckLog& log,
                       const std::string& success_detail) {
  return CriterionResult{number, name, log.ok,
                         log.ok ? success_detail : log.failure};
}

Fraction fr(long long n, long long d) { return Fraction(n, d); }

Graph complete_graph(int k) {
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex(VertexId{i});
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) g.add_edge(VertexId{i}, VertexId{j});
  }
  return g;
}

Graph complete_bipartite_2_3() {
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex(VertexId{i});
  for (int i = 0; i < 2; ++i) {
    for (int j = 2; j < 5; ++j) g.add_edge(VertexId{i}, VertexId{j});
  }
  return g;
}

std::set<Fraction> label_set(const Graph& g) {
  std::set<Fraction> labels;
  for (const auto& [v, f] : g.labels()) labels.insert(f);
  return labels;
}

std::size_t blue_count(const Graph& g) {
  std::size_t count = 0;
  for (const auto& [e, c] : g.colours()) {
    if (c == EdgeColour::blue) count += 1;
  }
  return count;
}

long long pow2(int e) { return 1LL << e; }

// ---------------------------------------------------------------------------
// Criterion 1: builder counts and the blue sweep.

CriterionResult criterion_counts() {
  CheckLog log;
  for (int n = 0; n <= 12 && log.ok; ++n) {
    HalvedFarey built = build_halved_farey(n);
    const Graph& g = built.graph;
    std::ostringstream tag;
    tag << "halved order " << n << ": ";
    log.require(static_cast<long long>(g.vertex_count()) == pow2(n) + 1,
                tag.str() + "vertex count is not 2^n + 1");
    log.require(static_cast<long long>(g.edge_count()) == pow2(n + 1) - 1,
                tag.str() + "edge count is not 2^(n+1) - 1");
    log.require(static_cast<long long>(blue_count(g)) == pow2(n),
                tag.str() + "blue edge count is not 2^n");
    log.require(g.fully_coloured(), tag.str() + "some edge has no colour");

    const Path& sweep = built.stage_paths.back();
    log.require(sweep.size() == g.vertex_count(),
                tag.str() + "the newest sweep does not cover every vertex");
    log.require(sweep.front() == VertexId{0} && sweep.back() == VertexId{1},
                tag.str() + "the newest sweep does not join the roots");
    bool all_blue = true;
    for (const Edge& e : sweep.edges()) {
      all_blue = all_blue && g.colour(e.a, e.b) == EdgeColour::blue;
    }
    log.require(all_blue, tag.str() + "a sweep edge is not blue");
    bool ascending = true;
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
      ascending = ascending && g.label(sweep.vertices()[i]) <
                                   g.label(sweep.vertices()[i + 1]);
    }
    log.require(ascending, tag.str() + "sweep labels are not ascending");
  }
  for (int n = 0; n <= 12 && log.ok; ++n) {
    Graph g = build_farey(n);
    std::ostringstream tag;
    tag << "full order " << n << ": ";
    log.require(static_cast<long long>(g.vertex_count()) == pow2(n + 1),
                tag.str() + "vertex count is not 2^(n+1)");
    log.require(static_cast<long long>(g.edge_count()) == pow2(n + 2) - 3,
                tag.str() + "edge count is not 2^(n+2) - 3");
    log.require(g.labels().size() == g.vertex_count(),
                tag.str() + "not every vertex is labelled");
    log.require(g.colours().empty(), tag.str() + "unexpected edge colours");
  }
  return finish(1, "builder counts and blue sweep", log,
                "orders 0..12: halved graphs have 2^n+1 vertices, 2^(n+1)-1 "
                "edges and a blue root-to-root sweep in ascending label "
                "order; full graphs have 2^(n+1) vertices and 2^(n+2)-3 "
                "edges");
}

// ---------------------------------------------------------------------------
// Criterion 8: root connectivity and canonical separators.

CriterionResult criterion_connectivity() {
  CheckLog log;
  for (int n = 1; n <= 10 && log.ok; ++n) {
    std::ostringstream tag;
    tag << "order " << n << ": ";
    {
      Graph g = without_edge(build_halved_farey(n).graph, VertexId{0},
                             VertexId{1});
      EdgeDisjointPaths flow = max_edge_disjoint_paths(g, VertexId{0},
                                                       VertexId{1});
      log.require(flow.count == n,
                  tag.str() + "halved-minus-root-edge flow is not the order");
      log.require(static_cast<int>(flow.paths.size()) == flow.count,
                  tag.str() + "flow decomposition path count mismatch");
      std::set<Edge> seen;
      bool disjoint_and_placed = true;
      for (const Path& p : flow.paths) {
        disjoint_and_placed = disjoint_and_placed && p.lies_in(g) &&
                              p.front() == VertexId{0} &&
                              p.back() == VertexId{1};
        for (const Edge& e : p.edges()) {
          disjoint_and_placed = disjoint_and_placed && seen.insert(e).second;
        }
      }
      log.require(disjoint_and_placed,
                  tag.str() + "flow decomposition is not an edge-disjoint "
                              "root-to-root family");
      VertexSet cut = min_vertex_separator(g, VertexId{0}, VertexId{1});
      VertexSet expected{*g.vertex_with_label(fr(1, 1))};
      log.require(cut == expected,
                  tag.str() + "halved separator is not the 1/1 vertex");
    }
    {
      Graph g = without_edge(build_farey(n), VertexId{0}, VertexId{1});
      EdgeDisjointPaths flow = max_edge_disjoint_paths(g, VertexId{0},
                                                       VertexId{1});
      log.require(flow.count == 2 * n,
                  tag.str() + "full-minus-root-edge flow is not twice the "
                              "order");
      VertexSet cut = min_vertex_separator(g, VertexId{0}, VertexId{1});
      VertexSet expected{*g.vertex_with_label(fr(1, 1)),
                         *g.vertex_with_label(fr(-1, 1))};
      log.require(cut == expected,
                  tag.str() + "full separator is not the 1/1, -1/1 pair");
    }
  }
  return finish(8, "root connectivity and canonical separators", log,
                "orders 1..10: removing the root edge leaves n edge-disjoint "
                "root paths in the halved graph (separator 1/1) and 2n in "
                "the full graph (separator 1/1, -1/1), each with a verified "
                "decomposition");
}

// ---------------------------------------------------------------------------
// Criterion 2: the determinant description builds the same graphs.

CriterionResult criterion_equivalence() {
  CheckLog log;
  for (int n = 0; n <= 8 && log.ok; ++n) {
    Graph recursive = build_farey(n);
    Graph determinant = build_determinant_graph(label_set(recursive));
    std::ostringstream tag;
    tag << "order " << n << ": ";
    log.require(recursive.vertex_count() == determinant.vertex_count(),
                tag.str() + "vertex counts differ");
    log.require(recursive.edge_count() == determinant.edge_count(),
                tag.str() + "edge counts differ");
    std::map<Fraction, VertexId> to_det;
    for (const auto& [v, f] : determinant.labels()) to_det.emplace(f, v);
    bool edges_match = true;
    for (const Edge& e : recursive.edges()) {
      edges_match = edges_match &&
                    determinant.has_edge(to_det.at(recursive.label(e.a)),
                                         to_det.at(recursive.label(e.b)));
    }
    log.require(edges_match,
                tag.str() + "a recursive edge has determinant above 1");
    bool labels_unique = to_det.size() == determinant.vertex_count();
    log.require(labels_unique, tag.str() + "labels are not unique");
  }
  return finish(2, "determinant description matches the recursive builder",
                log,
                "orders 0..8: the graph on the same label set with edges "
                "exactly at determinant 1 equals the recursive full graph "
                "under the label bijection");
}

// ---------------------------------------------------------------------------
// Criterion 11: serialization round trips.

CriterionResult criterion_serialization() {
  CheckLog log;

  std::vector<Graph> graphs;
  graphs.push_back(build_halved_farey(3).graph);
  graphs.push_back(build_farey(3));
  graphs.push_back(build_determinant_graph(
      {fr(0, 1), fr(1, 2), fr(1, 1), fr(2, 1), Fraction::infinity()}));
  {
    Graph mixed;
    mixed.add_vertex(VertexId{0});
    mixed.add_vertex(VertexId{5});
    mixed.add_vertex(VertexId{9});
    mixed.set_label(VertexId{0}, fr(-2, 3));
    mixed.add_edge(VertexId{0}, VertexId{5});
    mixed.add_edge(VertexId{5}, VertexId{9});
    mixed.set_colour(VertexId{5}, VertexId{9}, EdgeColour::black);
    graphs.push_back(std::move(mixed));
  }
  for (std::size_t i = 0; i < graphs.size() && log.ok; ++i) {
    std::string text = emit_graph_json(graphs[i], "round-trip check");
    Graph back = parse_graph_json(text);
    log.require(back == graphs[i],
                "graph " + std::to_string(i) + " does not survive the "
                "JSON round trip");
    log.require(emit_graph_json(back, "round-trip check") == text,
                "graph " + std::to_string(i) + " re-emission differs");
  }

  if (log.ok) {
    Graph g = build_farey(3);
    std::vector<Path> rows =
        canonical_paths(g, VertexId{0}, VertexId{1}, 3);
    std::string text = emit_path_list_json(g, rows);
    std::vector<Path> back = parse_path_list_json(g, text);
    log.require(back == rows, "path list does not survive the round trip");
  }

  if (log.ok) {
    HalvedFarey built = build_halved_farey(3);
    GrainLinePrefix p = blue_hamilton_prefix(built);
    std::string text = emit_prefix_json(built.graph, p);
    GrainLinePrefix back = parse_prefix_json(built.graph, text);
    log.require(back.x == p.x && back.y == p.y && back.order == p.order &&
                    back.paths == p.paths &&
                    back.start_index == p.start_index,
                "grain prefix does not survive the round trip");
  }

  if (log.ok) {
    bool caught = false;
    int line = 0;
    int column = 0;
    try {
      parse_graph_json("{\n  \"format\": \"farey-graph/1\",\n  broken\n}");
    } catch (const ParseError& e) {
      caught = true;
      line = e.line();
      column = e.column();
    }
    log.require(caught && line == 3,
                "malformed JSON did not raise a positioned parse error");
    log.require(column > 0, "parse error lost its column");
  }

  if (log.ok) {
    Graph g = build_farey(2);
    std::string dot1 = emit_dot(g);
    std::string svg1 = emit_svg_circle(g);
    log.require(dot1 == emit_dot(g) && svg1 == emit_svg_circle(g),
                "text renderings are not deterministic");
    log.require(svg1.find("<path") != std::string::npos,
                "circular rendering lost its arcs");
    std::string svg_half = emit_svg_circle(build_halved_farey(2).graph);
    log.require(svg_half.find("#2060c0") != std::string::npos,
                "blue edges are not marked in the rendering");
  }

  return finish(11, "serialization round trips", log,
                "graph, path-list and grain-prefix JSON survive parse/emit "
                "round trips byte-identically; malformed JSON raises "
                "positioned errors; dot and SVG output is deterministic");
}

// ---------------------------------------------------------------------------
// Criterion 3: the blue sweeps form a valid, wildly presented prefix.

CriterionResult criterion_blue_prefix() {
  CheckLog log;
  for (int n = 0; n <= 8 && log.ok; ++n) {
    HalvedFarey built = build_halved_farey(n);
    GrainLinePrefix p = blue_hamilton_prefix(built);
    PrefixReport report = validate_prefix(p, &built.graph);
    std::ostringstream tag;
    tag << "order " << n << ": ";
    log.require(report.pass(),
                tag.str() + "blue prefix invalid: " + report.summary());
    log.require(is_wildly_presented(p),
                tag.str() + "blue prefix is not wildly presented");
    if (n >= 1 && log.ok) {
      GrainLinePrefix same = wild_subsequence(p);
      log.require(same.paths == p.paths && same.order == p.order,
                  tag.str() + "the wild pass does not fix a wild prefix");
    }
  }
  return finish(3, "blue sweeps form a valid wildly presented prefix", log,
                "orders 0..8: the stage sweeps with the ascending-label line "
                "pass all six prefix conditions inside their graph, are "
                "wildly presented, and the wild pass fixes them");
}

// ---------------------------------------------------------------------------
// Criterion 4: validator fuzz plus targeted mutations.

struct FuzzSettings {
  int line_min = 3, line_max = 8;
  int paths_min = 2, paths_max = 5;
  bool all_born_first = false;
};

GrainLinePrefix random_valid_prefix(std::mt19937_64& rng,
                                    const FuzzSettings& s) {
  std::uniform_int_distribution<int> line_size(s.line_min, s.line_max);
  std::uniform_int_distribution<int> path_count(s.paths_min, s.paths_max);
  std::uniform_int_distribution<int> filler_count(1, 2);
  const int m = line_size(rng);
  const int n_paths = path_count(rng);
  std::uniform_int_distribution<int> birth_dist(0, n_paths - 1);

  GrainLinePrefix p;
  p.x = VertexId{0};
  p.y = VertexId{1};
  p.order.push_back(p.x);
  for (int i = 0; i < m - 2; ++i) p.order.push_back(VertexId{2 + i});
  p.order.push_back(p.y);

  std::map<VertexId, int> birth;
  for (VertexId v : p.order) {
    birth[v] = 0;
  }
  for (int i = 0; i < m - 2; ++i) {
    birth[VertexId{2 + i}] = s.all_born_first ? 0 : birth_dist(rng);
  }

  int next_filler = 100;
  for (int n = 0; n < n_paths; ++n) {
    std::vector<VertexId> seq{p.x};
    auto pad = [&]() {
      int f = filler_count(rng);
      for (int i = 0; i < f; ++i) seq.push_back(VertexId{next_filler++});
    };
    for (std::size_t i = 1; i + 1 < p.order.size(); ++i) {
      if (birth.at(p.order[i]) <= n) {
        pad();
        seq.push_back(p.order[i]);
      }
    }
    pad();
    seq.push_back(p.y);
    p.paths.emplace_back(std::move(seq));
  }
  return p;
}

CriterionResult criterion_fuzz() {
  CheckLog log;
  std::mt19937_64 rng(424242);
  FuzzSettings settings;

  for (int round = 0; round < 500 && log.ok; ++round) {
    GrainLinePrefix p = random_valid_prefix(rng, settings);
    PrefixReport report = validate_prefix(p);
    log.require(report.pass(), "fuzz round " + std::to_string(round) +
                                   " produced a reject: " + report.summary());
    log.require(!report.note.empty(), "the report lost its finite-scope note");
  }

  FuzzSettings eager = settings;
  eager.all_born_first = true;
  eager.line_min = 4;

  for (int round = 0; round < 60 && log.ok; ++round) {
    // Swapping two line vertices on the last path breaks only the ordering.
    GrainLinePrefix p = random_valid_prefix(rng, eager);
    std::vector<VertexId> seq = p.paths.back().vertices();
    auto i1 = std::find(seq.begin(), seq.end(), p.order[1]);
    auto i2 = std::find(seq.begin(), seq.end(), p.order[2]);
    std::iter_swap(i1, i2);
    p.paths.back() = Path(std::move(seq));
    PrefixReport report = validate_prefix(p);
    log.require(!report.order_agreement.ok,
                "a line-order swap was not caught by order agreement");
    log.require(report.shape.ok && report.edge_disjoint.ok &&
                    report.final_segment.ok && report.single_use.ok &&
                    report.overlap.ok,
                "a line-order swap tripped an unrelated condition");
  }

  for (int round = 0; round < 60 && log.ok; ++round) {
    // A line vertex that lies on no path breaks only the final-segment rule.
    GrainLinePrefix p = random_valid_prefix(rng, settings);
    p.order.insert(p.order.begin() + 1, VertexId{99});
    PrefixReport report = validate_prefix(p);
    log.require(!report.final_segment.ok,
                "an absent line vertex was not caught by final segment");
    log.require(report.shape.ok && report.edge_disjoint.ok &&
                    report.order_agreement.ok && report.single_use.ok &&
                    report.overlap.ok,
                "an absent line vertex tripped an unrelated condition");
  }

  for (int round = 0; round < 60 && log.ok; ++round) {
    // Repeating the last path reuses all its edges.
    GrainLinePrefix p = random_valid_prefix(rng, settings);
    p.paths.push_back(p.paths.back());
    PrefixReport report = validate_prefix(p);
    log.require(!report.edge_disjoint.ok,
                "a repeated path was not caught by edge disjointness");
  }

  for (int round = 0; round < 60 && log.ok; ++round) {
    // Pointing y at a vertex off the paths breaks the shape alone.
    GrainLinePrefix p = random_valid_prefix(rng, settings);
    p.y = VertexId{98};
    PrefixReport report = validate_prefix(p);
    log.require(!report.shape.ok, "a bad endpoint was not caught by shape");
  }

  for (int round = 0; round < 60 && log.ok; ++round) {
    // One shared private vertex breaks single use and the overlap rule.
    GrainLinePrefix p = random_valid_prefix(rng, settings);
    VertexId z{97};
    std::vector<VertexId> first = p.paths.front().vertices();
    first.insert(first.begin() + 1, z);
    p.paths.front() = Path(std::move(first));
    std::vector<VertexId> second = p.paths[1].vertices();
    second.insert(second.end() - 1, z);
    p.paths[1] = Path(std::move(second));
    PrefixReport report = validate_prefix(p);
    log.require(!report.single_use.ok,
                "a shared private vertex was not caught by single use");
    log.require(!report.overlap.ok,
                "a shared private vertex was not caught by overlap");
  }

  return finish(4, "prefix validator fuzz and targeted mutations", log,
                "500 random valid prefixes pass; 5 x 60 targeted mutations "
                "each trip exactly the intended condition (shared vertices "
                "trip single use together with overlap, by construction)");
}

// ---------------------------------------------------------------------------
// Criterion 5: every restriction of the order-5 blue prefix is valid.

CriterionResult criterion_restrictions() {
  CheckLog log;
  HalvedFarey built = build_halved_farey(5);
  GrainLinePrefix p = blue_hamilton_prefix(built);
  log.require(p.order.size() == 33, "order-5 prefix should have 33 line "
                                    "vertices");
  int checked = 0;
  for (std::size_t i = 0; i < p.order.size() && log.ok; ++i) {
    for (std::size_t j = i + 1; j < p.order.size() && log.ok; ++j) {
      VertexId lo = p.order[i];
      VertexId hi = p.order[j];
      std::ostringstream tag;
      tag << "pair (" << lo.value << ", " << hi.value << "): ";
      try {
        GrainLinePrefix cut = restrict_to(p, lo, hi);
        log.require(cut.x == lo && cut.y == hi,
                    tag.str() + "restriction endpoints drifted");
        log.require(cut.order.front() == lo && cut.order.back() == hi,
                    tag.str() + "restricted line endpoints drifted");
        log.require(cut.start_index >= 0 && !cut.paths.empty(),
                    tag.str() + "restriction lost its paths");
        PrefixReport report = validate_prefix(cut, &built.graph);
        log.require(report.pass(),
                    tag.str() + "restriction invalid: " + report.summary());
        checked += 1;
      } catch (const Error& e) {
        log.require(false, tag.str() + "restriction threw: " + e.what());
      }
    }
  }
  log.require(checked == 528 || !log.ok,
              "expected 528 restrictions, ran " + std::to_string(checked));
  return finish(5, "every restriction of the blue prefix is valid", log,
                "all 528 ordered line pairs of the order-5 blue prefix "
                "restrict without error and every restriction passes all "
                "six conditions");
}

// ---------------------------------------------------------------------------
// Criterion 6: the halved graph contains the previous full graph as a minor.

CriterionResult criterion_witness() {
  CheckLog log;
  for (int n = 1; n <= 6 && log.ok; ++n) {
    std::ostringstream tag;
    tag << "order " << n << ": ";
    try {
      WitnessResult witness = halved_contains_full_witness(n);
      log.require(witness.offset == n - 1, tag.str() + "offset is not n - 1");
      MinorMapReport report = validate(witness.map);
      std::string issues =
          report.issues.empty() ? std::string() : report.issues.front();
      log.require(report.pass, tag.str() + "witness map invalid: " + issues);
      log.require(witness.map.pattern == build_farey(n - 1),
                  tag.str() + "witness pattern is not the full graph of the "
                              "previous order");
      log.require(witness.map.host == build_halved_farey(n).graph,
                  tag.str() + "witness host is not the halved graph");
    } catch (const Error& e) {
      log.require(false, tag.str() + std::string("witness threw: ") + e.what());
    }
  }
  return finish(6, "halved graph contains the previous full graph as a minor",
                log,
                "orders 1..6: merging the two roots of the halved graph "
                "yields a verified minor model of the full graph one order "
                "down");
}

// ---------------------------------------------------------------------------
// Criterion 7: small minors are absent in truncations, present in the gadget.

CriterionResult criterion_minors() {
  CheckLog log;
  Graph k4 = complete_graph(4);
  Graph k23 = complete_bipartite_2_3();
  for (int n = 0; n <= 4 && log.ok; ++n) {
    Graph g = build_halved_farey(n).graph;
    std::ostringstream tag;
    tag << "halved order " << n << ": ";
    log.require(!find_minor(g, k4).has_value(),
                tag.str() + "found a complete minor on four vertices");
    if (g.vertex_count() >= 5) {
      log.require(!find_minor(g, k23).has_value(),
                  tag.str() + "found a 2x3 complete bipartite minor");
    }
  }
  for (int d = 1; d <= 2 && log.ok; ++d) {
    Graph gadget = build_k23_with_farey_edges(d);
    std::ostringstream tag;
    tag << "gadget order " << d << ": ";
    auto model = find_minor(gadget, k23);
    log.require(model.has_value(),
                tag.str() + "the 2x3 complete bipartite minor was not found");
    if (model) {
      MinorMapReport report = validate(*model);
      std::string issues =
          report.issues.empty() ? std::string() : report.issues.front();
      log.require(report.pass, tag.str() + "model invalid: " + issues);
      log.require(model->pattern == k23, tag.str() + "model pattern drifted");
    }
  }
  return finish(7, "small minors: absent in truncations, present in gadget",
                log,
                "halved graphs of order 0..4 contain neither the complete "
                "graph on four vertices nor the 2x3 complete bipartite "
                "graph as a minor; the hub gadget of order 1 and 2 contains "
                "the latter with a verified model");
}

// ---------------------------------------------------------------------------
// Criterion 9: a single splitting step, digested.

CriterionResult criterion_split_step() {
  CheckLog log;
  CanonicalFareySupply supply;
  for (int m = 4; m <= 6 && log.ok; ++m) {
    Graph g = build_farey(m);
    VertexId u{0};
    VertexId v{1};
    std::ostringstream tag;
    tag << "order " << m << ": ";
    log.require(supply.capacity(g, u, v) == m,
                tag.str() + "canonical capacity is not the order");
    if (!log.ok) break;
    SplitResult r = split_step(g, u, v, supply, 4);

    VertexId one = *g.vertex_with_label(fr(1, 1));
    VertexId minus_one = *g.vertex_with_label(fr(-1, 1));
    log.require(r.separator == VertexSet{one, minus_one},
                tag.str() + "separator is not the 1/1, -1/1 pair");
    log.require(r.spine == Path({u, one, v}),
                tag.str() + "spine is not the first canonical row");
    log.require(r.x_set == VertexSet{one},
                tag.str() + "spine interior is not the 1/1 vertex");
    log.require(r.s_u == one && r.s_v == one && r.x_u == one && r.x_v == one,
                tag.str() + "corner vertices drifted off 1/1");

    PrefixReport pu = validate_prefix(r.prefix_u, &g);
    PrefixReport pv = validate_prefix(r.prefix_v, &g);
    log.require(pu.pass(), tag.str() + "u-side prefix invalid: " + pu.summary());
    log.require(pv.pass(), tag.str() + "v-side prefix invalid: " + pv.summary());
    log.require(r.prefix_u.paths.size() == 2 && r.prefix_v.paths.size() == 2,
                tag.str() + "side prefixes should keep two paths");

    MinorMapReport mu = validate(r.map_u);
    MinorMapReport mv = validate(r.map_v);
    log.require(mu.pass && mv.pass,
                tag.str() + "a side contraction model is invalid");
    log.require(r.contracted_u.has_edge(u, r.x_vertex_u) &&
                    r.contracted_u.has_edge(r.x_vertex_u, v),
                tag.str() + "u-side contraction lost the collapsed spine");
    log.require(r.contracted_v.has_edge(r.x_vertex_v, v),
                tag.str() + "v-side contraction lost the collapsed spine");

    Graph both = graph_union(r.h_u, r.h_v);
    Contraction joint = contract_set(both, r.x_set);
    Graph triangle = joint.graph;
    triangle.add_edge(u, v);
    log.require(triangle.has_edge(u, joint.merged) &&
                    triangle.has_edge(joint.merged, v) &&
                    triangle.has_edge(u, v),
                tag.str() + "the two sides plus the split edge do not close "
                            "into a triangle");
  }
  return finish(9, "single splitting step digest", log,
                "orders 4..6 with budget 4: the step finds the canonical "
                "1/1, -1/1 separator, keeps the first canonical row as the "
                "spine, both side prefixes are valid, both contraction "
                "models check out, and the contracted sides close into a "
                "triangle with the split edge");
}

// ---------------------------------------------------------------------------
// Criterion 10: the iterated pipeline.

CriterionResult criterion_pipeline() {
  CheckLog log;

  {
    Graph g = build_farey(8);
    CanonicalFareySupply supply;
    PipelineResult pr;
    try {
      pr = foresighted_pipeline(g, VertexId{0}, VertexId{1}, supply, 3, 7);
    } catch (const Error& e) {
      log.require(false, std::string("depth-3 pipeline threw: ") + e.what());
      return finish(10, "iterated splitting pipeline", log, "");
    }

    log.require(pr.stages.size() == 4, "depth-3 run should have 4 stages");
    log.require(pr.step_maps.size() == 3, "depth-3 run should have 3 step "
                                          "maps");
    log.require(pr.contractions.size() == 7,
                "depth-3 run should contract 1+2+4 spine interiors");

    const Graph& core = pr.stages.back().farey_part;
    log.require(core.vertex_count() == 9 && core.edge_count() == 15,
                "final core does not have the halved order-3 counts");
    log.require(blue_count(core) == 8, "final core should have 8 blue edges");
    std::set<Fraction> expected{fr(0, 1), fr(1, 3), fr(1, 2), fr(2, 3),
                                fr(1, 1), fr(3, 2), fr(2, 1), fr(3, 1),
                                Fraction::infinity()};
    log.require(label_set(core) == expected,
                "final core labels are not the order-3 mediant set");
    log.require(iso_check(core, build_halved_farey(3).graph, true).has_value(),
                "final core is not colour-isomorphic to the halved order-3 "
                "graph");

    for (std::size_t i = 0; i < pr.step_maps.size() && log.ok; ++i) {
      MinorMapReport report = validate(pr.step_maps[i]);
      std::string issues =
          report.issues.empty() ? std::string() : report.issues.front();
      log.require(report.pass,
                  "step map " + std::to_string(i) + " invalid: " + issues);
    }
    MinorMapReport fin = validate(pr.final_map);
    log.require(fin.pass, "final map invalid: " +
                              (fin.issues.empty() ? std::string()
                                                  : fin.issues.front()));
    log.require(pr.final_map.host == g, "final map host drifted");

    VertexSet used;
    for (const auto& [ve, x] : pr.contractions) {
      std::ostringstream tag;
      tag << "fresh vertex " << ve.value << ": ";
      log.require(!x.empty(), tag.str() + "empty branch set");
      log.require(pr.final_map.fibre(ve) == x,
                  tag.str() + "final fibre is not the recorded interior");
      log.require(is_connected_in(g, x),
                  tag.str() + "branch set is not connected in the host");
      for (VertexId w : x) {
        log.require(g.has_vertex(w) && used.insert(w).second,
                    tag.str() + "branch sets overlap or leave the host");
      }
    }
    log.require(pr.final_map.fibre(VertexId{0}) == VertexSet{VertexId{0}} &&
                    pr.final_map.fibre(VertexId{1}) == VertexSet{VertexId{1}},
                "root fibres should be the roots themselves");
  }

  if (log.ok) {
    Graph f5 = build_farey(5);
    Subdivision sub = subdivide_edges(f5);
    Graph host = sub.graph;
    host.add_edge(VertexId{0}, VertexId{1});

    std::vector<Path> stock;
    for (const Path& row :
         canonical_paths(f5, VertexId{0}, VertexId{1}, 5)) {
      std::vector<VertexId> ids;
      const auto& vs = row.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        ids.push_back(vs[i]);
        if (i + 1 < vs.size()) {
          ids.push_back(sub.midpoints.at(Edge(vs[i], vs[i + 1])));
        }
      }
      stock.emplace_back(std::move(ids));
    }
    StockSupply supply(std::move(stock));

    VertexId one = *f5.vertex_with_label(fr(1, 1));
    VertexId minus_one = *f5.vertex_with_label(fr(-1, 1));
    VertexId m_root = sub.midpoints.at(Edge(VertexId{0}, VertexId{1}));
    VertexSet cut = min_vertex_separator(
        without_edge(host, VertexId{0}, VertexId{1}), VertexId{0}, VertexId{1});
    log.require(cut == VertexSet{one, minus_one, m_root},
                "subdivided host separator is not the root midpoint with "
                "1/1 and -1/1");

    PipelineResult pr;
    try {
      pr = foresighted_pipeline(host, VertexId{0}, VertexId{1}, supply, 1, 4);
    } catch (const Error& e) {
      log.require(false,
                  std::string("subdivided pipeline threw: ") + e.what());
      return finish(10, "iterated splitting pipeline", log, "");
    }
    log.require(pr.contractions.size() == 1,
                "subdivided run should contract one spine interior");
    if (log.ok) {
      auto [ve, x] = *pr.contractions.begin();
      VertexId mu = sub.midpoints.at(Edge(VertexId{0}, one));
      VertexId mv = sub.midpoints.at(Edge(one, VertexId{1}));
      log.require(x == VertexSet{one, mu, mv},
                  "contracted interior is not the subdivided middle row");
      log.require(pr.final_map.fibre(ve) == x,
                  "subdivided fibre is not the recorded interior");
      const Graph& core = pr.stages.back().farey_part;
      log.require(core.vertex_count() == 3 &&
                      core.has_edge(VertexId{0}, ve) &&
                      core.has_edge(ve, VertexId{1}) &&
                      core.has_edge(VertexId{0}, VertexId{1}),
                  "subdivided core is not the two-step root path plus root "
                  "edge");
      log.require(core.has_label(ve) && core.label(ve) == fr(1, 1),
                  "fresh vertex should inherit the mediant label 1/1");
      MinorMapReport fin = validate(pr.final_map);
      log.require(fin.pass, "subdivided final map invalid");
    }
  }

  return finish(10, "iterated splitting pipeline", log,
                "depth 3 on the order-8 full graph rebuilds the halved "
                "order-3 core (budgets shrink 7, 5, 3) with verified step "
                "maps and fibres equal to the recorded spine interiors; the "
                "fully subdivided order-5 host with its root edge restored "
                "splits once through the midpoint separator, contracting "
                "the three-vertex middle row onto a fresh 1/1 vertex");
}

}  // namespace

std::vector<CriterionResult> run_counts_suite() {
  return {criterion_counts(), criterion_connectivity()};
}

std::vector<CriterionResult> run_equivalence_suite() {
  return {criterion_equivalence(), criterion_serialization()};
}

std::vector<CriterionResult> run_grainline_suite() {
  return {criterion_blue_prefix(), criterion_fuzz(), criterion_restrictions()};
}

std::vector<CriterionResult> run_minor_suite() {
  return {criterion_witness(), criterion_minors()};
}

std::vector<CriterionResult> run_pipeline_suite() {
  return {criterion_split_step(), criterion_pipeline()};
}

std::vector<CriterionResult> run_all_suites() {
  std::vector<CriterionResult> all;
  for (auto&& suite :
       {run_counts_suite(), run_equivalence_suite(), run_grainline_suite(),
        run_minor_suite(), run_pipeline_suite()}) {
    for (const CriterionResult& r : suite) all.push_back(r);
  }
  std::sort(all.begin(), all.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.number < b.number;
            });
  return all;
}

}  // namespace farey
