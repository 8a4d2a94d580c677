#include "farey/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "farey/errors.hpp"

namespace farey {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kGraphFormat = "farey-graph/1";
constexpr const char* kPathListFormat = "path-list/1";
constexpr const char* kPrefixFormat = "grain-prefix/1";
constexpr const char* kSplitFormat = "split-result/1";

std::pair<int, int> text_position(const std::string& text, std::size_t byte) {
  std::size_t pos = byte == 0 ? 0 : byte - 1;
  if (pos > text.size()) pos = text.size();
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      line += 1;
      column = 1;
    } else {
      column += 1;
    }
  }
  return {line, column};
}

ordered_json parse_or_throw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = text_position(text, e.byte);
    throw ParseError("malformed JSON input", line, column);
  }
}

void require_format(const ordered_json& j, const char* expected) {
  if (!j.is_object()) {
    throw InputError(std::string("expected a JSON object with format \"") +
                     expected + "\"");
  }
  if (!j.contains("format") || !j["format"].is_string() ||
      j["format"].get<std::string>() != expected) {
    throw InputError(std::string("expected format \"") + expected + "\"");
  }
}

const ordered_json& require_array(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InputError(std::string("expected an array under \"") + key + "\"");
  }
  return j[key];
}

int require_int(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(std::string("expected an integer under \"") + key + "\"");
  }
  return j[key].get<int>();
}

std::string require_string(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
    throw InputError(std::string("expected a string under \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

ordered_json graph_to_json(const Graph& g, const std::string& provenance) {
  ordered_json j;
  j["format"] = kGraphFormat;
  j["metadata"] = ordered_json{{"provenance", provenance}};
  ordered_json vertices = ordered_json::array();
  for (VertexId v : g.vertices()) {
    ordered_json row;
    row["id"] = v.value;
    if (g.has_label(v)) row["label"] = g.label(v).str();
    vertices.push_back(std::move(row));
  }
  j["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json row;
    row["u"] = e.a.value;
    row["v"] = e.b.value;
    if (auto c = g.colour(e.a, e.b)) {
      row["colour"] = *c == EdgeColour::blue ? "blue" : "black";
    }
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::vector<std::string> token_row(const Graph& g, const Path& p) {
  std::vector<std::string> row;
  row.reserve(p.size());
  for (VertexId v : p.vertices()) row.push_back(vertex_token(g, v));
  return row;
}

ordered_json prefix_to_json(const Graph& g, const GrainLinePrefix& p) {
  ordered_json j;
  j["format"] = kPrefixFormat;
  j["x"] = vertex_token(g, p.x);
  j["y"] = vertex_token(g, p.y);
  j["start_index"] = p.start_index;
  ordered_json order = ordered_json::array();
  for (VertexId v : p.order) order.push_back(vertex_token(g, v));
  j["order"] = std::move(order);
  ordered_json paths = ordered_json::array();
  for (const Path& path : p.paths) paths.push_back(token_row(g, path));
  j["paths"] = std::move(paths);
  return j;
}

std::vector<Path> paths_from_json(const Graph& g, const ordered_json& rows) {
  std::vector<Path> result;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) {
      throw InputError("every path must be a non-empty array of tokens");
    }
    std::vector<VertexId> ids;
    ids.reserve(row.size());
    for (const auto& token : row) {
      if (!token.is_string()) {
        throw InputError("path entries must be string tokens");
      }
      ids.push_back(parse_vertex_token(g, token.get<std::string>()));
    }
    result.emplace_back(std::move(ids));
  }
  return result;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.5f", value);
  return buffer;
}

}  // namespace

std::string vertex_token(const Graph& g, VertexId v) {
  if (g.has_label(v)) {
    const Fraction label = g.label(v);
    try {
      auto unique = g.vertex_with_label(label);
      if (unique && *unique == v) return label.str();
    } catch (const InputError&) {
      // Shared label; fall through to the id form.
    }
  }
  return std::to_string(v.value);
}

VertexId parse_vertex_token(const Graph& g, const std::string& token) {
  if (token.find('/') != std::string::npos) {
    Fraction label = Fraction::parse(token);
    auto v = g.vertex_with_label(label);
    if (!v) {
      throw InputError("no vertex is labelled " + label.str());
    }
    return *v;
  }
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw InputError("not a vertex token: \"" + token + "\"");
  }
  if (used != token.size()) {
    throw InputError("not a vertex token: \"" + token + "\"");
  }
  VertexId v{id};
  if (!g.has_vertex(v)) {
    throw InputError("no vertex has id " + token);
  }
  return v;
}

std::string emit_graph_json(const Graph& g, const std::string& provenance) {
  return graph_to_json(g, provenance).dump(2) + "\n";
}

Graph parse_graph_json(const std::string& text) {
  ordered_json j = parse_or_throw(text);
  require_format(j, kGraphFormat);
  Graph g;
  for (const auto& row : require_array(j, "vertices")) {
    VertexId v{require_int(row, "id")};
    if (g.has_vertex(v)) {
      throw InputError("vertex id " + std::to_string(v.value) + " repeats");
    }
    g.add_vertex(v);
    if (row.contains("label")) {
      g.set_label(v, Fraction::parse(require_string(row, "label")));
    }
  }
  for (const auto& row : require_array(j, "edges")) {
    VertexId u{require_int(row, "u")};
    VertexId v{require_int(row, "v")};
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw InputError("edge " + std::to_string(u.value) + "-" +
                       std::to_string(v.value) + " names a missing vertex");
    }
    if (g.has_edge(u, v)) {
      throw InputError("edge " + std::to_string(u.value) + "-" +
                       std::to_string(v.value) + " repeats");
    }
    g.add_edge(u, v);
    if (row.contains("colour")) {
      std::string colour = require_string(row, "colour");
      if (colour == "blue") {
        g.set_colour(u, v, EdgeColour::blue);
      } else if (colour == "black") {
        g.set_colour(u, v, EdgeColour::black);
      } else {
        throw InputError("unknown edge colour \"" + colour + "\"");
      }
    }
  }
  return g;
}

std::string emit_path_list_json(const Graph& g, const std::vector<Path>& paths) {
  ordered_json j;
  j["format"] = kPathListFormat;
  ordered_json rows = ordered_json::array();
  for (const Path& p : paths) rows.push_back(token_row(g, p));
  j["paths"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<Path> parse_path_list_json(const Graph& g, const std::string& text) {
  ordered_json j = parse_or_throw(text);
  require_format(j, kPathListFormat);
  return paths_from_json(g, require_array(j, "paths"));
}

std::string emit_prefix_json(const Graph& g, const GrainLinePrefix& p) {
  return prefix_to_json(g, p).dump(2) + "\n";
}

GrainLinePrefix parse_prefix_json(const Graph& g, const std::string& text) {
  ordered_json j = parse_or_throw(text);
  require_format(j, kPrefixFormat);
  GrainLinePrefix p;
  p.x = parse_vertex_token(g, require_string(j, "x"));
  p.y = parse_vertex_token(g, require_string(j, "y"));
  p.start_index = require_int(j, "start_index");
  for (const auto& token : require_array(j, "order")) {
    if (!token.is_string()) {
      throw InputError("order entries must be string tokens");
    }
    p.order.push_back(parse_vertex_token(g, token.get<std::string>()));
  }
  p.paths = paths_from_json(g, require_array(j, "paths"));
  return p;
}

std::string emit_split_json(const Graph& g, const SplitResult& r) {
  ordered_json j;
  j["format"] = kSplitFormat;
  j["spine"] = token_row(g, r.spine);
  ordered_json separator = ordered_json::array();
  for (VertexId v : r.separator) separator.push_back(vertex_token(g, v));
  j["separator"] = std::move(separator);
  ordered_json interior = ordered_json::array();
  for (VertexId v : r.x_set) interior.push_back(vertex_token(g, v));
  j["interior"] = std::move(interior);
  j["s_u"] = vertex_token(g, r.s_u);
  j["s_v"] = vertex_token(g, r.s_v);
  j["x_u"] = vertex_token(g, r.x_u);
  j["x_v"] = vertex_token(g, r.x_v);
  ordered_json pu = prefix_to_json(g, r.prefix_u);
  pu.erase("format");
  ordered_json pv = prefix_to_json(g, r.prefix_v);
  pv.erase("format");
  j["prefix_u"] = std::move(pu);
  j["prefix_v"] = std::move(pv);
  auto embed = [](const Graph& side) {
    ordered_json e = graph_to_json(side, "");
    e.erase("format");
    e.erase("metadata");
    return e;
  };
  j["h_u"] = embed(r.h_u);
  j["h_v"] = embed(r.h_v);
  j["contracted_u"] = embed(r.contracted_u);
  j["contracted_v"] = embed(r.contracted_v);
  return j.dump(2) + "\n";
}

std::string emit_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph farey {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v.value;
    if (g.has_label(v)) out << " [label=\"" << g.label(v).str() << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.a.value << " -- " << e.b.value;
    if (auto c = g.colour(e.a, e.b); c && *c == EdgeColour::blue) {
      out << " [color=blue]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_svg_circle(const Graph& g, bool hyperbolic_arcs) {
  constexpr double kSize = 640.0;
  constexpr double kCentre = kSize / 2.0;
  constexpr double kRadius = 250.0;
  constexpr double kLabelRadius = kRadius + 22.0;
  constexpr double kPi = 3.14159265358979323846;

  bool fully_labelled = true;
  bool has_negative = false;
  for (VertexId v : g.vertices()) {
    if (!g.has_label(v)) {
      fully_labelled = false;
      break;
    }
    const Fraction f = g.label(v);
    if (!f.is_infinity() && f.num() < 0) has_negative = true;
  }

  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, double> angle;  // radians, mathematical orientation
  const std::size_t n = order.size();

  if (fully_labelled && n > 0) {
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return g.label(a) < g.label(b);
    });
    if (!has_negative) {
      // Semicircle: smallest label on the left, the greatest on the right.
      for (std::size_t i = 0; i < n; ++i) {
        angle[order[i]] =
            n == 1 ? kPi / 2.0
                   : kPi * static_cast<double>(n - 1 - i) /
                         static_cast<double>(n - 1);
      }
    } else {
      // Full circle starting at 1/0 on top, then ascending label order.
      std::stable_partition(order.begin(), order.end(), [&](VertexId v) {
        return g.label(v).is_infinity();
      });
      for (std::size_t i = 0; i < n; ++i) {
        angle[order[i]] =
            kPi / 2.0 + 2.0 * kPi * static_cast<double>(i) /
                            static_cast<double>(n);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      angle[order[i]] = kPi / 2.0 +
                        2.0 * kPi * static_cast<double>(i) /
                            (n == 0 ? 1.0 : static_cast<double>(n));
    }
  }

  auto point = [&](VertexId v, double radius) {
    double a = angle.at(v);
    return std::pair<double, double>{kCentre + radius * std::cos(a),
                                     kCentre - radius * std::sin(a)};
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize)
      << "\" height=\"" << num(kSize) << "\" viewBox=\"0 0 " << num(kSize)
      << " " << num(kSize) << "\">\n";
  out << "  <rect width=\"" << num(kSize) << "\" height=\"" << num(kSize)
      << "\" fill=\"white\"/>\n";

  for (const Edge& e : g.edges()) {
    auto [x1, y1] = point(e.a, kRadius);
    auto [x2, y2] = point(e.b, kRadius);
    auto c = g.colour(e.a, e.b);
    const char* stroke =
        c && *c == EdgeColour::blue ? "#2060c0" : "#444444";
    bool drew_arc = false;
    if (hyperbolic_arcs) {
      // Unit-disc geodesic through the two boundary points: the circle
      // orthogonal to the layout circle. Near-diameters degenerate and fall
      // back to the chord below.
      double pax = std::cos(angle.at(e.a));
      double pay = std::sin(angle.at(e.a));
      double pbx = std::cos(angle.at(e.b));
      double pby = std::sin(angle.at(e.b));
      double denom = 1.0 + pax * pbx + pay * pby;
      if (std::abs(denom) > 1e-9) {
        double cx = (pax + pbx) / denom;
        double cy = (pay + pby) / denom;
        double r2 = cx * cx + cy * cy - 1.0;
        if (r2 > 1e-12) {
          double arc_r = std::sqrt(r2) * kRadius;
          double ccx = kCentre + cx * kRadius;
          double ccy = kCentre - cy * kRadius;
          double crossz = (x1 - ccx) * (y2 - ccy) - (y1 - ccy) * (x2 - ccx);
          int sweep = crossz > 0 ? 1 : 0;
          out << "  <path d=\"M " << num(x1) << " " << num(y1) << " A "
              << num(arc_r) << " " << num(arc_r) << " 0 0 " << sweep << " "
              << num(x2) << " " << num(y2) << "\" fill=\"none\" stroke=\""
              << stroke << "\" stroke-width=\"1.2\"/>\n";
          drew_arc = true;
        }
      }
    }
    if (!drew_arc) {
      out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
          << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
          << "\" stroke-width=\"1.2\"/>\n";
    }
  }

  for (VertexId v : order) {
    auto [x, y] = point(v, kRadius);
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
        << "\" r=\"3.00000\" fill=\"#222222\"/>\n";
    auto [lx, ly] = point(v, kLabelRadius);
    std::string text = g.has_label(v) ? g.label(v).str()
                                      : std::to_string(v.value);
    out << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly)
        << "\" font-size=\"11\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\" fill=\"#111111\">"
        << xml_escape(text) << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace farey
