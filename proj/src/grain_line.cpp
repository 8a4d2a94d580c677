#include "farey/grain_line.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "farey/builders.hpp"
#include "farey/errors.hpp"

namespace farey {
namespace {

std::string id_list(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ' ';
    out << vs[i].value;
  }
  out << ']';
  return out.str();
}

void fail(Condition& c, std::string message) {
  if (c.ok) {
    c.ok = false;
    c.failure = std::move(message);
  }
}

// Path indices containing each vertex, in increasing order.
std::map<VertexId, std::vector<std::size_t>> occurrence_map(
    const std::vector<Path>& paths) {
  std::map<VertexId, std::vector<std::size_t>> where;
  for (std::size_t n = 0; n < paths.size(); ++n) {
    for (VertexId v : paths[n].vertices()) where[v].push_back(n);
  }
  return where;
}

// Line vertices whose first appearance is on a path before index n,
// listed in line order.
std::vector<VertexId> previously_seen(
    const GrainLinePrefix& p,
    const std::map<VertexId, std::vector<std::size_t>>& where, std::size_t n) {
  std::vector<VertexId> prev;
  for (VertexId v : p.order) {
    auto it = where.find(v);
    if (it != where.end() && it->second.front() < n) prev.push_back(v);
  }
  return prev;
}

std::vector<VertexId> trace_of(const Path& path, const std::set<VertexId>& marked) {
  std::vector<VertexId> trace;
  for (VertexId v : path.vertices()) {
    if (marked.count(v)) trace.push_back(v);
  }
  return trace;
}

// True when, between every two consecutive vertices of `against` (a
// subsequence of the line, in line order), the path passes through some line
// vertex lying strictly between them in line order.
bool path_is_wild(const Path& path, const std::vector<VertexId>& against,
                  const std::map<VertexId, std::size_t>& line_pos) {
  for (std::size_t i = 0; i + 1 < against.size(); ++i) {
    auto p1 = path.position(against[i]);
    auto p2 = path.position(against[i + 1]);
    if (!p1 || !p2) return false;
    std::size_t lo = std::min(*p1, *p2);
    std::size_t hi = std::max(*p1, *p2);
    std::size_t left = line_pos.at(against[i]);
    std::size_t right = line_pos.at(against[i + 1]);
    bool witness = false;
    for (std::size_t t = lo + 1; t < hi && !witness; ++t) {
      auto it = line_pos.find(path.vertices()[t]);
      witness = it != line_pos.end() && left < it->second && it->second < right;
    }
    if (!witness) return false;
  }
  return true;
}

std::map<VertexId, std::size_t> line_positions(const GrainLinePrefix& p) {
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < p.order.size(); ++i) pos.emplace(p.order[i], i);
  return pos;
}

}  // namespace

bool PrefixReport::pass() const {
  return shape.ok && edge_disjoint.ok && final_segment.ok && single_use.ok &&
         order_agreement.ok && overlap.ok;
}

std::string PrefixReport::summary() const {
  if (pass()) return "all conditions hold";
  std::ostringstream out;
  bool first = true;
  auto add = [&](const char* name, const Condition& c) {
    if (c.ok) return;
    if (!first) out << "; ";
    first = false;
    out << name << ": " << c.failure;
  };
  add("shape", shape);
  add("edge_disjoint", edge_disjoint);
  add("final_segment", final_segment);
  add("single_use", single_use);
  add("order_agreement", order_agreement);
  add("overlap", overlap);
  return out.str();
}

PrefixReport validate_prefix(const GrainLinePrefix& p, const Graph* ambient) {
  PrefixReport r;
  r.note =
      "all conditions are finite checks over the listed paths; passing "
      "certifies consistency with a grain line, not the existence of its "
      "infinite continuation";

  if (p.x == p.y) fail(r.shape, "endpoints coincide");
  if (p.paths.empty()) fail(r.shape, "no paths");
  for (std::size_t n = 0; n < p.paths.size(); ++n) {
    const Path& path = p.paths[n];
    if (path.size() < 2) {
      fail(r.shape, "path " + std::to_string(n) + " has no edge");
    } else if (path.front() != p.x || path.back() != p.y) {
      fail(r.shape, "path " + std::to_string(n) + " does not run from " +
                        std::to_string(p.x.value) + " to " +
                        std::to_string(p.y.value));
    }
    if (ambient && !path.lies_in(*ambient)) {
      fail(r.shape, "path " + std::to_string(n) + " leaves the ambient graph");
    }
  }
  {
    std::set<VertexId> seen;
    for (VertexId v : p.order) {
      if (!seen.insert(v).second) {
        fail(r.shape,
             "line order repeats vertex " + std::to_string(v.value));
      }
    }
    if (p.order.empty()) {
      fail(r.shape, "line order is empty");
    } else if (p.order.front() != p.x || p.order.back() != p.y) {
      fail(r.shape, "line order must start at " + std::to_string(p.x.value) +
                        " and end at " + std::to_string(p.y.value));
    }
  }

  {
    std::map<Edge, std::size_t> edge_owner;
    for (std::size_t n = 0; n < p.paths.size() && r.edge_disjoint.ok; ++n) {
      for (const Edge& e : p.paths[n].edges()) {
        auto [it, fresh] = edge_owner.emplace(e, n);
        if (!fresh) {
          fail(r.edge_disjoint,
               "paths " + std::to_string(it->second) + " and " +
                   std::to_string(n) + " share edge " + std::to_string(e.a.value) +
                   "-" + std::to_string(e.b.value));
          break;
        }
      }
    }
  }

  const auto where = occurrence_map(p.paths);
  const std::set<VertexId> line(p.order.begin(), p.order.end());
  const std::size_t n_paths = p.paths.size();

  for (VertexId v : p.order) {
    auto it = where.find(v);
    if (it == where.end()) {
      fail(r.final_segment,
           "line vertex " + std::to_string(v.value) + " lies on no path");
      continue;
    }
    const auto& idxs = it->second;
    bool final_run = !idxs.empty() && idxs.back() + 1 == n_paths &&
                     idxs.size() == n_paths - idxs.front();
    if (!final_run) {
      fail(r.final_segment,
           "line vertex " + std::to_string(v.value) +
               " does not occupy a final segment of path positions");
    }
  }

  for (const auto& [v, idxs] : where) {
    if (!line.count(v) && idxs.size() != 1) {
      fail(r.single_use, "vertex " + std::to_string(v.value) + " lies on " +
                             std::to_string(idxs.size()) +
                             " paths but is not on the line");
    }
  }

  for (std::size_t n = 0; n < n_paths; ++n) {
    std::vector<VertexId> prev = previously_seen(p, where, n);
    std::set<VertexId> prev_set(prev.begin(), prev.end());
    std::vector<VertexId> trace = trace_of(p.paths[n], prev_set);
    if (trace != prev) {
      fail(r.order_agreement,
           "path " + std::to_string(n) +
               " meets the previously-seen line vertices as " + id_list(trace) +
               " but the line orders them " + id_list(prev));
    }
  }

  {
    std::set<VertexId> earlier;
    for (std::size_t n = 0; n < n_paths; ++n) {
      std::vector<VertexId> prev = previously_seen(p, where, n);
      std::set<VertexId> prev_set(prev.begin(), prev.end());
      std::set<VertexId> inter;
      for (VertexId v : p.paths[n].vertices()) {
        if (earlier.count(v)) inter.insert(v);
      }
      if (inter != prev_set) {
        std::vector<VertexId> got(inter.begin(), inter.end());
        fail(r.overlap, "path " + std::to_string(n) +
                            " overlaps the earlier paths in " + id_list(got) +
                            " instead of exactly the previously-seen line "
                            "vertices " +
                            id_list(prev));
      }
      for (VertexId v : p.paths[n].vertices()) earlier.insert(v);
    }
  }

  return r;
}

bool grains(const GrainLinePrefix& p, int from_index, const VertexSet& targets) {
  std::vector<VertexId> expected;
  for (VertexId v : p.order) {
    if (targets.count(v)) expected.push_back(v);
  }
  std::size_t start = from_index < 0 ? 0 : static_cast<std::size_t>(from_index);
  for (std::size_t m = start; m < p.paths.size(); ++m) {
    std::vector<VertexId> trace;
    for (VertexId v : p.paths[m].vertices()) {
      if (targets.count(v)) trace.push_back(v);
    }
    if (trace != expected) return false;
  }
  return true;
}

ExtractResult extract(const std::vector<Path>& supply, int rounds) {
  if (rounds < 1) throw InputError("extraction needs at least one round");
  if (supply.size() < static_cast<std::size_t>(rounds) + 1) {
    throw SupplyError("extraction over " + std::to_string(rounds) +
                      " rounds needs at least " + std::to_string(rounds + 1) +
                      " paths, got " + std::to_string(supply.size()));
  }
  const Path& anchor = supply.front();
  if (anchor.size() < 2) throw InputError("supply paths need at least one edge");
  std::vector<Path> oriented;
  oriented.reserve(supply.size());
  for (const Path& path : supply) {
    if (path.size() < 2) throw InputError("supply paths need at least one edge");
    oriented.push_back(oriented_like(anchor, path));
  }

  std::set<VertexId> marked;
  std::vector<Path> chosen;
  std::vector<std::size_t> pool(oriented.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  for (int round = 1; round <= rounds; ++round) {
    if (pool.empty()) {
      throw SupplyError("path pool exhausted after " + std::to_string(round - 1) +
                        " of " + std::to_string(rounds) + " rounds");
    }
    std::map<std::vector<VertexId>, std::vector<std::size_t>> classes;
    for (std::size_t idx : pool) {
      classes[trace_of(oriented[idx], marked)].push_back(idx);
    }
    auto best = classes.begin();
    for (auto it = std::next(classes.begin()); it != classes.end(); ++it) {
      if (it->second.size() > best->second.size()) best = it;
    }
    std::size_t pick = best->second.front();
    chosen.push_back(oriented[pick]);
    pool.assign(std::next(best->second.begin()), best->second.end());
    for (VertexId v : oriented[pick].vertices()) marked.insert(v);
  }

  std::vector<VertexId> line;
  if (!pool.empty()) {
    line = trace_of(oriented[pool.front()], marked);
  } else {
    std::set<VertexId> prior;
    for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
      for (VertexId v : chosen[i].vertices()) prior.insert(v);
    }
    line = trace_of(chosen.back(), prior);
  }

  ExtractResult result;
  result.prefix.x = anchor.front();
  result.prefix.y = anchor.back();
  result.prefix.order = std::move(line);
  result.prefix.paths = std::move(chosen);
  result.prefix.start_index = 0;
  for (std::size_t idx : pool) result.residual.push_back(oriented[idx]);
  return result;
}

GrainLinePrefix restrict_to(const GrainLinePrefix& p, VertexId lo, VertexId hi) {
  auto pos_of = [&](VertexId v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < p.order.size(); ++i) {
      if (p.order[i] == v) return i;
    }
    return std::nullopt;
  };
  auto lo_pos = pos_of(lo);
  auto hi_pos = pos_of(hi);
  if (!lo_pos || !hi_pos || *lo_pos >= *hi_pos) {
    throw InputError("restriction endpoints must both be line vertices with " +
                     std::to_string(lo.value) + " before " +
                     std::to_string(hi.value));
  }
  VertexSet targets{lo, hi};
  std::optional<std::size_t> found;
  for (std::size_t d = 0; d < p.paths.size(); ++d) {
    if (grains(p, static_cast<int>(d), targets)) {
      found = d;
      break;
    }
  }
  if (!found) {
    throw SupplyError("no final run of paths grains the pair " +
                      std::to_string(lo.value) + ", " + std::to_string(hi.value));
  }
  GrainLinePrefix out;
  out.x = lo;
  out.y = hi;
  out.order.assign(p.order.begin() + static_cast<std::ptrdiff_t>(*lo_pos),
                   p.order.begin() + static_cast<std::ptrdiff_t>(*hi_pos) + 1);
  for (std::size_t n = *found; n < p.paths.size(); ++n) {
    out.paths.push_back(p.paths[n].subpath(lo, hi));
  }
  out.start_index = p.start_index + static_cast<int>(*found);
  return out;
}

bool is_wildly_presented(const GrainLinePrefix& p) {
  const auto where = occurrence_map(p.paths);
  const auto line_pos = line_positions(p);
  for (std::size_t n = 0; n < p.paths.size(); ++n) {
    std::vector<VertexId> prev = previously_seen(p, where, n);
    if (!path_is_wild(p.paths[n], prev, line_pos)) return false;
  }
  return true;
}

GrainLinePrefix wild_subsequence(const GrainLinePrefix& p) {
  if (p.paths.empty()) throw InputError("wild pass needs at least one path");
  const auto line_pos = line_positions(p);
  std::vector<std::size_t> kept{0};
  std::set<VertexId> kept_vertices(p.paths[0].vertices().begin(),
                                   p.paths[0].vertices().end());
  for (std::size_t n = 1; n < p.paths.size(); ++n) {
    std::vector<VertexId> seen_line;
    for (VertexId v : p.order) {
      if (kept_vertices.count(v)) seen_line.push_back(v);
    }
    if (path_is_wild(p.paths[n], seen_line, line_pos)) {
      kept.push_back(n);
      for (VertexId v : p.paths[n].vertices()) kept_vertices.insert(v);
    }
  }
  GrainLinePrefix out;
  out.x = p.x;
  out.y = p.y;
  for (std::size_t idx : kept) out.paths.push_back(p.paths[idx]);
  const Path& last = out.paths.back();
  for (VertexId v : p.order) {
    if (last.contains(v)) out.order.push_back(v);
  }
  out.start_index = p.start_index;
  return out;
}

GrainLinePrefix drop_leading(const GrainLinePrefix& p, int count) {
  if (count < 0 || static_cast<std::size_t>(count) >= p.paths.size()) {
    throw InputError("can drop at most " +
                     std::to_string(p.paths.empty() ? 0 : p.paths.size() - 1) +
                     " leading paths, asked for " + std::to_string(count));
  }
  GrainLinePrefix out;
  out.x = p.x;
  out.y = p.y;
  out.order = p.order;
  out.paths.assign(p.paths.begin() + count, p.paths.end());
  out.start_index = p.start_index + count;
  return out;
}

GrainLinePrefix blue_hamilton_prefix(const HalvedFarey& built) {
  GrainLinePrefix p;
  p.x = built.stage_paths.front().front();
  p.y = built.stage_paths.front().back();
  std::vector<VertexId> by_label(built.graph.vertices().begin(),
                                 built.graph.vertices().end());
  std::sort(by_label.begin(), by_label.end(), [&](VertexId a, VertexId b) {
    return built.graph.label(a) < built.graph.label(b);
  });
  p.order = std::move(by_label);
  p.paths = built.stage_paths;
  p.start_index = 0;
  return p;
}

}  // namespace farey
