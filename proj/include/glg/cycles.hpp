#pragma once

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "glg/graph.hpp"

namespace glg {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultCycleLimit = 1000000;

// NONZERO_CYCLES_LIMIT overrides the default when it parses as a positive integer.
inline std::size_t default_cycle_limit() {
  if (const char* s = std::getenv("NONZERO_CYCLES_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCycleLimit;
}

enum class Target { Auto, NonZero, DoublyNonZero };

inline Target resolve_target(const LabeledGraph& g, Target t) {
  if (t != Target::Auto) return t;
  return g.group()->kind() == GroupKind::Sum ? Target::DoublyNonZero : Target::NonZero;
}

inline const char* target_name(Target t) {
  switch (t) {
    case Target::Auto: return "auto";
    case Target::NonZero: return "nonzero";
    case Target::DoublyNonZero: return "doubly-nonzero";
  }
  return "?";
}

inline bool value_matches(const Element& v, Target resolved) {
  if (resolved == Target::DoublyNonZero) {
    return !is_zero(project(v, Side::Left)) && !is_zero(project(v, Side::Right));
  }
  return !is_zero(v);
}

struct CycleInfo {
  std::vector<int> edges;     // sorted edge ids
  std::vector<int> vertices;  // sorted vertex ids
  Walk walk;                  // rooted at its smallest vertex
  Element value;
  bool zero = true;
  bool zero1 = true;
  bool zero2 = true;

  bool nonzero() const { return !zero; }
  bool doubly_nonzero() const { return !zero1 && !zero2; }
  bool matches(Target resolved) const {
    return resolved == Target::DoublyNonZero ? doubly_nonzero() : nonzero();
  }
};

inline CycleInfo classify_cycle(const LabeledGraph& g, const Walk& w) {
  if (!is_cycle_walk(g, w)) throw GraphError("walk is not a cycle");
  CycleInfo c;
  c.walk = w;
  c.edges = w.edge_set();
  c.vertices = w.vertex_set();
  c.value = walk_value(g, w);
  c.zero = is_zero(c.value);
  if (g.group()->kind() == GroupKind::Sum) {
    c.zero1 = is_zero(project(c.value, Side::Left));
    c.zero2 = is_zero(project(c.value, Side::Right));
  } else {
    c.zero1 = c.zero2 = c.zero;
  }
  return c;
}

namespace detail {

struct CycleDfs {
  const LabeledGraph& g;
  std::size_t limit;
  const std::vector<bool>* removed;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (edge index, neighbour index)
  std::vector<char> on_path;
  std::vector<int> vpath, epath;
  std::vector<Walk> out;
  int start = 0;
  std::size_t steps = 0;  // search steps are budgeted at kStepsPerCycle * limit
  static constexpr std::size_t kStepsPerCycle = 64;

  CycleDfs(const LabeledGraph& graph, std::size_t lim, const std::vector<bool>* rem)
      : g(graph), limit(lim), removed(rem) {
    const std::size_t n = g.vertex_count();
    adj.resize(n);
    on_path.assign(n, 0);
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
      const EdgeRec& e = g.edge(ei);
      if (e.is_loop()) continue;
      int a = g.vertex_index(e.tail), b = g.vertex_index(e.head);
      adj[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(ei), b);
      adj[static_cast<std::size_t>(b)].emplace_back(static_cast<int>(ei), a);
    }
  }

  bool skip(int v) const { return removed && (*removed)[static_cast<std::size_t>(v)]; }

  void emit(const Walk& w) {
    if (out.size() >= limit)
      throw LimitExceeded("cycle enumeration exceeded the limit of " + std::to_string(limit));
    out.push_back(w);
  }

  void dfs(int v) {
    for (const auto& [ei, w] : adj[static_cast<std::size_t>(v)]) {
      if (w == start) {
        if (epath.empty() || ei == epath.front()) continue;
        if (g.edge(static_cast<std::size_t>(epath.front())).id > g.edge(static_cast<std::size_t>(ei)).id) continue;
        Walk c;
        for (int x : vpath) c.vertices.push_back(g.vertices()[static_cast<std::size_t>(x)]);
        c.vertices.push_back(g.vertices()[static_cast<std::size_t>(start)]);
        for (int x : epath) c.edges.push_back(g.edge(static_cast<std::size_t>(x)).id);
        c.edges.push_back(g.edge(static_cast<std::size_t>(ei)).id);
        emit(c);
        continue;
      }
      if (w < start || on_path[static_cast<std::size_t>(w)] || skip(w)) continue;
      if (++steps / kStepsPerCycle >= limit)
        throw LimitExceeded("cycle search exceeded the step budget for a limit of " + std::to_string(limit));
      on_path[static_cast<std::size_t>(w)] = 1;
      vpath.push_back(w);
      epath.push_back(ei);
      dfs(w);
      vpath.pop_back();
      epath.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  }

  void run() {
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
      const EdgeRec& e = g.edge(ei);
      if (!e.is_loop() || skip(g.vertex_index(e.tail))) continue;
      emit(Walk{{e.tail, e.tail}, {e.id}});
    }
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      if (skip(static_cast<int>(s))) continue;
      start = static_cast<int>(s);
      on_path[s] = 1;
      vpath = {start};
      epath.clear();
      dfs(start);
      on_path[s] = 0;
    }
  }
};

}  // namespace detail

// Every simple cycle once, rooted at its smallest vertex and oriented so that the first
// edge id is below the last. Sorted by edge-id tuple.
inline std::vector<Walk> enumerate_cycle_walks(const LabeledGraph& g, std::size_t limit = default_cycle_limit(),
                                               const std::vector<bool>* removed = nullptr) {
  detail::CycleDfs d(g, limit, removed);
  d.run();
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(d.out.size());
  for (std::size_t i = 0; i < d.out.size(); ++i) keys.emplace_back(d.out[i].edge_set(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Walk> res;
  res.reserve(keys.size());
  for (auto& k : keys) res.push_back(std::move(d.out[k.second]));
  return res;
}

inline std::vector<CycleInfo> enumerate_cycles(const LabeledGraph& g, std::size_t limit = default_cycle_limit()) {
  std::vector<CycleInfo> out;
  for (const Walk& w : enumerate_cycle_walks(g, limit)) out.push_back(classify_cycle(g, w));
  return out;
}

inline std::vector<CycleInfo> target_cycles(const LabeledGraph& g, Target t = Target::Auto,
                                            std::size_t limit = default_cycle_limit()) {
  Target r = resolve_target(g, t);
  std::vector<CycleInfo> out;
  for (CycleInfo& c : enumerate_cycles(g, limit))
    if (c.matches(r)) out.push_back(std::move(c));
  return out;
}

inline void require_sum(const LabeledGraph& g, const char* what) {
  if (g.group()->kind() != GroupKind::Sum)
    throw GraphError(std::string(what) + " needs a direct-sum labelling, got " + g.group()->describe());
}

inline std::vector<int> zero_edge_set(const std::vector<CycleInfo>& cycles, int coordinate) {
  std::set<int> z;
  for (const CycleInfo& c : cycles)
    if (coordinate == 1 ? c.zero1 : c.zero2) z.insert(c.edges.begin(), c.edges.end());
  return {z.begin(), z.end()};
}

// Edges lying on at least one cycle that is zero in coordinate i (1 or 2).
inline std::vector<int> zero_edge_set(const LabeledGraph& g, int coordinate, std::size_t limit = default_cycle_limit()) {
  require_sum(g, "zero_edge_set");
  if (coordinate != 1 && coordinate != 2) throw GraphError("coordinate must be 1 or 2");
  return zero_edge_set(enumerate_cycles(g, limit), coordinate);
}

struct RobustWitness {
  int coordinate = 1;
  Walk first;
  Walk second;
};

struct RobustResult {
  bool robust = true;
  std::optional<RobustWitness> witness;
};

// A violation is a pair of rooted Gamma_i-non-zero cycles with the same start, the same
// gamma_i value, different edge sets and a non-empty common part inside Z_i.
inline RobustResult is_robust(const LabeledGraph& g, std::size_t limit = default_cycle_limit()) {
  require_sum(g, "is_robust");
  std::vector<CycleInfo> cycles = enumerate_cycles(g, limit);
  for (int i = 1; i <= 2; ++i) {
    std::vector<int> zi = zero_edge_set(cycles, i);
    std::set<int> zset(zi.begin(), zi.end());
    Side side = i == 1 ? Side::Left : Side::Right;
    struct Rooted {
      std::size_t cycle;
      Walk walk;
    };
    std::map<std::pair<int, Element>, std::vector<Rooted>> groups;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      const CycleInfo& c = cycles[ci];
      if (i == 1 ? c.zero1 : c.zero2) continue;
      for (int dir = 0; dir < 2; ++dir) {
        Walk base = dir == 0 ? c.walk : c.walk.reversed();
        for (std::size_t k = 0; k < base.length(); ++k) {
          Walk w = base.rotated(k);
          Element gv = project(walk_value(g, w), side);
          groups[{w.start(), gv}].push_back({ci, w});
        }
      }
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const CycleInfo& c1 = cycles[members[a].cycle];
          const CycleInfo& c2 = cycles[members[b].cycle];
          if (c1.edges == c2.edges) continue;
          std::vector<int> common;
          std::set_intersection(c1.edges.begin(), c1.edges.end(), c2.edges.begin(), c2.edges.end(),
                                std::back_inserter(common));
          if (common.empty()) continue;
          bool inside = std::all_of(common.begin(), common.end(), [&](int e) { return zset.count(e) > 0; });
          if (!inside) continue;
          RobustResult r;
          r.robust = false;
          r.witness = RobustWitness{i, members[a].walk, members[b].walk};
          return r;
        }
      }
    }
  }
  return {};
}

}  // namespace glg
