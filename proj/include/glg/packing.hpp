#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glg/cycles.hpp"

namespace glg {

// Vertex sets over indices 0..n-1; members sorted.
struct SetSystem {
  int n = 0;
  std::vector<std::vector<int>> sets;
};

namespace detail {

// Branches on a pivot vertex: one branch per set through it (earlier ones excluded),
// plus a branch where the pivot takes no further set.
struct PackingSearch {
  const SetSystem& sys;
  int capacity;
  std::vector<int> cap;
  std::vector<char> alive;
  std::vector<std::vector<int>> through;  // set indices per vertex
  std::vector<int> chosen, best;

  PackingSearch(const SetSystem& s, int c) : sys(s), capacity(c) {
    cap.assign(static_cast<std::size_t>(s.n), c);
    alive.assign(s.sets.size(), 1);
    through.resize(static_cast<std::size_t>(s.n));
    for (std::size_t i = 0; i < s.sets.size(); ++i)
      for (int v : s.sets[i]) through[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }

  int upper_bound(int alive_count) const {
    std::size_t min_len = SIZE_MAX;
    std::vector<int> load(static_cast<std::size_t>(sys.n), 0);
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
      if (!alive[i]) continue;
      min_len = std::min(min_len, sys.sets[i].size());
      for (int v : sys.sets[i]) ++load[static_cast<std::size_t>(v)];
    }
    if (alive_count == 0) return 0;
    long long room = 0;
    for (int v = 0; v < sys.n; ++v) room += std::min(load[static_cast<std::size_t>(v)], cap[static_cast<std::size_t>(v)]);
    return std::min<long long>(alive_count, room / static_cast<long long>(min_len));
  }

  void kill(std::size_t i, std::vector<int>& undo) {
    if (alive[i]) {
      alive[i] = 0;
      undo.push_back(static_cast<int>(i));
    }
  }

  void run() {
    int count = 0;
    for (char a : alive) count += a;
    search(count);
  }

  void search(int alive_count) {
    if (static_cast<int>(chosen.size()) > static_cast<int>(best.size())) best = chosen;
    if (alive_count == 0) return;
    if (static_cast<int>(chosen.size()) + upper_bound(alive_count) <= static_cast<int>(best.size())) return;
    int pivot = -1;
    std::size_t pivot_load = SIZE_MAX;
    for (int v = 0; v < sys.n; ++v) {
      std::size_t load = 0;
      for (int si : through[static_cast<std::size_t>(v)]) load += alive[static_cast<std::size_t>(si)] ? 1 : 0;
      if (load > 0 && load < pivot_load) {
        pivot_load = load;
        pivot = v;
      }
    }
    std::vector<int> excluded;
    for (int si : through[static_cast<std::size_t>(pivot)]) {
      if (!alive[static_cast<std::size_t>(si)]) continue;
      std::vector<int> undo;
      kill(static_cast<std::size_t>(si), undo);
      for (int v : sys.sets[static_cast<std::size_t>(si)]) {
        if (--cap[static_cast<std::size_t>(v)] == 0)
          for (int sj : through[static_cast<std::size_t>(v)]) kill(static_cast<std::size_t>(sj), undo);
      }
      chosen.push_back(si);
      search(alive_count - static_cast<int>(undo.size()) - static_cast<int>(excluded.size()));
      chosen.pop_back();
      for (int v : sys.sets[static_cast<std::size_t>(si)]) ++cap[static_cast<std::size_t>(v)];
      for (int u : undo) alive[static_cast<std::size_t>(u)] = 1;
      // later branches exclude this set
      alive[static_cast<std::size_t>(si)] = 0;
      excluded.push_back(si);
    }
    search(alive_count - static_cast<int>(excluded.size()));
    for (int si : excluded) alive[static_cast<std::size_t>(si)] = 1;
  }
};

struct HittingSearch {
  const SetSystem& sys;
  std::vector<std::vector<int>> through;
  std::vector<int> hit_count;
  std::vector<char> forbidden;

  explicit HittingSearch(const SetSystem& s) : sys(s) {
    through.resize(static_cast<std::size_t>(s.n));
    for (std::size_t i = 0; i < s.sets.size(); ++i)
      for (int v : s.sets[i]) through[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    hit_count.assign(s.sets.size(), 0);
    forbidden.assign(static_cast<std::size_t>(s.n), 0);
  }

  void take(int v, int d) {
    for (int si : through[static_cast<std::size_t>(v)]) hit_count[static_cast<std::size_t>(si)] += d;
  }

  // Greedy disjoint unhit sets: a lower bound on what remains to pay.
  int lower_bound() const {
    std::vector<char> used(static_cast<std::size_t>(sys.n), 0);
    int lb = 0;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
      if (hit_count[i]) continue;
      bool ok = true;
      for (int v : sys.sets[i])
        if (used[static_cast<std::size_t>(v)]) ok = false;
      if (!ok) continue;
      ++lb;
      for (int v : sys.sets[i]) used[static_cast<std::size_t>(v)] = 1;
    }
    return lb;
  }

  // Can the unhit sets be hit with at most k more vertices, avoiding forbidden ones?
  bool feasible(int k) {
    int pick = -1;
    std::size_t pick_free = SIZE_MAX;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
      if (hit_count[i]) continue;
      std::size_t free = 0;
      for (int v : sys.sets[i]) free += forbidden[static_cast<std::size_t>(v)] ? 0 : 1;
      if (free < pick_free) {
        pick_free = free;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) return true;
    if (k == 0 || pick_free == 0) return false;
    if (lower_bound() > k) return false;
    std::vector<int> tried;
    bool ok = false;
    for (int v : sys.sets[static_cast<std::size_t>(pick)]) {
      if (forbidden[static_cast<std::size_t>(v)]) continue;
      take(v, 1);
      ok = feasible(k - 1);
      take(v, -1);
      if (ok) break;
      forbidden[static_cast<std::size_t>(v)] = 1;
      tried.push_back(v);
    }
    for (int v : tried) forbidden[static_cast<std::size_t>(v)] = 0;
    return ok;
  }
};

}  // namespace detail

// Maximum number of sets with every element used at most `capacity` times.
// Returns indices of the chosen sets in ascending order.
inline std::vector<int> max_set_packing(const SetSystem& sys, int capacity = 1) {
  detail::PackingSearch s(sys, capacity);
  s.run();
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

// Minimum vertex set meeting every set; among minimum ones the lexicographically
// smallest sorted tuple.
inline std::vector<int> min_hitting_set(const SetSystem& sys) {
  for (const auto& s : sys.sets)
    if (s.empty()) throw GraphError("cannot hit an empty set");
  detail::HittingSearch h(sys);
  int k = 0;
  while (!h.feasible(k)) ++k;
  std::vector<int> out;
  int remaining = k;
  for (int v = 0; v < sys.n && remaining > 0; ++v) {
    h.take(v, 1);
    if (h.feasible(remaining - 1)) {
      out.push_back(v);
      --remaining;
    } else {
      h.take(v, -1);
    }
  }
  return out;
}

struct CyclePacking {
  std::vector<CycleInfo> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
};

struct Transversal {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

inline SetSystem cycle_set_system(const LabeledGraph& g, const std::vector<CycleInfo>& cycles) {
  SetSystem sys;
  sys.n = static_cast<int>(g.vertex_count());
  for (const CycleInfo& c : cycles) {
    std::vector<int> s;
    for (int v : c.vertices) s.push_back(g.vertex_index(v));
    std::sort(s.begin(), s.end());
    sys.sets.push_back(std::move(s));
  }
  return sys;
}

inline CyclePacking pack_cycles(const LabeledGraph& g, const std::vector<CycleInfo>& cycles, int capacity) {
  CyclePacking p;
  for (int i : max_set_packing(cycle_set_system(g, cycles), capacity)) p.cycles.push_back(cycles[static_cast<std::size_t>(i)]);
  return p;
}

inline Transversal cover_cycles(const LabeledGraph& g, const std::vector<CycleInfo>& cycles) {
  Transversal t;
  for (int v : min_hitting_set(cycle_set_system(g, cycles))) t.vertices.push_back(g.vertices()[static_cast<std::size_t>(v)]);
  return t;
}

inline CyclePacking max_disjoint_nonzero_cycles(const LabeledGraph& g, Target t = Target::Auto,
                                                std::size_t limit = default_cycle_limit()) {
  return pack_cycles(g, target_cycles(g, t, limit), 1);
}

inline CyclePacking max_half_integral_cycles(const LabeledGraph& g, Target t = Target::Auto,
                                             std::size_t limit = default_cycle_limit()) {
  return pack_cycles(g, target_cycles(g, t, limit), 2);
}

inline Transversal min_transversal(const LabeledGraph& g, Target t = Target::Auto,
                                   std::size_t limit = default_cycle_limit()) {
  return cover_cycles(g, target_cycles(g, t, limit));
}

struct PackCoverReport {
  Target target = Target::Auto;
  int nu = 0;
  int nu_half = 0;
  int tau = 0;
  bool nu_half_exact = true;
  std::vector<Walk> packing;
  std::vector<Walk> half_packing;
  std::vector<int> transversal;
};

inline PackCoverReport pack_cover_report(const LabeledGraph& g, Target t = Target::Auto,
                                         std::size_t limit = default_cycle_limit()) {
  PackCoverReport r;
  r.target = resolve_target(g, t);
  std::vector<CycleInfo> cycles = target_cycles(g, r.target, limit);
  CyclePacking p = pack_cycles(g, cycles, 1);
  CyclePacking h = pack_cycles(g, cycles, 2);
  Transversal x = cover_cycles(g, cycles);
  r.nu = p.size();
  r.nu_half = h.size();
  r.tau = x.size();
  for (const auto& c : p.cycles) r.packing.push_back(c.walk);
  for (const auto& c : h.cycles) r.half_packing.push_back(c.walk);
  r.transversal = x.vertices;
  return r;
}

// Witness checks against the definitions; an empty string means the witness is sound.
inline std::string check_cycle_packing(const LabeledGraph& g, const std::vector<Walk>& family, Target t, int capacity) {
  Target r = resolve_target(g, t);
  std::map<int, int> load;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_cycle_walk(g, family[i])) return "member " + std::to_string(i) + " is not a cycle";
    CycleInfo c = classify_cycle(g, family[i]);
    if (!c.matches(r)) return "member " + std::to_string(i) + " is not " + target_name(r);
    if (!seen.insert(c.edges).second) return "member " + std::to_string(i) + " repeats an earlier cycle";
    for (int v : c.vertices)
      if (++load[v] > capacity) return "vertex " + std::to_string(v) + " is used more than " + std::to_string(capacity) + " times";
  }
  return {};
}

inline std::string check_transversal(const LabeledGraph& g, const std::vector<int>& x, Target t,
                                     std::size_t limit = default_cycle_limit()) {
  for (int v : x)
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
  LabeledGraph rest = g.without_vertices(x);
  Target r = resolve_target(g, t);
  for (const Walk& w : enumerate_cycle_walks(rest, limit)) {
    CycleInfo c = classify_cycle(rest, w);
    if (!c.matches(r)) continue;
    std::string s;
    for (std::size_t i = 0; i < c.edges.size(); ++i) s += (i ? "," : "") + std::to_string(c.edges[i]);
    return "uncovered cycle with edges {" + s + "}";
  }
  return {};
}

// A-paths: at least one edge, distinct ends in A, interior disjoint from A.
struct APath {
  Walk walk;
  std::vector<int> vertices;  // sorted
};

inline std::vector<APath> nonzero_a_path_list(const LabeledGraph& g, const std::vector<int>& a,
                                              std::size_t limit = default_cycle_limit()) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_a(n, 0);
  for (int v : a) in_a[static_cast<std::size_t>(g.vertex_index(v))] = 1;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const EdgeRec& e = g.edge(ei);
    if (e.is_loop()) continue;
    int x = g.vertex_index(e.tail), y = g.vertex_index(e.head);
    adj[static_cast<std::size_t>(x)].emplace_back(static_cast<int>(ei), y);
    adj[static_cast<std::size_t>(y)].emplace_back(static_cast<int>(ei), x);
  }
  std::map<std::vector<int>, APath> found;
  std::size_t produced = 0;
  std::vector<char> on(n, 0);
  std::vector<int> vp, ep;
  std::function<void(int, const Element&)> dfs = [&](int v, const Element& acc) {
    for (const auto& [ei, w] : adj[static_cast<std::size_t>(v)]) {
      if (on[static_cast<std::size_t>(w)]) continue;
      Element nacc = op(acc, edge_value_towards(g, static_cast<std::size_t>(ei), g.vertices()[static_cast<std::size_t>(w)]));
      if (in_a[static_cast<std::size_t>(w)]) {
        if (w < vp.front() || is_zero(nacc)) continue;
        if (++produced > limit) throw LimitExceeded("A-path enumeration exceeded the limit of " + std::to_string(limit));
        APath p;
        for (int x : vp) p.walk.vertices.push_back(g.vertices()[static_cast<std::size_t>(x)]);
        p.walk.vertices.push_back(g.vertices()[static_cast<std::size_t>(w)]);
        for (int x : ep) p.walk.edges.push_back(g.edge(static_cast<std::size_t>(x)).id);
        p.walk.edges.push_back(g.edge(static_cast<std::size_t>(ei)).id);
        p.vertices = p.walk.vertices;
        std::sort(p.vertices.begin(), p.vertices.end());
        found.emplace(p.vertices, std::move(p));
        continue;
      }
      on[static_cast<std::size_t>(w)] = 1;
      vp.push_back(w);
      ep.push_back(ei);
      dfs(w, nacc);
      vp.pop_back();
      ep.pop_back();
      on[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_a[s]) continue;
    on[s] = 1;
    vp = {static_cast<int>(s)};
    ep.clear();
    dfs(static_cast<int>(s), g.group()->zero());
    on[s] = 0;
  }
  std::vector<APath> out;
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

struct APathReport {
  int nu = 0;
  int tau = 0;
  std::vector<Walk> packing;
  std::vector<int> cover;
};

inline APathReport nonzero_A_paths(const LabeledGraph& g, const std::vector<int>& a,
                                   std::size_t limit = default_cycle_limit()) {
  std::vector<APath> paths = nonzero_a_path_list(g, a, limit);
  SetSystem sys;
  sys.n = static_cast<int>(g.vertex_count());
  for (const APath& p : paths) {
    std::vector<int> s;
    for (int v : p.vertices) s.push_back(g.vertex_index(v));
    std::sort(s.begin(), s.end());
    sys.sets.push_back(std::move(s));
  }
  APathReport r;
  for (int i : max_set_packing(sys, 1)) r.packing.push_back(paths[static_cast<std::size_t>(i)].walk);
  for (int v : min_hitting_set(sys)) r.cover.push_back(g.vertices()[static_cast<std::size_t>(v)]);
  r.nu = static_cast<int>(r.packing.size());
  r.tau = static_cast<int>(r.cover.size());
  return r;
}

}  // namespace glg
