#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glg/cycles.hpp"

namespace glg {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ReductionKind { Cycles, OddCycles, SCycles, OddSCycles, S1S2Cycles };

inline std::string reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Cycles: return "cycles";
    case ReductionKind::OddCycles: return "odd";
    case ReductionKind::SCycles: return "s";
    case ReductionKind::OddSCycles: return "odd-s";
    case ReductionKind::S1S2Cycles: return "s1s2";
  }
  return "?";
}

inline ReductionKind parse_reduction(const std::string& s) {
  for (auto k : {ReductionKind::Cycles, ReductionKind::OddCycles, ReductionKind::SCycles, ReductionKind::OddSCycles,
                 ReductionKind::S1S2Cycles})
    if (reduction_name(k) == s) return k;
  throw std::invalid_argument("unknown reduction '" + s + "'");
}

// The constrained-cycle problem a reduction starts from.
struct ReductionInstance {
  ReductionKind kind = ReductionKind::Cycles;
  LabeledGraph graph;  // labels ignored
  std::set<int> s;     // S, or S_1
  std::set<int> s2;    // S_2
};

namespace detail {

inline bool touches(const EdgeRec& e, const std::set<int>& s) { return s.count(e.tail) || s.count(e.head); }

// Orients every edge from its smaller end; the i-th edge by id gets exponent i (from 1).
template <class F>
LabeledGraph relabel_by_index(const LabeledGraph& g, const GroupPtr& group, F label) {
  std::vector<EdgeRec> es;
  std::vector<Element> ls;
  int i = 0;
  for (const EdgeRec& e : g.edges()) {
    ++i;
    EdgeRec o = e;
    if (o.tail > o.head) std::swap(o.tail, o.head);
    es.push_back(o);
    ls.push_back(label(o, i));
  }
  return LabeledGraph(group, g.vertices(), es, ls);
}

inline BigInt pow2(int i) { return BigInt(1) << i; }

}  // namespace detail

inline LabeledGraph reduce_plain_cycles(const LabeledGraph& g) {
  GroupPtr z = Group::integers(), grp = Group::sum(z, z);
  return detail::relabel_by_index(g, grp, [&](const EdgeRec&, int i) { return grp->pair(z->integer(detail::pow2(i)), z->integer(detail::pow2(i))); });
}

inline LabeledGraph reduce_odd_cycles(const LabeledGraph& g) {
  GroupPtr z2 = Group::cyclic(2), grp = Group::sum(z2, z2);
  return detail::relabel_by_index(g, grp, [&](const EdgeRec&, int) { return grp->pair(z2->residue(1), z2->residue(1)); });
}

inline LabeledGraph reduce_S_cycles(const LabeledGraph& g, const std::set<int>& s) {
  GroupPtr z = Group::integers(), grp = Group::sum(z, z);
  return detail::relabel_by_index(g, grp, [&](const EdgeRec& e, int i) {
    BigInt v = detail::touches(e, s) ? detail::pow2(i) : BigInt(0);
    return grp->pair(z->integer(v), z->integer(v));
  });
}

inline LabeledGraph reduce_odd_S_cycles(const LabeledGraph& g, const std::set<int>& s) {
  GroupPtr z2 = Group::cyclic(2), z = Group::integers(), grp = Group::sum(z2, z);
  return detail::relabel_by_index(g, grp, [&](const EdgeRec& e, int i) {
    return grp->pair(z2->residue(1), z->integer(detail::touches(e, s) ? detail::pow2(i) : BigInt(0)));
  });
}

inline LabeledGraph reduce_S1_S2(const LabeledGraph& g, const std::set<int>& s1, const std::set<int>& s2) {
  GroupPtr z = Group::integers(), grp = Group::sum(z, z);
  return detail::relabel_by_index(g, grp, [&](const EdgeRec& e, int i) {
    return grp->pair(z->integer(detail::touches(e, s1) ? detail::pow2(i) : BigInt(0)),
                     z->integer(detail::touches(e, s2) ? detail::pow2(i) : BigInt(0)));
  });
}

inline LabeledGraph reduce(const ReductionInstance& in) {
  switch (in.kind) {
    case ReductionKind::Cycles: return reduce_plain_cycles(in.graph);
    case ReductionKind::OddCycles: return reduce_odd_cycles(in.graph);
    case ReductionKind::SCycles: return reduce_S_cycles(in.graph, in.s);
    case ReductionKind::OddSCycles: return reduce_odd_S_cycles(in.graph, in.s);
    case ReductionKind::S1S2Cycles: return reduce_S1_S2(in.graph, in.s, in.s2);
  }
  throw std::logic_error("unreachable");
}

// Whether a cycle (as a walk in the original graph) is one the instance asks for.
inline bool is_constrained_cycle(const ReductionInstance& in, const Walk& c) {
  std::vector<int> vs = c.vertex_set();
  auto meets = [&](const std::set<int>& s) { return std::any_of(vs.begin(), vs.end(), [&](int v) { return s.count(v) > 0; }); };
  bool odd = c.length() % 2 == 1;
  switch (in.kind) {
    case ReductionKind::Cycles: return true;
    case ReductionKind::OddCycles: return odd;
    case ReductionKind::SCycles: return meets(in.s);
    case ReductionKind::OddSCycles: return odd && meets(in.s);
    case ReductionKind::S1S2Cycles: return meets(in.s) && meets(in.s2);
  }
  return false;
}

struct CorrespondenceReport {
  bool ok = true;
  std::size_t cycles = 0;
  std::size_t constrained = 0;
  std::size_t nonzero = 0;
  std::vector<int> mismatch;  // edge ids of the first disagreeing cycle
};

// Exhaustive comparison of constrained cycles of the original with non-zero cycles of
// the reduction; both graphs share vertex and edge ids.
inline CorrespondenceReport correspondence_check(const ReductionInstance& in, const LabeledGraph& reduced,
                                                 std::size_t limit = default_cycle_limit()) {
  CorrespondenceReport r;
  std::vector<Walk> orig = enumerate_cycle_walks(in.graph, limit);
  std::vector<Walk> red = enumerate_cycle_walks(reduced, limit);
  std::map<std::vector<int>, const Walk*> by_edges;
  for (const Walk& w : red) by_edges[w.edge_set()] = &w;
  r.cycles = orig.size();
  if (orig.size() != red.size()) {
    r.ok = false;
    return r;
  }
  for (const Walk& w : orig) {
    bool want = is_constrained_cycle(in, w);
    auto it = by_edges.find(w.edge_set());
    if (it == by_edges.end()) {
      r.ok = false;
      r.mismatch = w.edge_set();
      return r;
    }
    bool got = classify_cycle(reduced, *it->second).doubly_nonzero();
    r.constrained += want ? 1 : 0;
    r.nonzero += got ? 1 : 0;
    if (want != got && r.ok) {
      r.ok = false;
      r.mismatch = w.edge_set();
    }
  }
  return r;
}

// ---- embedded graphs

// A dart is one end of an edge: for a loop the first occurrence in the rotation is its
// tail end, the second its head end.
struct Dart {
  int edge = -1;  // edge id
  int end = 0;    // 0 tail, 1 head
  friend bool operator==(const Dart& a, const Dart& b) { return a.edge == b.edge && a.end == b.end; }
  friend bool operator<(const Dart& a, const Dart& b) { return std::tie(a.edge, a.end) < std::tie(b.edge, b.end); }
};

struct Face {
  std::vector<std::pair<int, int>> boundary;  // (edge id, +1 along / -1 against its orientation)
};

struct EmbeddedGraph {
  LabeledGraph graph;
  std::map<int, std::vector<int>> rotation;  // vertex -> cyclic order of edge ids at it
  std::map<int, int> sign;                   // edge id -> +1 or -1

  int sign_of(int e) const {
    auto it = sign.find(e);
    return it == sign.end() ? 1 : it->second;
  }
};

namespace detail {

struct DartTable {
  std::map<int, std::vector<Dart>> at;  // vertex -> darts in rotation order
  std::map<Dart, std::pair<int, std::size_t>> where;
};

inline DartTable dart_table(const EmbeddedGraph& eg) {
  const LabeledGraph& g = eg.graph;
  DartTable t;
  std::map<int, int> seen;
  for (int v : g.vertices()) {
    auto it = eg.rotation.find(v);
    std::vector<int> rot = it == eg.rotation.end() ? std::vector<int>{} : it->second;
    std::vector<Dart> ds;
    std::map<int, int> here;
    for (int e : rot) {
      if (!g.has_edge(e)) throw EmbeddingError("rotation at vertex " + std::to_string(v) + " names unknown edge " + std::to_string(e));
      const EdgeRec& er = g.edge_by_id(e);
      int k = here[e]++;
      if (er.is_loop()) {
        if (er.tail != v || k > 1) throw EmbeddingError("loop " + std::to_string(e) + " misplaced in rotation");
        ds.push_back(Dart{e, k});
      } else {
        if (k > 0 || (er.tail != v && er.head != v)) throw EmbeddingError("edge " + std::to_string(e) + " misplaced in rotation at " + std::to_string(v));
        ds.push_back(Dart{e, er.tail == v ? 0 : 1});
      }
      ++seen[e];
    }
    for (std::size_t i = 0; i < ds.size(); ++i) t.where[ds[i]] = {v, i};
    t.at[v] = ds;
  }
  for (const EdgeRec& e : g.edges())
    if (seen[e.id] != 2) throw EmbeddingError("edge " + std::to_string(e.id) + " must appear at both ends of the rotation system");
  for (const auto& kv : eg.sign)
    if (kv.second != 1 && kv.second != -1) throw EmbeddingError("edge signs must be +1 or -1");
  return t;
}

}  // namespace detail

// Face tracing on a signed rotation system. Each face is reported once, in one of its
// two directions.
inline std::vector<Face> trace_faces(const EmbeddedGraph& eg) {
  detail::DartTable t = detail::dart_table(eg);
  using State = std::pair<Dart, int>;  // leave through dart with local orientation
  std::set<State> used;
  std::vector<Face> faces;
  auto opposite = [](const Dart& d) { return Dart{d.edge, 1 - d.end}; };
  auto reverse_of = [&](const State& s) { return State{opposite(s.first), -s.second * eg.sign_of(s.first.edge)}; };
  std::vector<State> all;
  for (const auto& [v, ds] : t.at)
    for (const Dart& d : ds)
      for (int o : {1, -1}) all.push_back({d, o});
  for (const State& s0 : all) {
    if (used.count(s0)) continue;
    Face f;
    State s = s0;
    std::size_t guard = 0;
    do {
      if (!used.insert(s).second) throw EmbeddingError("face tracing is inconsistent");
      used.insert(reverse_of(s));
      f.boundary.push_back({s.first.edge, s.first.end == 0 ? 1 : -1});
      Dart arrive = opposite(s.first);
      int o = s.second * eg.sign_of(s.first.edge);
      auto [w, idx] = t.where.at(arrive);
      const std::vector<Dart>& rot = t.at[w];
      std::size_t k = rot.size();
      Dart nxt = o == 1 ? rot[(idx + 1) % k] : rot[(idx + k - 1) % k];
      s = {nxt, o};
      if (++guard > 4 * all.size() + 4) throw EmbeddingError("face tracing does not terminate");
    } while (s != s0);
    faces.push_back(std::move(f));
  }
  return faces;
}

inline long long euler_characteristic(const EmbeddedGraph& eg) {
  return static_cast<long long>(eg.graph.vertex_count()) - static_cast<long long>(eg.graph.edge_count()) +
         static_cast<long long>(trace_faces(eg).size());
}

// True when vertex flips can make every edge sign positive.
inline bool is_orientable(const EmbeddedGraph& eg) {
  const LabeledGraph& g = eg.graph;
  std::map<int, int> flip;
  for (int root : g.vertices()) {
    if (flip.count(root)) continue;
    flip[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int ei : g.incident(static_cast<std::size_t>(g.vertex_index(v)))) {
        const EdgeRec& e = g.edge(static_cast<std::size_t>(ei));
        int s = eg.sign_of(e.id);
        if (e.is_loop()) {
          if (s != 1) return false;
          continue;
        }
        int u = e.tail == v ? e.head : e.tail;
        int want = flip[v] * s;
        auto it = flip.find(u);
        if (it == flip.end()) {
          flip[u] = want;
          stack.push_back(u);
        } else if (it->second != want) {
          return false;
        }
      }
    }
  }
  return true;
}

struct HomologyResult {
  GroupPtr h1;                // H_1 of the surface given by the faces
  LabeledGraph labeled;       // over H_1 (+) H_1
  std::vector<int> non_tree;  // edge ids indexing the cycle basis
  std::vector<Element> basis_class;  // class of the fundamental cycle of each non-tree edge
  std::vector<Face> faces;
  IntMatrix relations;        // faces x non-tree edges
};

// Tree edges get 0; a non-tree edge e gets (h(C_e), h(C_e)) for its fundamental cycle C_e.
inline HomologyResult homology_labeling(const EmbeddedGraph& eg) {
  const LabeledGraph& g = eg.graph;
  HomologyResult r;
  r.faces = trace_faces(eg);
  SpanningForest f = spanning_forest(g);
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!f.in_tree[i]) {
      col[g.edge(i).id] = r.non_tree.size();
      r.non_tree.push_back(g.edge(i).id);
    }
  const std::size_t beta = r.non_tree.size();
  r.relations = IntMatrix(r.faces.size(), beta);
  for (std::size_t i = 0; i < r.faces.size(); ++i)
    for (auto [e, dir] : r.faces[i].boundary) {
      auto it = col.find(e);
      if (it != col.end()) r.relations.at(i, it->second) += dir;
    }
  SmithForm snf = smith_normal_form(r.relations);
  std::vector<std::size_t> kept;  // diagonal positions with a non-unit factor
  for (std::size_t i = 0; i < beta; ++i) {
    BigInt d = i < std::min(snf.S.rows, snf.S.cols) ? snf.S.at(i, i) : BigInt(0);
    if (d != 1 && d != -1) kept.push_back(i);
  }
  r.h1 = Group::quotient(r.relations);
  for (std::size_t k = 0; k < beta; ++k) {
    std::vector<long long> coords;
    for (std::size_t i : kept) coords.push_back(static_cast<long long>(snf.V.at(k, i)));
    r.basis_class.push_back(r.h1->vector(coords));
  }
  GroupPtr sum = Group::sum(r.h1, r.h1);
  std::vector<Element> ls;
  for (const EdgeRec& e : g.edges()) {
    auto it = col.find(e.id);
    Element a = it == col.end() ? r.h1->zero() : r.basis_class[it->second];
    ls.push_back(sum->pair(a, a));
  }
  r.labeled = g.relabel(sum, ls);
  return r;
}

// Homology class of a closed walk read directly from its non-tree edge traversals.
inline Element homology_class(const HomologyResult& hr, const Walk& w) {
  Element acc = hr.h1->zero();
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    auto it = std::find(hr.non_tree.begin(), hr.non_tree.end(), w.edges[i]);
    if (it == hr.non_tree.end()) continue;
    const EdgeRec& e = hr.labeled.edge_by_id(w.edges[i]);
    const Element& c = hr.basis_class[static_cast<std::size_t>(it - hr.non_tree.begin())];
    bool forward = e.is_loop() || w.vertices[i] == e.tail;
    acc = op(acc, forward ? c : inv(c));
  }
  return acc;
}

}  // namespace glg
