#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glg/cycles.hpp"

namespace glg {

// Raised when an input misses one of a construction's hypotheses; `hypothesis` names it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string hyp, const std::string& msg)
      : std::invalid_argument(hyp + ": " + msg), hypothesis(std::move(hyp)) {}
  std::string hypothesis;
};

namespace detail {

inline Element coord(const Element& v, int i) { return project(v, i == 1 ? Side::Left : Side::Right); }

inline bool coord_zero(const LabeledGraph& g, const Walk& w, int i) { return is_zero(coord(walk_value(g, w), i)); }

inline std::set<int> vset(const Walk& w) { return {w.vertices.begin(), w.vertices.end()}; }

inline bool meets(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (b.count(x)) return true;
  return false;
}

inline void need_cycle(const LabeledGraph& g, const Walk& c, const std::string& name) {
  if (!is_cycle_walk(g, c)) throw PreconditionError(name + " is a cycle", "the walk given for " + name + " is not a cycle");
}

inline void need_path(const LabeledGraph& g, const Walk& p, const std::string& name) {
  if (p.edges.empty() || !is_path_walk(g, p)) throw PreconditionError(name + " is a path", "the walk given for " + name + " is not a path with an edge");
}

// Orients a path to run from set `from` to set `to`, both ends on them and the
// interior off both.
inline Walk orient_between(const Walk& p, const std::set<int>& from, const std::set<int>& to, const std::string& name,
                           const std::string& hyp) {
  Walk w = p;
  if (!from.count(w.start())) w = w.reversed();
  if (!from.count(w.start()) || !to.count(w.end()))
    throw PreconditionError(hyp, name + " does not join the two cycles");
  for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i)
    if (from.count(w.vertices[i]) || to.count(w.vertices[i]))
      throw PreconditionError(hyp, name + " has an interior vertex on one of the cycles");
  return w;
}

}  // namespace detail

// Given disjoint cycles C1 (Gamma_1-non-zero), C2 (Gamma_2-non-zero) and two disjoint
// C1-C2 paths, returns a cycle in their union that is non-zero in both coordinates.
inline Walk combine_two_cycles(const LabeledGraph& g, const Walk& c1, const Walk& c2, const Walk& p1, const Walk& p2) {
  using namespace detail;
  require_sum(g, "combine_two_cycles");
  need_cycle(g, c1, "C1");
  need_cycle(g, c2, "C2");
  need_path(g, p1, "P1");
  need_path(g, p2, "P2");
  std::set<int> v1 = vset(c1), v2 = vset(c2);
  if (meets(v1, v2)) throw PreconditionError("C1 and C2 are disjoint", "the cycles share a vertex");
  if (coord_zero(g, c1, 1)) throw PreconditionError("C1 is Gamma_1-non-zero", "C1 is Gamma_1-zero");
  if (coord_zero(g, c2, 2)) throw PreconditionError("C2 is Gamma_2-non-zero", "C2 is Gamma_2-zero");
  Walk a = orient_between(p1, v1, v2, "P1", "P1 is a C1-C2 path");
  Walk b = orient_between(p2, v1, v2, "P2", "P2 is a C1-C2 path");
  if (meets(vset(a), vset(b))) throw PreconditionError("P1 and P2 are disjoint", "the connecting paths share a vertex");

  if (!coord_zero(g, c1, 2)) return c1;
  if (!coord_zero(g, c2, 1)) return c2;

  auto arcs1 = cycle_arcs(c1, b.start(), a.start());  // a2 -> a1 on C1
  auto arcs2 = cycle_arcs(c2, a.end(), b.end());      // b1 -> b2 on C2
  auto build = [&](bool swap1, bool swap2) {
    Walk w = a;
    w = concat_walks(w, swap2 ? arcs2.second : arcs2.first);
    w = concat_walks(w, b.reversed());
    w = concat_walks(w, swap1 ? arcs1.second : arcs1.first);
    return w;
  };
  Walk cp = build(false, false);
  Element v = walk_value(g, cp);
  bool z1 = is_zero(coord(v, 1)), z2 = is_zero(coord(v, 2));
  Walk out = cp;
  if (z1 && !z2)
    out = build(true, false);
  else if (z2 && !z1)
    out = build(false, true);
  else if (z1 && z2)
    out = build(true, true);
  if (!is_cycle_walk(g, out) || coord_zero(g, out, 1) || coord_zero(g, out, 2))
    throw std::logic_error("combine_two_cycles produced a cycle that is zero in some coordinate");
  return out;
}

struct BrickResult {
  Walk cycle;
  Walk i1;
  Walk i2;
  std::vector<std::pair<int, Element>> shifts;  // nulls the skeleton
  bool q1_first_arc = true;
  bool q2_first_arc = true;
};

// Brick combiner: cycles C, C1, C2 with attachment paths P1, P1' (to C1) and P2, P2'
// (to C2) whose ends on C appear in the cyclic order p1, p1', p2, p2'.
inline BrickResult combine_brick(const LabeledGraph& g, const Walk& c, const Walk& c1, const Walk& c2, const Walk& p1,
                                 const Walk& p1b, const Walk& p2, const Walk& p2b) {
  using namespace detail;
  require_sum(g, "combine_brick");
  need_cycle(g, c, "C");
  need_cycle(g, c1, "C1");
  need_cycle(g, c2, "C2");
  need_path(g, p1, "P1");
  need_path(g, p1b, "P1'");
  need_path(g, p2, "P2");
  need_path(g, p2b, "P2'");
  std::set<int> vc = vset(c), v1 = vset(c1), v2 = vset(c2);
  if (meets(vc, v1) || meets(vc, v2) || meets(v1, v2)) throw PreconditionError("C, C1, C2 are disjoint", "two of the cycles share a vertex");
  Walk a1 = orient_between(p1, vc, v1, "P1", "P1 is a C-C1 path");
  Walk b1 = orient_between(p1b, vc, v1, "P1'", "P1' is a C-C1 path");
  Walk a2 = orient_between(p2, vc, v2, "P2", "P2 is a C-C2 path");
  Walk b2 = orient_between(p2b, vc, v2, "P2'", "P2' is a C-C2 path");
  std::vector<Walk> ps{a1, b1, a2, b2};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (meets(vset(ps[i]), vset(ps[j]))) throw PreconditionError("the four paths are pairwise disjoint", "two attachment paths share a vertex");
  if (meets(vset(a1), v2) || meets(vset(b1), v2)) throw PreconditionError("P1 and P1' avoid C2", "a C1 attachment path meets C2");
  if (meets(vset(a2), v1) || meets(vset(b2), v1)) throw PreconditionError("P2 and P2' avoid C1", "a C2 attachment path meets C1");
  if (coord_zero(g, c1, 1)) throw PreconditionError("C1 is Gamma_1-non-zero", "C1 is Gamma_1-zero");
  if (!coord_zero(g, c1, 2)) throw PreconditionError("C1 is Gamma_2-zero", "C1 is Gamma_2-non-zero");
  if (coord_zero(g, c2, 2)) throw PreconditionError("C2 is Gamma_2-non-zero", "C2 is Gamma_2-zero");

  int pp1 = a1.start(), pq1 = b1.start(), pp2 = a2.start(), pq2 = b2.start();
  // cyclic order check: p1 and p2 separate p1' from p2' on C
  auto arcs = cycle_arcs(c, pp1, pp2);
  auto on = [](const Walk& w, int v) {
    for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i)
      if (w.vertices[i] == v) return true;
    return false;
  };
  bool sep = (on(arcs.first, pq1) && on(arcs.second, pq2)) || (on(arcs.first, pq2) && on(arcs.second, pq1));
  if (!sep) throw PreconditionError("p1, p1', p2, p2' occur in this cyclic order on C", "the attachment ends are out of order");

  BrickResult res;
  // I1: p2' .. p1 avoiding p2;  I2: p1' .. p2 avoiding p1
  auto i1s = cycle_arcs(c, pq2, pp1);
  res.i1 = on(i1s.first, pp2) ? i1s.second : i1s.first;
  auto i2s = cycle_arcs(c, pq1, pp2);
  res.i2 = on(i2s.first, pp1) ? i2s.second : i2s.first;

  // null the skeleton by shifting along it (it is a forest of two paths)
  std::vector<int> skel;
  for (const Walk* w : {&res.i1, &res.i2, &a1, &b1, &a2, &b2}) skel.insert(skel.end(), w->edges.begin(), w->edges.end());
  LabeledGraph forest = g.edge_subgraph(skel);
  BipartiteResult br = is_gamma_bipartite(forest);
  if (!br.bipartite) throw std::logic_error("attachment skeleton is not a forest");
  res.shifts = br.shifts;
  LabeledGraph h = apply_shifts(g, br.shifts);

  int q1 = a1.end(), q1b = b1.end(), q2 = a2.end(), q2b = b2.end();
  auto qa1 = cycle_arcs(c1, q1, q1b);
  auto qa2 = cycle_arcs(c2, q2, q2b);
  Element y1 = detail::coord(walk_value(h, qa1.first), 2);
  Element y2a = detail::coord(walk_value(h, qa2.first), 2);
  res.q2_first_arc = !is_zero(op(y1, y2a));
  const Walk& qq2 = res.q2_first_arc ? qa2.first : qa2.second;
  Element x2 = detail::coord(walk_value(h, qq2), 1);
  Element x1a = detail::coord(walk_value(h, qa1.first), 1);
  res.q1_first_arc = !is_zero(op(x1a, x2));
  const Walk& qq1 = res.q1_first_arc ? qa1.first : qa1.second;

  // p1 -P1-> q1 -Q1-> q1' -P1'^-1-> p1' -I2-> p2 -P2-> q2 -Q2-> q2' -P2'^-1-> p2' -I1-> p1
  Walk d = a1;
  d = concat_walks(d, qq1);
  d = concat_walks(d, b1.reversed());
  d = concat_walks(d, res.i2);
  d = concat_walks(d, a2);
  d = concat_walks(d, qq2);
  d = concat_walks(d, b2.reversed());
  d = concat_walks(d, res.i1);
  if (!is_cycle_walk(g, d) || coord_zero(g, d, 1) || coord_zero(g, d, 2))
    throw std::logic_error("combine_brick produced a cycle that is zero in some coordinate");
  res.cycle = d;
  return res;
}

struct ExchangeResult {
  std::vector<Walk> paths;          // first t Gamma_1-non-zero, then t Gamma_2-non-zero
  std::vector<int> potential_trace;  // potential before each exchange and at the end
  int exchanges = 0;
};

inline bool is_s_path(const LabeledGraph& g, const Walk& p, const std::set<int>& s) {
  if (p.edges.empty() || !is_path_walk(g, p)) return false;
  if (!s.count(p.start()) || !s.count(p.end())) return false;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
    if (s.count(p.vertices[i])) return false;
  return true;
}

// Number of edges on the R paths that lie on no Q path.
inline int exchange_potential(const std::vector<Walk>& q, const std::vector<Walk>& r) {
  std::set<int> qe;
  for (const Walk& w : q) qe.insert(w.edges.begin(), w.edges.end());
  int n = 0;
  for (const Walk& w : r)
    for (int e : w.edges) n += qe.count(e) ? 0 : 1;
  return n;
}

// From 3t disjoint Gamma_1-non-zero S-paths Q and t disjoint Gamma_2-non-zero S-paths R,
// reroutes R along Q until R meets at most 2t paths of Q.
inline ExchangeResult exchange_reroute(const LabeledGraph& g, const std::vector<int>& s_in, const std::vector<Walk>& q,
                                       std::vector<Walk> r) {
  using namespace detail;
  require_sum(g, "exchange_reroute");
  std::set<int> s(s_in.begin(), s_in.end());
  const std::size_t t = r.size();
  if (t == 0) throw PreconditionError("R is non-empty", "no Gamma_2-non-zero paths given");
  if (q.size() != 3 * t) throw PreconditionError("|Q| = 3|R|", "got " + std::to_string(q.size()) + " Q paths for " + std::to_string(t) + " R paths");
  auto check_family = [&](const std::vector<Walk>& fam, int coordinate, const std::string& name) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (!is_s_path(g, fam[i], s)) throw PreconditionError(name + " paths are S-paths", name + std::to_string(i + 1) + " is not an S-path");
      if (coord_zero(g, fam[i], coordinate))
        throw PreconditionError(name + " paths are Gamma_" + std::to_string(coordinate) + "-non-zero", name + std::to_string(i + 1) + " is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (meets(vset(fam[i]), vset(fam[j]))) throw PreconditionError(name + " paths are disjoint", name + std::to_string(j + 1) + " meets " + name + std::to_string(i + 1));
    }
  };
  check_family(q, 1, "Q");
  check_family(r, 2, "R");

  ExchangeResult res;
  while (true) {
    std::set<int> rv;
    for (const Walk& w : r) rv.insert(w.vertices.begin(), w.vertices.end());
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (meets(vset(q[i]), rv)) hit.push_back(i);
    int pot = exchange_potential(q, r);
    res.potential_trace.push_back(pot);
    if (hit.size() <= 2 * t) break;
    std::size_t qi = q.size();
    for (std::size_t i : hit)
      if (!rv.count(q[i].start()) && !rv.count(q[i].end())) {
        qi = i;
        break;
      }
    if (qi == q.size()) throw std::logic_error("no Q path meets R away from its ends");
    const Walk& qp = q[qi];
    std::size_t k = 1;
    while (!rv.count(qp.vertices[k])) ++k;
    int rvert = qp.vertices[k];
    std::size_t ri = 0;
    while (!position_in(r[ri], rvert)) ++ri;
    std::size_t pos = *position_in(r[ri], rvert);
    Walk head = subwalk(qp, 0, k);                              // q .. r along Q1
    Walk to_start = subwalk(r[ri], 0, pos).reversed();          // r .. start of R1
    Walk to_end = subwalk(r[ri], pos, r[ri].vertices.size() - 1);  // r .. end of R1
    Walk cand = concat_walks(head, to_start);
    if (coord_zero(g, cand, 2)) cand = concat_walks(head, to_end);
    if (coord_zero(g, cand, 2)) throw std::logic_error("both rewirings are Gamma_2-zero");
    r[ri] = cand;
    ++res.exchanges;
    if (exchange_potential(q, r) >= pot) throw std::logic_error("exchange did not decrease the potential");
  }
  std::set<int> rv;
  for (const Walk& w : r) rv.insert(w.vertices.begin(), w.vertices.end());
  for (const Walk& w : q) {
    if (res.paths.size() == t) break;
    if (!meets(vset(w), rv)) res.paths.push_back(w);
  }
  if (res.paths.size() != t) throw std::logic_error("too few Q paths avoid R");
  res.paths.insert(res.paths.end(), r.begin(), r.end());
  return res;
}

// Model of a clique minor: one tree per clique vertex, one or two graph edges per pair.
struct KtModel {
  struct Tree {
    std::vector<int> vertices;
    std::vector<int> edges;
  };
  std::vector<Tree> trees;
  std::map<std::pair<int, int>, std::vector<int>> links;  // (x, y) with x < y

  int t() const { return static_cast<int>(trees.size()); }
  const std::vector<int>& link(int x, int y) const {
    auto it = links.find({std::min(x, y), std::max(x, y)});
    static const std::vector<int> none;
    return it == links.end() ? none : it->second;
  }
};

struct ModelReport {
  bool ok = true;
  std::string clause;  // "trees", "pairs" or "triangles"
  std::string detail;
  std::vector<int> triple;
  int coordinate = 0;
};

namespace detail {

inline Walk tree_walk(const LabeledGraph& g, const KtModel::Tree& tr, int a, int b) {
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int e : tr.edges) {
    const EdgeRec& r = g.edge_by_id(e);
    adj[r.tail].emplace_back(e, r.head);
    adj[r.head].emplace_back(e, r.tail);
  }
  std::map<int, std::pair<int, int>> prev;  // vertex -> (edge, previous vertex)
  std::deque<int> dq{a};
  prev[a] = {-1, a};
  while (!dq.empty()) {
    int x = dq.front();
    dq.pop_front();
    for (auto [e, y] : adj[x])
      if (!prev.count(y)) {
        prev[y] = {e, x};
        dq.push_back(y);
      }
  }
  if (!prev.count(b)) throw GraphError("tree path not found");
  Walk w;
  for (int x = b; x != a; x = prev[x].second) {
    w.vertices.push_back(x);
    w.edges.push_back(prev[x].first);
  }
  w.vertices.push_back(a);
  return w.reversed();
}

inline int tree_of(const KtModel& m, int v) {
  for (int i = 0; i < m.t(); ++i)
    if (std::find(m.trees[static_cast<std::size_t>(i)].vertices.begin(), m.trees[static_cast<std::size_t>(i)].vertices.end(), v) !=
        m.trees[static_cast<std::size_t>(i)].vertices.end())
      return i;
  return -1;
}

// The unique cycle of pi(x) u pi(y) u pi(z) with the chosen linking edges.
inline Walk triangle_cycle(const LabeledGraph& g, const KtModel& m, int x, int y, int z, int exy, int eyz, int ezx) {
  auto side = [&](int e, int tree) {
    const EdgeRec& r = g.edge_by_id(e);
    return tree_of(m, r.tail) == tree ? r.tail : r.head;
  };
  int x_out = side(exy, x), y_in = side(exy, y), y_out = side(eyz, y), z_in = side(eyz, z), z_out = side(ezx, z),
      x_in = side(ezx, x);
  Walk w{{x_out, y_in}, {exy}};
  w = concat_walks(w, tree_walk(g, m.trees[static_cast<std::size_t>(y)], y_in, y_out));
  w = concat_walks(w, Walk{{y_out, z_in}, {eyz}});
  w = concat_walks(w, tree_walk(g, m.trees[static_cast<std::size_t>(z)], z_in, z_out));
  w = concat_walks(w, Walk{{z_out, x_in}, {ezx}});
  w = concat_walks(w, tree_walk(g, m.trees[static_cast<std::size_t>(x)], x_in, x_out));
  return w;
}

}  // namespace detail

// Checks the trees, the pair edges and the triangles. For a direct-sum labelling the
// triangle condition is tested in both coordinates; otherwise in the single group.
inline ModelReport verify_odd_kt_model(const LabeledGraph& g, const KtModel& m) {
  ModelReport rep;
  auto fail = [&](const std::string& clause, const std::string& detail) {
    rep.ok = false;
    rep.clause = clause;
    rep.detail = detail;
    return rep;
  };
  std::set<int> seen;
  for (int i = 0; i < m.t(); ++i) {
    const auto& tr = m.trees[static_cast<std::size_t>(i)];
    if (tr.vertices.empty()) return fail("trees", "tree " + std::to_string(i) + " is empty");
    std::set<int> vs(tr.vertices.begin(), tr.vertices.end());
    for (int v : tr.vertices) {
      if (!g.has_vertex(v)) return fail("trees", "tree " + std::to_string(i) + " uses unknown vertex " + std::to_string(v));
      if (!seen.insert(v).second) return fail("trees", "trees overlap at vertex " + std::to_string(v));
    }
    for (int e : tr.edges) {
      if (!g.has_edge(e)) return fail("trees", "tree " + std::to_string(i) + " uses unknown edge " + std::to_string(e));
      const EdgeRec& r = g.edge_by_id(e);
      if (!vs.count(r.tail) || !vs.count(r.head)) return fail("trees", "edge " + std::to_string(e) + " leaves tree " + std::to_string(i));
    }
    if (tr.edges.size() + 1 != vs.size()) return fail("trees", "tree " + std::to_string(i) + " has the wrong number of edges");
    LabeledGraph sub = g.edge_subgraph(tr.edges);
    if (!tr.edges.empty() && (components(sub).size() != 1 || sub.vertex_count() != vs.size()))
      return fail("trees", "tree " + std::to_string(i) + " is not connected");
  }
  for (int x = 0; x < m.t(); ++x)
    for (int y = x + 1; y < m.t(); ++y) {
      const auto& es = m.link(x, y);
      if (es.empty() || es.size() > 2)
        return fail("pairs", "pair (" + std::to_string(x) + "," + std::to_string(y) + ") needs one or two edges");
      for (int e : es) {
        if (!g.has_edge(e)) return fail("pairs", "unknown edge " + std::to_string(e));
        const EdgeRec& r = g.edge_by_id(e);
        int a = detail::tree_of(m, r.tail), b = detail::tree_of(m, r.head);
        if (!((a == x && b == y) || (a == y && b == x)))
          return fail("pairs", "edge " + std::to_string(e) + " does not join trees " + std::to_string(x) + " and " + std::to_string(y));
      }
    }
  const bool sum = g.group()->kind() == GroupKind::Sum;
  for (int coordinate = 1; coordinate <= (sum ? 2 : 1); ++coordinate)
    for (int x = 0; x < m.t(); ++x)
      for (int y = x + 1; y < m.t(); ++y)
        for (int z = y + 1; z < m.t(); ++z) {
          bool found = false;
          for (int exy : m.link(x, y))
            for (int eyz : m.link(y, z))
              for (int ezx : m.link(x, z)) {
                if (found) continue;
                Element v = walk_value(g, detail::triangle_cycle(g, m, x, y, z, exy, eyz, ezx));
                if (!is_zero(sum ? detail::coord(v, coordinate) : v)) found = true;
              }
          if (!found) {
            fail("triangles", "triple (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ") has no non-zero triangle in coordinate " +
                              std::to_string(coordinate));
            rep.triple = {x, y, z};
            rep.coordinate = coordinate;
            return rep;
          }
        }
  return rep;
}

enum class TriangleColor { Red, Blue };

// Red when the triangle cycle through pi(x), pi(y), pi(z) is non-zero.
inline TriangleColor triangle_color(const LabeledGraph& g, const KtModel& m, int x, int y, int z) {
  if (x == y || y == z || x == z) throw PreconditionError("x, y, z are distinct", "repeated branch vertex");
  for (int v : {x, y, z})
    if (v < 0 || v >= m.t()) throw PreconditionError("x, y, z are vertices of the model", "index " + std::to_string(v) + " out of range");
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, z}, std::pair{x, z}})
    if (m.link(a, b).size() != 1) throw PreconditionError("each pi(uv) is a single edge", "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  Walk c = detail::triangle_cycle(g, m, x, y, z, m.link(x, y)[0], m.link(y, z)[0], m.link(x, z)[0]);
  return is_zero(walk_value(g, c)) ? TriangleColor::Blue : TriangleColor::Red;
}

}  // namespace glg
