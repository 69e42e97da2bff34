#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "glg/frontier.hpp"
#include "glg/linkage.hpp"

namespace glg {

class WallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (x, y) in the elementary wall: x in [0, 2r+1], y in [0, r], y = 0 the top row.
using Coord = std::pair<int, int>;

namespace elem {

inline bool deleted(int r, Coord c) {
  auto [x, y] = c;
  if (x == 0 && y == 0) return true;
  if (y == r) return r % 2 == 0 ? x == 2 * r + 1 : x == 0;
  return false;
}

inline bool has(int r, Coord c) {
  auto [x, y] = c;
  return x >= 0 && x <= 2 * r + 1 && y >= 0 && y <= r && !deleted(r, c);
}

// Row-major order.
inline std::vector<Coord> vertices(int r) {
  std::vector<Coord> out;
  for (int y = 0; y <= r; ++y)
    for (int x = 0; x <= 2 * r + 1; ++x)
      if (has(r, {x, y})) out.push_back({x, y});
  return out;
}

inline bool rung(int r, Coord c) {  // vertical edge from c down to (x, y+1)
  auto [x, y] = c;
  return (x + y) % 2 == 1 && has(r, c) && has(r, {x, y + 1});
}

// Edges as (upper-left end, lower-right end).
inline std::vector<std::pair<Coord, Coord>> edges(int r) {
  std::vector<std::pair<Coord, Coord>> out;
  for (auto [x, y] : vertices(r)) {
    if (has(r, {x + 1, y})) out.push_back({{x, y}, {x + 1, y}});
    if (rung(r, {x, y})) out.push_back({{x, y}, {x, y + 1}});
  }
  return out;
}

inline int degree(int r, Coord c) {
  auto [x, y] = c;
  int d = 0;
  d += has(r, {x - 1, y}) ? 1 : 0;
  d += has(r, {x + 1, y}) ? 1 : 0;
  d += rung(r, {x, y}) ? 1 : 0;
  d += rung(r, {x, y - 1}) ? 1 : 0;
  return d;
}

inline int first_x(int r, int y) { return has(r, {0, y}) ? 0 : 1; }
inline int last_x(int r, int y) { return has(r, {2 * r + 1, y}) ? 2 * r + 1 : 2 * r; }

// v1..v4 clockwise from the top-left corner.
inline std::vector<Coord> corners(int r) {
  return {{1, 0}, {2 * r + 1, 0}, {last_x(r, r), r}, {first_x(r, r), r}};
}

inline std::vector<Coord> row(int r, int y, int from, int to) {
  std::vector<Coord> out;
  for (int x = from; x <= to; ++x) out.push_back({x, y});
  return out;
}

inline std::vector<Coord> horizontal(int r, int y) {
  if (y == 0 || y == r) return row(r, y, first_x(r, y), last_x(r, y));
  return row(r, y, 1, 2 * r);
}

// Zigzag over columns 2j and 2j+1 from (2j+1, 0) to the bottom row.
inline std::vector<Coord> vertical(int r, int j) {
  std::vector<Coord> out;
  int x = 2 * j + 1;
  for (int y = 0; y <= r; ++y) {
    out.push_back({x, y});
    if (y == r) break;
    if (!rung(r, {x, y})) {
      x ^= 1;
      out.push_back({x, y});
    }
  }
  return out;
}

// Bricks as closed coordinate sequences, row by row, left to right.
inline std::vector<std::vector<Coord>> bricks(int r) {
  std::vector<std::vector<Coord>> out;
  for (int y = 0; y < r; ++y)
    for (int x0 = 0; x0 + 2 <= 2 * r + 1; ++x0) {
      if ((x0 + y) % 2 != 1) continue;
      out.push_back({{x0, y}, {x0 + 1, y}, {x0 + 2, y}, {x0 + 2, y + 1}, {x0 + 1, y + 1}, {x0, y + 1}, {x0, y}});
    }
  return out;
}

// Boundary walk clockwise from v1.
inline std::vector<Coord> boundary(int r) {
  std::vector<Coord> out;
  for (int x = 1; x <= 2 * r + 1; ++x) out.push_back({x, 0});
  std::vector<Coord> right = vertical(r, r);
  out.insert(out.end(), right.begin() + 1, right.end());
  for (int x = last_x(r, r) - 1; x >= first_x(r, r); --x) out.push_back({x, r});
  std::vector<Coord> left = vertical(r, 0);
  for (std::size_t i = left.size() - 1; i-- > 0;) out.push_back(left[i]);
  return out;
}

inline std::vector<Coord> nails(int r) {
  std::vector<Coord> cs = corners(r), out;
  for (Coord c : vertices(r))
    if (degree(r, c) == 2 && std::find(cs.begin(), cs.end(), c) == cs.end()) out.push_back(c);
  return out;
}

}  // namespace elem

// A subdivision of the elementary r-wall inside `graph`: every elementary vertex maps to
// a branch vertex and every elementary edge to a path (segment) between branch vertices.
struct Wall {
  int r = 0;
  LabeledGraph graph;
  std::map<Coord, int> branch;
  std::map<std::pair<Coord, Coord>, Walk> segments;  // keyed as in elem::edges
  std::vector<int> rows;  // index sets in the parent wall, if this is a subwall
  std::vector<int> cols;

  std::vector<int> corners;
  std::vector<int> nails;
  std::vector<int> top_nails;    // left to right
  std::vector<Walk> horizontal;  // P_0 .. P_r, left to right
  std::vector<Walk> vertical;    // P_0 .. P_r, top to bottom
  std::vector<Walk> bricks;
  Walk boundary;

  int at(Coord c) const {
    auto it = branch.find(c);
    if (it == branch.end()) throw WallError("no branch vertex at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")");
    return it->second;
  }

  // Path through consecutive elementary coordinates.
  Walk trace(const std::vector<Coord>& cs) const {
    Walk w{{at(cs.front())}, {}};
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      Coord a = cs[i], b = cs[i + 1];
      auto it = segments.find({a, b});
      Walk seg;
      if (it != segments.end()) {
        seg = it->second;
      } else {
        auto jt = segments.find({b, a});
        if (jt == segments.end()) throw WallError("coordinates are not adjacent in the wall");
        seg = jt->second.reversed();
      }
      w = concat_walks(w, seg);
    }
    return w;
  }

  std::set<int> branch_vertices() const {
    std::set<int> s;
    for (const auto& kv : branch) s.insert(kv.second);
    return s;
  }
};

inline void derive_anatomy(Wall& w) {
  const int r = w.r;
  w.corners.clear();
  for (Coord c : elem::corners(r)) w.corners.push_back(w.at(c));
  w.nails.clear();
  for (Coord c : elem::nails(r)) w.nails.push_back(w.at(c));
  w.top_nails.clear();
  for (int k = 1; k <= r; ++k) w.top_nails.push_back(w.at({2 * k, 0}));
  w.horizontal.clear();
  w.vertical.clear();
  for (int i = 0; i <= r; ++i) {
    w.horizontal.push_back(w.trace(elem::horizontal(r, i)));
    w.vertical.push_back(w.trace(elem::vertical(r, i)));
  }
  w.bricks.clear();
  for (const auto& b : elem::bricks(r)) w.bricks.push_back(w.trace(b));
  w.boundary = w.trace(elem::boundary(r));
}

// Structural check of the subdivision; empty string when the wall is sound.
inline std::string validate_wall(const Wall& w) {
  const int r = w.r;
  const LabeledGraph& g = w.graph;
  std::set<int> br;
  for (Coord c : elem::vertices(r)) {
    auto it = w.branch.find(c);
    if (it == w.branch.end()) return "missing branch vertex";
    if (!g.has_vertex(it->second)) return "branch vertex not in graph";
    if (!br.insert(it->second).second) return "two coordinates share a branch vertex";
  }
  if (w.branch.size() != br.size()) return "extra branch coordinates";
  std::set<int> used_e, interior;
  for (const auto& e : elem::edges(r)) {
    auto it = w.segments.find(e);
    if (it == w.segments.end()) return "missing segment";
    const Walk& s = it->second;
    if (s.edges.empty() || !is_path_walk(g, s)) return "segment is not a path";
    if (s.start() != w.at(e.first) || s.end() != w.at(e.second)) return "segment has wrong ends";
    for (int id : s.edges)
      if (!used_e.insert(id).second) return "segments share an edge";
    for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) {
      int v = s.vertices[i];
      if (br.count(v)) return "segment passes through a branch vertex";
      if (!interior.insert(v).second) return "segments share an interior vertex";
    }
  }
  if (used_e.size() != g.edge_count()) return "graph has edges outside the segments";
  if (br.size() + interior.size() != g.vertex_count()) return "graph has vertices outside the segments";
  for (int v : g.vertices()) {
    int d = g.degree(v);
    if (d > 3) return "vertex " + std::to_string(v) + " has degree above 3";
    if (!br.count(v) && d != 2) return "subdivision vertex " + std::to_string(v) + " does not have degree 2";
  }
  if (w.corners.size() != 4) return "wall needs four corners";
  if (static_cast<int>(w.bricks.size()) != r * r) return "wrong number of bricks";
  for (const Walk& b : w.bricks)
    if (!is_cycle_walk(g, b)) return "brick is not a cycle";
  if (!is_cycle_walk(g, w.boundary)) return "boundary is not a cycle";
  return {};
}

inline Wall build_elementary(int r, const GroupPtr& group) {
  if (r < 1) throw WallError("wall size must be at least 1");
  GraphBuilder b(group);
  Wall w;
  w.r = r;
  for (Coord c : elem::vertices(r)) w.branch[c] = b.add_vertex();
  std::vector<std::pair<Coord, Coord>> es = elem::edges(r);
  std::vector<int> ids;
  for (const auto& e : es) ids.push_back(b.add_zero_edge(w.branch[e.first], w.branch[e.second]));
  w.graph = b.build();
  for (std::size_t i = 0; i < es.size(); ++i)
    w.segments[es[i]] = Walk{{w.branch[es[i].first], w.branch[es[i].second]}, {ids[i]}};
  derive_anatomy(w);
  return w;
}

// The elementary r-wall, null-labelled in `group` (Z_2 by default).
inline Wall elementary_wall(int r, GroupPtr group = nullptr) {
  if (r < 2) throw WallError("an elementary wall needs r >= 2");
  return build_elementary(r, group ? group : Group::cyclic(2));
}

// Face lengths of the straight-line embedding of an elementary wall (outer face first).
inline std::vector<std::size_t> elementary_face_lengths(const Wall& w) {
  std::map<int, Coord> pos;
  for (const auto& [c, v] : w.branch) pos[v] = c;
  const LabeledGraph& g = w.graph;
  std::map<int, std::vector<int>> rot;  // neighbours sorted by angle
  for (int v : g.vertices()) {
    std::vector<int> nb;
    for (int ei : g.incident(static_cast<std::size_t>(g.vertex_index(v)))) nb.push_back(g.other_end(static_cast<std::size_t>(ei), v));
    auto ang = [&](int u) {
      return std::atan2(static_cast<double>(-(pos[u].second - pos[v].second)), static_cast<double>(pos[u].first - pos[v].first));
    };
    std::sort(nb.begin(), nb.end(), [&](int a, int b) { return ang(a) < ang(b); });
    rot[v] = nb;
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::size_t> lens;
  for (const EdgeRec& e : g.edges())
    for (auto start : {std::pair{e.tail, e.head}, std::pair{e.head, e.tail}}) {
      if (seen.count(start)) continue;
      std::size_t len = 0;
      auto d = start;
      while (!seen.count(d)) {
        seen.insert(d);
        ++len;
        const auto& nb = rot[d.second];
        std::size_t k = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), d.first) - nb.begin());
        int nxt = nb[(k + nb.size() - 1) % nb.size()];
        d = {d.second, nxt};
      }
      lens.push_back(len);
    }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

inline bool is_planar(const LabeledGraph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.vertex_count());
  for (const EdgeRec& e : g.edges())
    boost::add_edge(static_cast<std::size_t>(g.vertex_index(e.tail)), static_cast<std::size_t>(g.vertex_index(e.head)), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Subwall on rows I^(h) and vertical paths I^(v) of `w`. Consecutive chosen rows must be
// an odd distance apart; when the first chosen row is odd the subwall is read mirrored.
inline Wall subwall(const Wall& w, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.size() < 2) throw WallError("index sets need equal size s+1 >= 2");
  for (const auto* v : {&rows, &cols})
    for (std::size_t i = 0; i < v->size(); ++i) {
      if ((*v)[i] < 0 || (*v)[i] > w.r) throw WallError("index out of range");
      if (i && (*v)[i] <= (*v)[i - 1]) throw WallError("index sets must be strictly increasing");
    }
  const int s = static_cast<int>(rows.size()) - 1;
  const int parity = rows[0] % 2;
  for (int i = 0; i <= s; ++i)
    if ((rows[static_cast<std::size_t>(i)] - i) % 2 != parity)
      throw WallError("chosen rows must be an odd distance apart");
  auto image = [&](Coord c) -> Coord {
    auto [x, y] = c;
    int j = x / 2, side = x % 2;
    int col = parity == 0 ? 2 * cols[static_cast<std::size_t>(j)] + side : 2 * cols[static_cast<std::size_t>(s - j)] + (1 - side);
    return {col, rows[static_cast<std::size_t>(y)]};
  };
  Wall out;
  out.r = s;
  out.rows = rows;
  out.cols = cols;
  std::set<int> keep_e;
  for (Coord c : elem::vertices(s)) {
    Coord img = image(c);
    if (!elem::has(w.r, img)) throw WallError("subwall corner falls outside the wall");
    out.branch[c] = w.at(img);
  }
  for (const auto& e : elem::edges(s)) {
    Coord a = image(e.first), b = image(e.second);
    Walk seg;
    if (a.second == b.second) {
      std::vector<Coord> cs;
      int step = a.first < b.first ? 1 : -1;
      for (int x = a.first;; x += step) {
        cs.push_back({x, a.second});
        if (x == b.first) break;
      }
      seg = w.trace(cs);
    } else {
      int j = a.first / 2;
      std::vector<Coord> vp = elem::vertical(w.r, j);
      auto ia = std::find(vp.begin(), vp.end(), a), ib = std::find(vp.begin(), vp.end(), b);
      if (ia == vp.end() || ib == vp.end() || ia > ib) throw WallError("subwall rung does not follow a vertical path");
      seg = w.trace(std::vector<Coord>(ia, ib + 1));
    }
    keep_e.insert(seg.edges.begin(), seg.edges.end());
    out.segments[e] = seg;
  }
  std::vector<int> drop;
  for (const EdgeRec& e : w.graph.edges())
    if (!keep_e.count(e.id)) drop.push_back(e.id);
  LabeledGraph pruned = w.graph.without_edges(drop);
  std::vector<int> isolated;
  for (int v : pruned.vertices())
    if (pruned.degree(v) == 0) isolated.push_back(v);
  out.graph = pruned.without_vertices(isolated);
  derive_anatomy(out);
  std::string bad = validate_wall(out);
  if (!bad.empty()) throw WallError("subwall is not a wall: " + bad);
  return out;
}

inline bool is_k_contained(const Wall& sub, const Wall& parent, int k) {
  if (sub.rows.empty() || sub.cols.empty()) throw WallError("wall carries no index sets");
  int lo = std::min(sub.rows.front(), sub.cols.front());
  int hi = std::max(sub.rows.back(), sub.cols.back());
  return lo >= k && hi <= parent.r - k;
}

// Top nails of a subwall, ordered along the parent's horizontal path from its end on
// the parent's first vertical path.
inline std::vector<int> top_nails(const Wall& sub, const Wall& parent) {
  std::set<int> mine(sub.graph.vertices().begin(), sub.graph.vertices().end());
  for (const Walk& h : parent.horizontal) {
    bool meets = std::any_of(h.vertices.begin(), h.vertices.end(), [&](int v) { return mine.count(v) > 0; });
    if (!meets) continue;
    std::set<int> sub_nails(sub.nails.begin(), sub.nails.end());
    std::set<int> top(sub.horizontal.front().vertices.begin(), sub.horizontal.front().vertices.end());
    std::vector<int> out;
    for (int v : h.vertices)
      if (sub_nails.count(v) && top.count(v)) out.push_back(v);
    return out;
  }
  return {};
}

// Replaces the segment P' between branch vertices x and y of a vertical path by the
// W-path Q (a walk in `host`, which contains the wall).
inline Wall local_reroute(const LabeledGraph& host, const Wall& w, const Walk& p_prime, const Walk& q) {
  validate_walk(host, q);
  if (p_prime.edges.empty()) throw WallError("P' must have an edge");
  int x = p_prime.start(), y = p_prime.end();
  std::set<int> br = w.branch_vertices();
  if (!br.count(x) || !br.count(y)) throw WallError("ends of P' must be branch vertices");
  std::optional<std::pair<Coord, Coord>> key;
  bool flip = false;
  for (const auto& [e, seg] : w.segments) {
    if (seg.edge_set() != p_prime.edge_set()) continue;
    key = e;
    flip = seg.start() != x;
  }
  if (!key) {
    for (std::size_t i = 1; i + 1 < p_prime.vertices.size(); ++i)
      if (br.count(p_prime.vertices[i])) throw WallError("P' has an internal branch vertex");
    throw WallError("P' is not a subpath of the wall");
  }
  bool on_vertical = false;
  for (const Walk& v : w.vertical) {
    std::set<int> ve(v.edges.begin(), v.edges.end());
    if (std::all_of(p_prime.edges.begin(), p_prime.edges.end(), [&](int e) { return ve.count(e) > 0; })) on_vertical = true;
  }
  if (!on_vertical) throw WallError("P' is not part of a vertical path");
  bool in_brick = false;
  for (const Walk& b : w.bricks) {
    std::set<int> bv(b.vertices.begin(), b.vertices.end());
    if (bv.count(x) && bv.count(y)) in_brick = true;
  }
  if (!in_brick) throw WallError("x and y do not share a brick");
  std::set<int> bnd(w.boundary.edges.begin(), w.boundary.edges.end());
  if (std::all_of(p_prime.edges.begin(), p_prime.edges.end(), [&](int e) { return bnd.count(e) > 0; }))
    throw WallError("P' lies on the boundary cycle");
  Walk qq = q;
  if (qq.start() != x) qq = qq.reversed();
  if (qq.start() != x || qq.end() != y) throw WallError("Q must join x and y");
  if (!is_path_walk(host, qq) || qq.edges.empty()) throw WallError("Q must be a path with an edge");
  if (qq.edge_set() == p_prime.edge_set()) return w;
  std::set<int> wall_v(w.graph.vertices().begin(), w.graph.vertices().end());
  for (std::size_t i = 1; i + 1 < qq.vertices.size(); ++i)
    if (wall_v.count(qq.vertices[i])) throw WallError("Q touches the wall internally");
  for (int e : qq.edges)
    if (w.graph.has_edge(e)) throw WallError("Q uses a wall edge");

  std::vector<int> inner(p_prime.vertices.begin() + 1, p_prime.vertices.end() - 1);
  LabeledGraph base = w.graph.without_edges(p_prime.edges).without_vertices(inner);
  std::vector<int> vs = base.vertices();
  std::vector<EdgeRec> es = base.edges();
  std::vector<Element> ls = base.labels();
  for (std::size_t i = 1; i + 1 < qq.vertices.size(); ++i) vs.push_back(qq.vertices[i]);
  for (int e : qq.edges) {
    es.push_back(host.edge_by_id(e));
    ls.push_back(host.label_by_id(e));
  }
  Wall out = w;
  out.graph = LabeledGraph(w.graph.group(), vs, es, ls);
  out.segments[*key] = flip ? qq.reversed() : qq;
  derive_anatomy(out);
  std::string bad = validate_wall(out);
  if (!bad.empty()) throw WallError("rerouted wall is invalid: " + bad);
  return out;
}

// ---- obstructions

struct EscherWall {
  Wall wall;
  LabeledGraph graph;        // over Z_2, every edge labelled 1
  std::vector<Walk> paths;   // P_1 .. P_h, top end first
};

// h-wall plus h two-edge paths; P_i runs from the i-th top brick to the (h-i+1)-th bottom
// brick. Every edge carries 1 in Z_2, so non-zero cycles are exactly the odd cycles.
inline EscherWall escher_wall(int h) {
  if (h < 1) throw WallError("height must be at least 1");
  GroupPtr z2 = Group::cyclic(2);
  EscherWall ew;
  ew.wall = build_elementary(h, z2);
  std::vector<int> vs = ew.wall.graph.vertices();
  std::vector<EdgeRec> es = ew.wall.graph.edges();
  std::vector<Element> ls(es.size(), z2->residue(1));
  int next_v = ew.wall.graph.next_vertex_id(), next_e = ew.wall.graph.next_edge_id();
  for (int i = 1; i <= h; ++i) {
    int k = h - i + 1;
    int top = ew.wall.at({2 * i, 0});
    int bottom = ew.wall.at({h % 2 == 1 ? 2 * k : 2 * k - 1, h});
    int mid = next_v++;
    vs.push_back(mid);
    int e1 = next_e++, e2 = next_e++;
    es.push_back({e1, top, mid});
    es.push_back({e2, mid, bottom});
    ls.push_back(z2->residue(1));
    ls.push_back(z2->residue(1));
    ew.paths.push_back(Walk{{top, mid, bottom}, {e1, e2}});
  }
  ew.wall.graph = ew.wall.graph.relabel(z2, std::vector<Element>(ew.wall.graph.edge_count(), z2->residue(1)));
  ew.graph = LabeledGraph(z2, vs, es, ls);
  return ew;
}

struct ObstructionSpec {
  int h = 1;
  PairType p_type = PairType::Nested;
  PairType q_type = PairType::Series;
  GroupPtr g1;
  GroupPtr g2;
  std::vector<Element> p_values;  // gamma_1 of each P path; empty means the generator
  std::vector<Element> q_values;  // gamma_2 of each Q path
};

struct Obstruction {
  ObstructionSpec spec;
  Wall wall;
  LabeledGraph graph;
  std::vector<Walk> p;
  std::vector<Walk> q;
  std::vector<int> terminals;  // top nails, left to right
};

// Slot pairs (1-based top-nail indices) for both linkages.
inline std::pair<std::vector<Chord>, std::vector<Chord>> obstruction_slots(int h, PairType tp, PairType tq) {
  std::vector<Chord> p, q;
  bool interleave = h >= 2 && tp != PairType::Series && tq != PairType::Series;
  if (interleave) {
    for (int i = 1; i <= h; ++i) {
      p.emplace_back(i, tp == PairType::Nested ? 3 * h + 1 - i : 2 * h + i);
      q.emplace_back(h + i, tq == PairType::Nested ? 4 * h + 1 - i : 3 * h + i);
    }
    return {p, q};
  }
  auto block = [&](PairType t, int base, std::vector<Chord>& out) {
    for (int i = 1; i <= h; ++i) {
      if (t == PairType::Series) out.emplace_back(base + 2 * i - 1, base + 2 * i);
      if (t == PairType::Nested) out.emplace_back(base + i, base + 2 * h + 1 - i);
      if (t == PairType::Crossing) out.emplace_back(base + i, base + h + i);
    }
  };
  block(tp, 0, p);
  block(tq, 2 * h, q);
  return {p, q};
}

inline void validate_spec(const ObstructionSpec& s) {
  if (s.h < 1) throw WallError("height must be at least 1");
  if (!s.g1 || !s.g2 || s.g1->is_trivial() || s.g2->is_trivial()) throw WallError("both groups must be non-trivial");
  if (s.p_type == s.q_type) throw WallError("the linkages must be of different type");
  auto check = [&](const std::vector<Element>& vals, const GroupPtr& g, PairType t, const char* name) {
    if (vals.empty()) return;
    if (static_cast<int>(vals.size()) != s.h) throw WallError(std::string(name) + " needs one value per path");
    for (const Element& v : vals) {
      if (!v.group() || !(*v.group() == *g)) throw WallError(std::string(name) + " value outside its group");
      if (is_zero(v)) throw WallError(std::string(name) + " values must be non-zero");
    }
    if (t != PairType::Series)
      for (const Element& v : vals)
        if (v != vals.front()) throw WallError(std::string(name) + " values must agree");
  };
  check(s.p_values, s.g1, s.p_type, "P");
  check(s.q_values, s.g2, s.q_type, "Q");
}

// The doubly-labelled obstruction on a null-labelled 4h-wall with both linkages attached
// at top nails by two-edge paths.
inline Obstruction build_obstruction(const ObstructionSpec& spec) {
  validate_spec(spec);
  const int h = spec.h;
  GroupPtr sum = Group::sum(spec.g1, spec.g2);
  Obstruction ob;
  ob.spec = spec;
  ob.wall = build_elementary(4 * h, sum);
  ob.terminals = ob.wall.top_nails;
  auto [ps, qs] = obstruction_slots(h, spec.p_type, spec.q_type);
  std::vector<int> vs = ob.wall.graph.vertices();
  std::vector<EdgeRec> es = ob.wall.graph.edges();
  std::vector<Element> ls = ob.wall.graph.labels();
  int next_v = ob.wall.graph.next_vertex_id(), next_e = ob.wall.graph.next_edge_id();
  auto attach = [&](const Chord& c, const Element& lab) {
    int a = ob.terminals[static_cast<std::size_t>(c.left - 1)], b = ob.terminals[static_cast<std::size_t>(c.right - 1)];
    int mid = next_v++;
    vs.push_back(mid);
    int e1 = next_e++, e2 = next_e++;
    es.push_back({e1, a, mid});
    es.push_back({e2, mid, b});
    ls.push_back(lab);
    ls.push_back(sum->zero());
    return Walk{{a, mid, b}, {e1, e2}};
  };
  for (int i = 0; i < h; ++i) {
    Element v = spec.p_values.empty() ? spec.g1->generator() : spec.p_values[static_cast<std::size_t>(i)];
    ob.p.push_back(attach(ps[static_cast<std::size_t>(i)], sum->pair(v, spec.g2->zero())));
  }
  for (int i = 0; i < h; ++i) {
    Element v = spec.q_values.empty() ? spec.g2->generator() : spec.q_values[static_cast<std::size_t>(i)];
    ob.q.push_back(attach(qs[static_cast<std::size_t>(i)], sum->pair(spec.g1->zero(), v)));
  }
  ob.graph = LabeledGraph(sum, vs, es, ls);
  return ob;
}

// Checks every defining condition on a built instance; empty string when all hold.
inline std::string check_obstruction(const Obstruction& ob) {
  const LabeledGraph& g = ob.graph;
  const int h = ob.spec.h;
  if (ob.wall.r != 4 * h) return "wall is not a 4h-wall";
  std::set<int> wall_e;
  for (const EdgeRec& e : ob.wall.graph.edges()) wall_e.insert(e.id);
  std::set<int> all;
  for (const EdgeRec& e : g.edges()) all.insert(e.id);
  std::set<int> parts = wall_e;
  for (const auto* fam : {&ob.p, &ob.q})
    for (const Walk& w : *fam)
      for (int e : w.edges)
        if (!parts.insert(e).second) return "linkage edge repeated";
  if (parts != all) return "edges do not split into W, P and Q";
  std::set<int> nails(ob.terminals.begin(), ob.terminals.end());
  std::set<int> ends;
  for (const auto* fam : {&ob.p, &ob.q})
    for (const Walk& w : *fam) {
      if (!nails.count(w.start()) || !nails.count(w.end())) return "endpoint is not a top nail";
      if (!ends.insert(w.start()).second || !ends.insert(w.end()).second) return "endpoints repeat";
    }
  for (const EdgeRec& e : ob.wall.graph.edges())
    if (!is_zero(g.label_by_id(e.id))) return "wall is not null-labelled";
  std::vector<Chord> cp = chords_of(ob.terminals, ob.p), cq = chords_of(ob.terminals, ob.q);
  auto tp = linkage_type(cp), tq = linkage_type(cq);
  if (!tp || !tq) return "linkages are not pure";
  if (h >= 2 && *tp == *tq) return "linkages have the same type";
  for (const Walk& w : ob.p) {
    Element v = left_to_right_value(g, ob.terminals, w, 0);
    if (is_zero(project(v, Side::Left)) || !is_zero(project(v, Side::Right))) return "a P path value is not non-zero in the first coordinate only";
  }
  for (const Walk& w : ob.q) {
    Element v = left_to_right_value(g, ob.terminals, w, 0);
    if (!is_zero(project(v, Side::Left)) || is_zero(project(v, Side::Right))) return "a Q path value is not non-zero in the second coordinate only";
  }
  auto equal_vals = [&](const std::vector<Walk>& fam, int c) {
    for (const Walk& w : fam)
      if (left_to_right_value(g, ob.terminals, w, c) != left_to_right_value(g, ob.terminals, fam.front(), c)) return false;
    return true;
  };
  if (h >= 2 && *tp != PairType::Series && !equal_vals(ob.p, 1)) return "P values differ";
  if (h >= 2 && *tq != PairType::Series && !equal_vals(ob.q, 2)) return "Q values differ";
  Interval ip = span(cp), iq = span(cq);
  if (!ip.meets(iq)) {
    if (!ip.before(iq)) return "I_P is not left of I_Q";
  } else {
    Interval pl = left_span(cp), ql = left_span(cq), pr = right_span(cp), qr = right_span(cq);
    if (!(pl.before(ql) && ql.before(pr) && pr.before(qr))) return "intervals are not interleaved";
    if (*tp == PairType::Series || *tq == PairType::Series || h < 2) return "a linkage is in series";
  }
  return {};
}

struct ObstructionReport {
  int h = 0;
  int nu = 0;
  int nu_half_lower = 0;
  int tau = 0;
  bool nu_is_one = false;
  bool nu_half_at_least_two = false;
  bool tau_at_least_h = false;
  bool tau_above_h = false;
  FrontierReport detail;
};

inline ObstructionReport verify_obstruction(const LabeledGraph& g, int h) {
  ObstructionReport r;
  r.h = h;
  r.detail = frontier_pack_cover(g, Target::DoublyNonZero, 2);
  r.nu = r.detail.nu;
  r.nu_half_lower = r.detail.nu_half_lower;
  r.tau = r.detail.tau;
  r.nu_is_one = r.nu == 1;
  r.nu_half_at_least_two = r.nu_half_lower >= 2;
  r.tau_at_least_h = r.tau >= h;
  r.tau_above_h = r.tau > h;
  return r;
}

}  // namespace glg
