#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glg/groups.hpp"

namespace glg {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeRec {
  int id = 0;
  int tail = 0;
  int head = 0;
  bool is_loop() const { return tail == head; }
};

// Oriented multigraph with group labels. Topology is shared between graphs that
// differ only in their labels (shifting, relabelling).
class LabeledGraph {
 public:
  struct Topology {
    std::vector<int> vertices;  // sorted ids
    std::vector<EdgeRec> edges;  // sorted by id
    std::unordered_map<int, int> vindex;
    std::unordered_map<int, int> eindex;
    std::vector<std::vector<int>> incident;  // edge indices per vertex index, loops listed once
  };

  LabeledGraph() : group_(Group::cyclic(1)), topo_(std::make_shared<Topology>()) {}

  LabeledGraph(GroupPtr g, std::vector<int> vertices, std::vector<EdgeRec> edges, std::vector<Element> labels)
      : group_(std::move(g)) {
    if (edges.size() != labels.size()) throw GraphError("label count does not match edge count");
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
    auto t = std::make_shared<Topology>();
    t->vertices = std::move(vertices);
    std::sort(t->vertices.begin(), t->vertices.end());
    for (std::size_t i = 0; i < t->vertices.size(); ++i) {
      if (i && t->vertices[i] == t->vertices[i - 1]) throw GraphError("duplicate vertex id " + std::to_string(t->vertices[i]));
      t->vindex[t->vertices[i]] = static_cast<int>(i);
    }
    t->incident.resize(t->vertices.size());
    labels_.reserve(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const EdgeRec& e = edges[order[k]];
      if (k && e.id == t->edges.back().id) throw GraphError("duplicate edge id " + std::to_string(e.id));
      auto it = t->vindex.find(e.tail);
      auto jt = t->vindex.find(e.head);
      if (it == t->vindex.end() || jt == t->vindex.end())
        throw GraphError("edge " + std::to_string(e.id) + " has an unknown endpoint");
      const Element& lab = labels[order[k]];
      if (!lab.group() || !(*lab.group() == *group_))
        throw GraphError("label of edge " + std::to_string(e.id) + " is not in group " + group_->describe());
      t->eindex[e.id] = static_cast<int>(t->edges.size());
      t->incident[it->second].push_back(static_cast<int>(t->edges.size()));
      if (jt->second != it->second) t->incident[jt->second].push_back(static_cast<int>(t->edges.size()));
      t->edges.push_back(e);
      labels_.push_back(lab);
    }
    topo_ = std::move(t);
  }

  const GroupPtr& group() const { return group_; }
  std::size_t vertex_count() const { return topo_->vertices.size(); }
  std::size_t edge_count() const { return topo_->edges.size(); }
  const std::vector<int>& vertices() const { return topo_->vertices; }
  const std::vector<EdgeRec>& edges() const { return topo_->edges; }
  const std::vector<Element>& labels() const { return labels_; }
  const EdgeRec& edge(std::size_t idx) const { return topo_->edges[idx]; }
  const Element& label(std::size_t idx) const { return labels_[idx]; }
  const std::vector<int>& incident(std::size_t vidx) const { return topo_->incident[vidx]; }
  const std::shared_ptr<const Topology>& topology() const { return topo_; }

  bool has_vertex(int id) const { return topo_->vindex.count(id) > 0; }
  bool has_edge(int id) const { return topo_->eindex.count(id) > 0; }
  int vertex_index(int id) const {
    auto it = topo_->vindex.find(id);
    if (it == topo_->vindex.end()) throw GraphError("unknown vertex " + std::to_string(id));
    return it->second;
  }
  int edge_index(int id) const {
    auto it = topo_->eindex.find(id);
    if (it == topo_->eindex.end()) throw GraphError("unknown edge " + std::to_string(id));
    return it->second;
  }
  const EdgeRec& edge_by_id(int id) const { return edge(static_cast<std::size_t>(edge_index(id))); }
  const Element& label_by_id(int id) const { return label(static_cast<std::size_t>(edge_index(id))); }
  int other_end(std::size_t eidx, int v) const {
    const EdgeRec& e = edge(eidx);
    if (e.tail == v) return e.head;
    if (e.head == v) return e.tail;
    throw GraphError("vertex " + std::to_string(v) + " is not an end of edge " + std::to_string(e.id));
  }
  int degree(int id) const {
    int d = 0;
    for (int ei : incident(static_cast<std::size_t>(vertex_index(id)))) d += edge(static_cast<std::size_t>(ei)).is_loop() ? 2 : 1;
    return d;
  }
  int next_vertex_id() const { return topo_->vertices.empty() ? 0 : topo_->vertices.back() + 1; }
  int next_edge_id() const { return topo_->edges.empty() ? 0 : topo_->edges.back().id + 1; }

  LabeledGraph with_labels(std::vector<Element> labels) const {
    if (labels.size() != labels_.size()) throw GraphError("label count does not match edge count");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!labels[i].group() || !(*labels[i].group() == *group_)) throw GraphError("label outside the graph's group");
    LabeledGraph g(*this);
    g.labels_ = std::move(labels);
    return g;
  }

  // Same topology over a different group.
  LabeledGraph relabel(GroupPtr grp, std::vector<Element> labels) const {
    return LabeledGraph(std::move(grp), topo_->vertices, topo_->edges, std::move(labels));
  }

  LabeledGraph without_vertices(const std::vector<int>& ids) const {
    std::set<int> drop(ids.begin(), ids.end());
    std::vector<int> vs;
    for (int v : vertices())
      if (!drop.count(v)) vs.push_back(v);
    std::vector<EdgeRec> es;
    std::vector<Element> ls;
    for (std::size_t i = 0; i < edge_count(); ++i) {
      const EdgeRec& e = edge(i);
      if (drop.count(e.tail) || drop.count(e.head)) continue;
      es.push_back(e);
      ls.push_back(labels_[i]);
    }
    return LabeledGraph(group_, vs, es, ls);
  }

  LabeledGraph without_edges(const std::vector<int>& edge_ids) const {
    std::set<int> drop(edge_ids.begin(), edge_ids.end());
    std::vector<EdgeRec> es;
    std::vector<Element> ls;
    for (std::size_t i = 0; i < edge_count(); ++i) {
      if (drop.count(edge(i).id)) continue;
      es.push_back(edge(i));
      ls.push_back(labels_[i]);
    }
    return LabeledGraph(group_, vertices(), es, ls);
  }

  // Subgraph formed by the given edges and their ends.
  LabeledGraph edge_subgraph(const std::vector<int>& edge_ids) const {
    std::set<int> keep(edge_ids.begin(), edge_ids.end());
    std::set<int> vs;
    std::vector<EdgeRec> es;
    std::vector<Element> ls;
    for (std::size_t i = 0; i < edge_count(); ++i) {
      if (!keep.count(edge(i).id)) continue;
      es.push_back(edge(i));
      ls.push_back(labels_[i]);
      vs.insert(edge(i).tail);
      vs.insert(edge(i).head);
    }
    return LabeledGraph(group_, std::vector<int>(vs.begin(), vs.end()), es, ls);
  }

 private:
  GroupPtr group_;
  std::shared_ptr<const Topology> topo_;
  std::vector<Element> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(GroupPtr g) : group_(std::move(g)) {}

  int add_vertex() {
    int id = next_v_++;
    vertices_.push_back(id);
    return id;
  }
  int add_vertex(int id) {
    vertices_.push_back(id);
    next_v_ = std::max(next_v_, id + 1);
    return id;
  }
  int add_edge(int tail, int head, const Element& label) { return add_edge(next_e_, tail, head, label); }
  int add_edge(int id, int tail, int head, const Element& label) {
    edges_.push_back({id, tail, head});
    labels_.push_back(label);
    next_e_ = std::max(next_e_, id + 1);
    return id;
  }
  int add_zero_edge(int tail, int head) { return add_edge(tail, head, group_->zero()); }
  const GroupPtr& group() const { return group_; }

  LabeledGraph build() const { return LabeledGraph(group_, vertices_, edges_, labels_); }

 private:
  GroupPtr group_;
  std::vector<int> vertices_;
  std::vector<EdgeRec> edges_;
  std::vector<Element> labels_;
  int next_v_ = 0;
  int next_e_ = 0;
};

// v0 e1 v1 ... el vl
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edges;

  std::size_t length() const { return edges.size(); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }

  Walk reversed() const {
    Walk w;
    w.vertices.assign(vertices.rbegin(), vertices.rend());
    w.edges.assign(edges.rbegin(), edges.rend());
    return w;
  }
  // Closed walk restarted at position k.
  Walk rotated(std::size_t k) const {
    if (!closed()) throw GraphError("rotation of an open walk");
    Walk w;
    const std::size_t l = edges.size();
    if (l == 0) return *this;
    k %= l;
    for (std::size_t i = 0; i <= l; ++i) w.vertices.push_back(vertices[(k + i) % l]);
    for (std::size_t i = 0; i < l; ++i) w.edges.push_back(edges[(k + i) % l]);
    return w;
  }
  std::vector<int> edge_set() const {
    std::vector<int> s = edges;
    std::sort(s.begin(), s.end());
    return s;
  }
  std::vector<int> vertex_set() const {
    std::vector<int> s = vertices;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  friend bool operator==(const Walk& a, const Walk& b) { return a.vertices == b.vertices && a.edges == b.edges; }
};

inline void validate_walk(const LabeledGraph& g, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1) throw GraphError("walk must alternate vertices and edges");
  for (int v : w.vertices)
    if (!g.has_vertex(v)) throw GraphError("walk uses unknown vertex " + std::to_string(v));
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (!g.has_edge(w.edges[i])) throw GraphError("walk uses unknown edge " + std::to_string(w.edges[i]));
    const EdgeRec& e = g.edge_by_id(w.edges[i]);
    int a = w.vertices[i], b = w.vertices[i + 1];
    bool ok = (e.tail == a && e.head == b) || (e.tail == b && e.head == a);
    if (!ok) throw GraphError("edge " + std::to_string(e.id) + " does not join consecutive walk vertices");
  }
}

inline bool is_cycle_walk(const LabeledGraph& g, const Walk& w) {
  try {
    validate_walk(g, w);
  } catch (const GraphError&) {
    return false;
  }
  if (w.edges.empty() || !w.closed()) return false;
  std::set<int> vs(w.vertices.begin() + 1, w.vertices.end());
  std::set<int> es(w.edges.begin(), w.edges.end());
  return vs.size() == w.edges.size() && es.size() == w.edges.size();
}

inline bool is_path_walk(const LabeledGraph& g, const Walk& w) {
  try {
    validate_walk(g, w);
  } catch (const GraphError&) {
    return false;
  }
  std::set<int> vs(w.vertices.begin(), w.vertices.end());
  return vs.size() == w.vertices.size();
}

// gamma(e, v): the label when v is the head, its inverse when v is the tail.
inline Element edge_value_towards(const LabeledGraph& g, std::size_t eidx, int v) {
  const EdgeRec& e = g.edge(eidx);
  if (e.head == v) return g.label(eidx);
  if (e.tail == v) return inv(g.label(eidx));
  throw GraphError("vertex is not an end of the edge");
}

inline Element walk_value(const LabeledGraph& g, const Walk& w) {
  validate_walk(g, w);
  Element acc = g.group()->zero();
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    acc = op(acc, edge_value_towards(g, static_cast<std::size_t>(g.edge_index(w.edges[i])), w.vertices[i + 1]));
  return acc;
}

inline LabeledGraph shift(const LabeledGraph& g, int v, const Element& alpha) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  if (!alpha.group() || !(*alpha.group() == *g.group())) throw GraphError("shift element outside the graph's group");
  std::vector<Element> labels = g.labels();
  Element neg = inv(alpha);
  for (int ei : g.incident(static_cast<std::size_t>(g.vertex_index(v)))) {
    const EdgeRec& e = g.edge(static_cast<std::size_t>(ei));
    Element& lab = labels[static_cast<std::size_t>(ei)];
    if (e.head == v) lab = op(lab, alpha);
    if (e.tail == v) lab = op(neg, lab);
  }
  return g.with_labels(std::move(labels));
}

// Deterministic BFS spanning forest: parent edge index per vertex index (-1 at roots).
struct SpanningForest {
  std::vector<int> parent_edge;
  std::vector<int> parent;  // vertex index
  std::vector<int> root;    // vertex index of the component root
  std::vector<int> order;   // BFS order of vertex indices
  std::vector<int> depth;
  std::vector<bool> in_tree;  // per edge index
};

inline SpanningForest spanning_forest(const LabeledGraph& g, const std::vector<bool>* skip_vertex = nullptr) {
  const std::size_t n = g.vertex_count();
  SpanningForest f;
  f.parent_edge.assign(n, -1);
  f.parent.assign(n, -1);
  f.root.assign(n, -1);
  f.depth.assign(n, 0);
  f.in_tree.assign(g.edge_count(), false);
  for (std::size_t s = 0; s < n; ++s) {
    if (f.root[s] != -1 || (skip_vertex && (*skip_vertex)[s])) continue;
    f.root[s] = static_cast<int>(s);
    std::deque<int> q{static_cast<int>(s)};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      f.order.push_back(x);
      for (int ei : g.incident(static_cast<std::size_t>(x))) {
        const EdgeRec& e = g.edge(static_cast<std::size_t>(ei));
        if (e.is_loop()) continue;
        int y = g.vertex_index(g.other_end(static_cast<std::size_t>(ei), g.vertices()[static_cast<std::size_t>(x)]));
        if (f.root[static_cast<std::size_t>(y)] != -1 || (skip_vertex && (*skip_vertex)[static_cast<std::size_t>(y)])) continue;
        f.root[static_cast<std::size_t>(y)] = static_cast<int>(s);
        f.parent[static_cast<std::size_t>(y)] = x;
        f.parent_edge[static_cast<std::size_t>(y)] = ei;
        f.depth[static_cast<std::size_t>(y)] = f.depth[static_cast<std::size_t>(x)] + 1;
        f.in_tree[static_cast<std::size_t>(ei)] = true;
        q.push_back(y);
      }
    }
  }
  return f;
}

// Walk from vertex index a up to vertex index b along tree edges, where b is an ancestor of a
// or both lie in one tree (the walk passes through their lowest common ancestor).
inline Walk tree_path(const LabeledGraph& g, const SpanningForest& f, int a, int b) {
  std::vector<int> up_a{a}, up_b{b};
  std::vector<int> ea, eb;
  int x = a, y = b;
  while (f.depth[static_cast<std::size_t>(x)] > f.depth[static_cast<std::size_t>(y)]) {
    ea.push_back(f.parent_edge[static_cast<std::size_t>(x)]);
    x = f.parent[static_cast<std::size_t>(x)];
    up_a.push_back(x);
  }
  while (f.depth[static_cast<std::size_t>(y)] > f.depth[static_cast<std::size_t>(x)]) {
    eb.push_back(f.parent_edge[static_cast<std::size_t>(y)]);
    y = f.parent[static_cast<std::size_t>(y)];
    up_b.push_back(y);
  }
  while (x != y) {
    ea.push_back(f.parent_edge[static_cast<std::size_t>(x)]);
    x = f.parent[static_cast<std::size_t>(x)];
    up_a.push_back(x);
    eb.push_back(f.parent_edge[static_cast<std::size_t>(y)]);
    y = f.parent[static_cast<std::size_t>(y)];
    up_b.push_back(y);
  }
  Walk w;
  for (int v : up_a) w.vertices.push_back(g.vertices()[static_cast<std::size_t>(v)]);
  for (int e : ea) w.edges.push_back(g.edge(static_cast<std::size_t>(e)).id);
  for (std::size_t i = up_b.size() - 1; i-- > 0;) w.vertices.push_back(g.vertices()[static_cast<std::size_t>(up_b[i])]);
  for (std::size_t i = eb.size(); i-- > 0;) w.edges.push_back(g.edge(static_cast<std::size_t>(eb[i])).id);
  return w;
}

struct BipartiteResult {
  bool bipartite = true;
  std::vector<std::pair<int, Element>> shifts;  // applied in order
  std::optional<Walk> witness;                  // a non-zero cycle when not bipartite
};

// Per component: shift along a BFS tree so that tree edges become null, then every
// non-tree edge must be null too; otherwise its fundamental cycle is non-zero.
inline BipartiteResult is_gamma_bipartite(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  SpanningForest f = spanning_forest(g);
  std::vector<Element> alpha(n, g.group()->zero());
  for (int x : f.order) {
    int pe = f.parent_edge[static_cast<std::size_t>(x)];
    if (pe < 0) continue;
    const EdgeRec& e = g.edge(static_cast<std::size_t>(pe));
    int p = f.parent[static_cast<std::size_t>(x)];
    int xid = g.vertices()[static_cast<std::size_t>(x)];
    const Element& lab = g.label(static_cast<std::size_t>(pe));
    // want (-alpha_tail) + lab + alpha_head == 0
    if (e.head == xid)
      alpha[static_cast<std::size_t>(x)] = op(inv(lab), alpha[static_cast<std::size_t>(p)]);
    else
      alpha[static_cast<std::size_t>(x)] = op(lab, alpha[static_cast<std::size_t>(p)]);
  }
  BipartiteResult r;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(alpha[i])) r.shifts.emplace_back(g.vertices()[i], alpha[i]);
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    if (f.in_tree[ei]) continue;
    const EdgeRec& e = g.edge(ei);
    int t = g.vertex_index(e.tail), h = g.vertex_index(e.head);
    Element shifted = op(op(inv(alpha[static_cast<std::size_t>(t)]), g.label(ei)), alpha[static_cast<std::size_t>(h)]);
    if (is_zero(shifted)) continue;
    r.bipartite = false;
    Walk w;
    if (e.is_loop()) {
      w.vertices = {e.tail, e.tail};
      w.edges = {e.id};
    } else {
      Walk back = tree_path(g, f, h, t);
      w.vertices = {e.tail};
      w.edges = {e.id};
      w.vertices.insert(w.vertices.end(), back.vertices.begin(), back.vertices.end());
      w.edges.insert(w.edges.end(), back.edges.begin(), back.edges.end());
    }
    r.witness = w;
    r.shifts.clear();
    return r;
  }
  return r;
}

inline LabeledGraph apply_shifts(const LabeledGraph& g, const std::vector<std::pair<int, Element>>& shifts) {
  LabeledGraph out = g;
  for (const auto& [v, a] : shifts) out = shift(out, v, a);
  return out;
}

inline LabeledGraph normalize_to_null(const LabeledGraph& g) {
  BipartiteResult r = is_gamma_bipartite(g);
  if (!r.bipartite) throw GraphError("graph is not bipartite for its group labelling");
  LabeledGraph out = apply_shifts(g, r.shifts);
  for (const Element& l : out.labels())
    if (!is_zero(l)) throw GraphError("normalisation left a non-zero label");
  return out;
}

// Identifies the ends of a null non-loop edge into a fresh vertex; other edges keep
// their orientation with the merged ends re-anchored.
inline LabeledGraph contract_null_edge(const LabeledGraph& g, int edge_id) {
  const EdgeRec& c = g.edge_by_id(edge_id);
  if (c.is_loop()) throw GraphError("cannot contract a loop");
  if (!is_zero(g.label_by_id(edge_id))) throw GraphError("cannot contract an edge with a non-zero label");
  int fresh = g.next_vertex_id();
  std::vector<int> vs;
  for (int v : g.vertices())
    if (v != c.tail && v != c.head) vs.push_back(v);
  vs.push_back(fresh);
  std::vector<EdgeRec> es;
  std::vector<Element> ls;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeRec e = g.edge(i);
    if (e.id == edge_id) continue;
    if (e.tail == c.tail || e.tail == c.head) e.tail = fresh;
    if (e.head == c.tail || e.head == c.head) e.head = fresh;
    es.push_back(e);
    ls.push_back(g.label(i));
  }
  return LabeledGraph(g.group(), vs, es, ls);
}

inline Walk concat_walks(const Walk& a, const Walk& b) {
  if (a.vertices.empty()) return b;
  if (b.vertices.empty()) return a;
  if (a.end() != b.start()) throw GraphError("walks do not meet end to start");
  Walk w = a;
  w.vertices.insert(w.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  w.edges.insert(w.edges.end(), b.edges.begin(), b.edges.end());
  return w;
}

// Vertices i..j of a walk (i <= j) with the edges between them.
inline Walk subwalk(const Walk& w, std::size_t i, std::size_t j) {
  if (i > j || j >= w.vertices.size()) throw GraphError("subwalk range out of bounds");
  Walk s;
  s.vertices.assign(w.vertices.begin() + static_cast<std::ptrdiff_t>(i), w.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  s.edges.assign(w.edges.begin() + static_cast<std::ptrdiff_t>(i), w.edges.begin() + static_cast<std::ptrdiff_t>(j));
  return s;
}

inline std::optional<std::size_t> position_in(const Walk& w, int v) {
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (w.vertices[i] == v) return i;
  return std::nullopt;
}

// The two x-y arcs of a cycle, both running from x to y; the first follows the
// cycle's own direction.
inline std::pair<Walk, Walk> cycle_arcs(const Walk& cycle, int x, int y) {
  auto px = position_in(cycle, x);
  if (!px || !position_in(cycle, y)) throw GraphError("arc ends must lie on the cycle");
  if (x == y) throw GraphError("arc ends must differ");
  Walk fwd = cycle.rotated(*px);
  Walk bwd = fwd.reversed();
  std::size_t jf = *position_in(fwd, y), jb = *position_in(bwd, y);
  return {subwalk(fwd, 0, jf), subwalk(bwd, 0, jb)};
}

// Connected components as sorted vertex-id lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const LabeledGraph& g) {
  SpanningForest f = spanning_forest(g);
  std::vector<std::vector<int>> out;
  std::unordered_map<int, std::size_t> slot;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    int r = f.root[i];
    auto it = slot.find(r);
    if (it == slot.end()) {
      slot[r] = out.size();
      out.push_back({});
      it = slot.find(r);
    }
    out[it->second].push_back(g.vertices()[i]);
  }
  return out;
}

}  // namespace glg
