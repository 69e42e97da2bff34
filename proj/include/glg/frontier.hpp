#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "glg/packing.hpp"

namespace glg {

// Rotates and orients a cycle walk: start at its smallest vertex, first edge id below
// the last one.
inline Walk canonical_cycle_walk(const Walk& w) {
  if (w.length() <= 1) return w;
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.length(); ++i)
    if (w.vertices[i] < w.vertices[k]) k = i;
  Walk r = w.rotated(k);
  if (r.edges.front() > r.edges.back()) r = r.reversed();
  return r;
}

// Splits an edge set with all degrees 0 or 2 into canonical cycle walks.
inline std::vector<Walk> cycles_from_edge_set(const LabeledGraph& g, const std::vector<int>& edge_ids) {
  std::unordered_map<int, std::vector<int>> at;  // vertex id -> edge ids
  for (int id : edge_ids) {
    const EdgeRec& e = g.edge_by_id(id);
    at[e.tail].push_back(id);
    if (!e.is_loop()) at[e.head].push_back(id);
  }
  std::set<int> left(edge_ids.begin(), edge_ids.end());
  std::vector<Walk> out;
  while (!left.empty()) {
    int first = *left.begin();
    const EdgeRec& e0 = g.edge_by_id(first);
    Walk w;
    w.vertices = {e0.tail};
    int cur = e0.tail, eid = first;
    while (true) {
      left.erase(eid);
      const EdgeRec& e = g.edge_by_id(eid);
      int nxt = e.tail == cur ? e.head : e.tail;
      w.edges.push_back(eid);
      w.vertices.push_back(nxt);
      cur = nxt;
      if (cur == e0.tail) break;
      int next_e = -1;
      for (int c : at[cur])
        if (left.count(c)) next_e = c;
      if (next_e < 0) throw GraphError("edge set is not a union of cycles");
      eid = next_e;
    }
    out.push_back(canonical_cycle_walk(w));
  }
  std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) { return a.edge_set() < b.edge_set(); });
  return out;
}

// Vertex order (as indices) with a small frontier, built greedily from every start.
inline std::vector<int> frontier_order(const LabeledGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  for (const EdgeRec& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = g.vertex_index(e.tail), b = g.vertex_index(e.head);
    nb[static_cast<std::size_t>(a)].push_back(b);
    nb[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> best;
  int best_width = n + 1;
  for (int s = 0; s < n; ++s) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> missing(static_cast<std::size_t>(n));  // neighbours not yet placed
    for (int v = 0; v < n; ++v) missing[static_cast<std::size_t>(v)] = static_cast<int>(nb[static_cast<std::size_t>(v)].size());
    std::vector<int> order;
    int frontier = 0, width = 0;
    auto place = [&](int v) {
      in[static_cast<std::size_t>(v)] = 1;
      order.push_back(v);
      if (missing[static_cast<std::size_t>(v)] > 0) ++frontier;
      for (int u : nb[static_cast<std::size_t>(v)]) {
        if (!in[static_cast<std::size_t>(u)]) continue;
        if (u == v) continue;
        if (--missing[static_cast<std::size_t>(u)] == 0) --frontier;
        if (--missing[static_cast<std::size_t>(v)] == 0) --frontier;
      }
      width = std::max(width, frontier);
    };
    place(s);
    while (static_cast<int>(order.size()) < n && width < best_width) {
      int pick = -1, pick_cost = 1 << 30, pick_links = -1;
      for (int v = 0; v < n; ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        int links = 0, closes = 0;
        for (int u : nb[static_cast<std::size_t>(v)])
          if (in[static_cast<std::size_t>(u)]) {
            ++links;
            if (missing[static_cast<std::size_t>(u)] == 1) ++closes;
          }
        int stays = static_cast<int>(nb[static_cast<std::size_t>(v)].size()) - links > 0 ? 1 : 0;
        int cost = stays - closes;
        if (links == 0) cost += n;  // prefer staying connected
        if (cost < pick_cost || (cost == pick_cost && links > pick_links)) {
          pick = v;
          pick_cost = cost;
          pick_links = links;
        }
      }
      place(pick);
    }
    if (width < best_width) {
      best_width = width;
      best = order;
    }
  }
  return best;
}

struct FrontierResult {
  int count = 0;             // number of disjoint target cycles, capped
  std::vector<Walk> cycles;  // witness family
  std::size_t peak_states = 0;
};

namespace detail {

// Frontier DP over partial families of disjoint paths and cycles. Each frontier slot is
// coded in 16 bits: status (free, saturated, fragment end), the slot of the other end of
// its fragment, and an interned value of the fragment read from that other end.
class FrontierDp {
 public:
  static constexpr std::size_t kMaxWidth = 48;

  FrontierDp(const LabeledGraph& g, Target target, const std::vector<int>& order)
      : g_(g), target_(resolve_target(g, target)), order_(order) {
    for (std::size_t ei = 0; ei < g_.edge_count(); ++ei) {
      const EdgeRec& e = g_.edge(ei);
      to_head_.push_back(intern(edge_value_towards(g_, ei, e.head)));
      to_tail_.push_back(e.is_loop() ? to_head_.back() : intern(edge_value_towards(g_, ei, e.tail)));
    }
  }

  FrontierResult run(int cap, const std::vector<bool>& removed, const std::vector<bool>& banned_edge) {
    const int n = static_cast<int>(g_.vertex_count());
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) pos[static_cast<std::size_t>(order_[p])] = static_cast<int>(p);
    auto gone = [&](int v) { return !removed.empty() && removed[static_cast<std::size_t>(v)]; };
    auto banned = [&](int ei) { return !banned_edge.empty() && banned_edge[static_cast<std::size_t>(ei)]; };
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) last[static_cast<std::size_t>(v)] = pos[static_cast<std::size_t>(v)];
    for (std::size_t ei = 0; ei < g_.edge_count(); ++ei) {
      const EdgeRec& e = g_.edge(ei);
      int a = g_.vertex_index(e.tail), b = g_.vertex_index(e.head);
      if (gone(a) || gone(b) || banned(static_cast<int>(ei))) continue;
      int m = std::max(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
      last[static_cast<std::size_t>(a)] = std::max(last[static_cast<std::size_t>(a)], m);
      last[static_cast<std::size_t>(b)] = std::max(last[static_cast<std::size_t>(b)], m);
    }

    std::vector<int> frontier;  // vertex indices
    Table table;
    table.add(Key{}, Info{-1, 0, 0});
    struct Layer {
      std::vector<int> parent;
      std::vector<std::uint32_t> mask;
      std::vector<int> edges;
    };
    std::vector<Layer> layers;
    FrontierResult res;
    bool done = false;  // a state reached the cap; only it is kept from then on

    for (std::size_t p = 0; p < order_.size(); ++p) {
      int v = order_[p];
      if (gone(v)) continue;
      std::vector<int> back;
      for (int ei : g_.incident(static_cast<std::size_t>(v))) {
        if (banned(ei)) continue;
        const EdgeRec& e = g_.edge(static_cast<std::size_t>(ei));
        int u = g_.vertex_index(e.tail == g_.vertices()[static_cast<std::size_t>(v)] ? e.head : e.tail);
        if (gone(u) || pos[static_cast<std::size_t>(u)] > static_cast<int>(p)) continue;
        back.push_back(ei);
      }
      if (back.size() > 31) throw GraphError("vertex degree too large for the frontier engine");
      if (frontier.size() + 1 > kMaxWidth) throw LimitExceeded("frontier too wide for the frontier engine");
      frontier.push_back(v);
      const std::size_t sv = frontier.size() - 1;
      const std::uint8_t width = static_cast<std::uint8_t>(frontier.size());

      std::vector<Key> cur_keys = std::move(table.keys);
      std::vector<Info> cur_info;
      for (std::size_t i = 0; i < cur_keys.size(); ++i) {
        cur_keys[i].width = width;
        cur_keys[i].slot[sv] = 0;
        cur_info.push_back(Info{static_cast<int>(i), 0, table.info[i].edges});
      }
      for (std::size_t bi = 0; bi < back.size(); ++bi) {
        int ei = back[bi];
        const EdgeRec& e = g_.edge(static_cast<std::size_t>(ei));
        int other = g_.vertex_index(e.tail == g_.vertices()[static_cast<std::size_t>(v)] ? e.head : e.tail);
        std::size_t su = slot_of(frontier, other);
        std::uint16_t u_to_v = e.is_loop() ? to_head_[static_cast<std::size_t>(ei)]
                                           : (g_.vertex_index(e.head) == v ? to_head_[static_cast<std::size_t>(ei)]
                                                                           : to_tail_[static_cast<std::size_t>(ei)]);
        Table next;
        next.reserve(cur_keys.size() * 2);
        for (std::size_t i = 0; i < cur_keys.size(); ++i) {
          next.add(cur_keys[i], cur_info[i]);
          Key k = cur_keys[i];
          if (use_edge(k, su, sv, static_cast<std::size_t>(ei), u_to_v, cap)) {
            Info in = cur_info[i];
            in.mask |= (1u << bi);
            in.edges += 1;
            next.add(k, in);
          }
        }
        if (!done) {
          for (std::size_t i = 0; i < next.keys.size(); ++i)
            if (next.keys[i].count >= cap) {
              Table only;
              only.add(next.keys[i], next.info[i]);
              next = std::move(only);
              done = true;
              break;
            }
        }
        cur_keys = std::move(next.keys);
        cur_info = std::move(next.info);
      }
      // forget finished vertices
      std::vector<std::size_t> drop;
      std::vector<int> remap(frontier.size(), -1);
      std::vector<int> nf;
      for (std::size_t s = 0; s < frontier.size(); ++s) {
        if (last[static_cast<std::size_t>(frontier[s])] <= static_cast<int>(p)) {
          drop.push_back(s);
        } else {
          remap[s] = static_cast<int>(nf.size());
          nf.push_back(frontier[s]);
        }
      }
      Table next;
      next.reserve(cur_keys.size());
      for (std::size_t i = 0; i < cur_keys.size(); ++i) {
        const Key& k = cur_keys[i];
        bool ok = true;
        for (std::size_t s : drop)
          if (status(k.slot[s]) == kEnd && k.count < cap) ok = false;
        if (!ok) continue;
        Key nk;
        nk.count = k.count;
        nk.width = static_cast<std::uint8_t>(nf.size());
        for (std::size_t s = 0; s < frontier.size(); ++s) {
          if (remap[s] < 0) continue;
          std::uint16_t c = k.slot[s];
          if (status(c) == kEnd) {
            int m = remap[mate(c)];
            c = m < 0 ? kSat : end_code(static_cast<std::uint16_t>(m), value(c));  // mate dropped: fragment abandoned
          }
          nk.slot[static_cast<std::size_t>(remap[s])] = c;
        }
        next.add(nk, cur_info[i]);
      }
      frontier = std::move(nf);

      Layer layer;
      layer.edges = back;
      for (const Info& in : next.info) {
        layer.parent.push_back(in.parent);
        layer.mask.push_back(in.mask);
      }
      layers.push_back(std::move(layer));
      table = std::move(next);
      res.peak_states = std::max(res.peak_states, table.keys.size());
    }

    int best = -1;
    for (std::size_t i = 0; i < table.keys.size(); ++i) {
      const Key& k = table.keys[i];
      if (best < 0 || k.count > table.keys[static_cast<std::size_t>(best)].count ||
          (k.count == table.keys[static_cast<std::size_t>(best)].count &&
           table.info[i].edges < table.info[static_cast<std::size_t>(best)].edges))
        best = static_cast<int>(i);
    }
    if (best < 0) return res;
    res.count = table.keys[static_cast<std::size_t>(best)].count;
    std::vector<int> used;
    int idx = best;
    for (std::size_t l = layers.size(); l-- > 0;) {
      const Layer& layer = layers[l];
      std::uint32_t m = layer.mask[static_cast<std::size_t>(idx)];
      for (std::size_t b = 0; b < layer.edges.size(); ++b)
        if (m & (1u << b)) used.push_back(layer.edges[b]);
      idx = layer.parent[static_cast<std::size_t>(idx)];
    }
    res.cycles = cycles_from_edge_set(g_, strip_paths(used));
    return res;
  }

 private:
  static constexpr std::uint16_t kFree = 0, kSat = 1, kEnd = 2;

  struct Key {
    std::uint16_t slot[kMaxWidth] = {};
    std::uint8_t width = 0;
    std::uint8_t count = 0;
    friend bool operator==(const Key& a, const Key& b) {
      return a.width == b.width && a.count == b.count && std::equal(a.slot, a.slot + a.width, b.slot);
    }
    std::uint64_t hash() const {
      std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(count) << 8) ^ width;
      for (std::size_t s = 0; s < width; ++s) {
        h ^= slot[s];
        h *= 1099511628211ull;
      }
      return h ^ (h >> 29);
    }
  };
  struct Info {
    int parent;
    std::uint32_t mask;
    int edges;
  };
  // Open addressing keyed by Key; keeps the entry with fewer edges.
  struct Table {
    std::vector<Key> keys;
    std::vector<Info> info;
    std::vector<std::int32_t> index;
    std::size_t mask = 0;
    void reserve(std::size_t n) {
      std::size_t cap = 16;
      while (cap < 2 * n + 2) cap <<= 1;
      index.assign(cap, -1);
      mask = cap - 1;
      keys.reserve(n);
      info.reserve(n);
    }
    void grow() {
      std::size_t cap = index.empty() ? 16 : index.size() * 2;
      index.assign(cap, -1);
      mask = cap - 1;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::size_t h = keys[i].hash() & mask;
        while (index[h] >= 0) h = (h + 1) & mask;
        index[h] = static_cast<std::int32_t>(i);
      }
    }
    void add(const Key& k, const Info& in) {
      if (2 * (keys.size() + 1) > index.size()) grow();
      std::size_t h = k.hash() & mask;
      while (index[h] >= 0) {
        std::size_t j = static_cast<std::size_t>(index[h]);
        if (keys[j] == k) {
          if (in.edges < info[j].edges) info[j] = in;
          return;
        }
        h = (h + 1) & mask;
      }
      index[h] = static_cast<std::int32_t>(keys.size());
      keys.push_back(k);
      info.push_back(in);
    }
  };

  static std::uint16_t status(std::uint16_t c) { return c & 3u; }
  static std::size_t mate(std::uint16_t c) { return (c >> 2) & 0x3fu; }
  static std::uint16_t value(std::uint16_t c) { return static_cast<std::uint16_t>(c >> 8); }
  static std::uint16_t end_code(std::uint16_t mate_slot, std::uint16_t val) {
    return static_cast<std::uint16_t>(kEnd | (mate_slot << 2) | (val << 8));
  }

  static std::size_t slot_of(const std::vector<int>& frontier, int v) {
    for (std::size_t s = 0; s < frontier.size(); ++s)
      if (frontier[s] == v) return s;
    throw GraphError("frontier lost a vertex");
  }

  // Drops the edges of abandoned fragments, keeping the cycles.
  std::vector<int> strip_paths(const std::vector<int>& used) const {
    std::map<int, int> deg;
    for (int ei : used) {
      const EdgeRec& e = g_.edge(static_cast<std::size_t>(ei));
      deg[e.tail] += 1;
      deg[e.head] += 1;
    }
    std::set<int> keep(used.begin(), used.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = keep.begin(); it != keep.end();) {
        const EdgeRec& e = g_.edge(static_cast<std::size_t>(*it));
        if (!e.is_loop() && (deg[e.tail] < 2 || deg[e.head] < 2)) {
          deg[e.tail] -= 1;
          deg[e.head] -= 1;
          it = keep.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    std::vector<int> ids;
    for (int ei : keep) ids.push_back(g_.edge(static_cast<std::size_t>(ei)).id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  std::uint16_t intern(const Element& e) {
    auto it = ids_.find(e);
    if (it != ids_.end()) return it->second;
    if (elems_.size() >= 255) throw LimitExceeded("too many distinct values for the frontier engine");
    std::uint16_t id = static_cast<std::uint16_t>(elems_.size());
    ids_.emplace(e, id);
    elems_.push_back(e);
    good_.push_back(value_matches(e, target_) ? 1 : 0);
    for (auto& row : sums_) row.push_back(kUnknown);
    sums_.emplace_back(elems_.size(), kUnknown);
    negs_.push_back(kUnknown);
    return id;
  }
  std::uint16_t add(std::uint16_t a, std::uint16_t b) {
    if (sums_[a][b] == kUnknown) {
      std::uint16_t r = intern(op(elems_[a], elems_[b]));
      sums_[a][b] = r;
    }
    return sums_[a][b];
  }
  std::uint16_t neg(std::uint16_t a) {
    if (negs_[a] == kUnknown) {
      std::uint16_t r = intern(inv(elems_[a]));
      negs_[a] = r;
    }
    return negs_[a];
  }

  // Applies "edge ei is in the family" between slots su and sv; false if not allowed.
  bool use_edge(Key& k, std::size_t su, std::size_t sv, std::size_t ei, std::uint16_t to_v, int cap) {
    if (k.count >= cap) return false;
    std::uint16_t cu = k.slot[su], cv = k.slot[sv];
    if (su == sv) {  // loop
      if (status(cv) != kFree || !good_[to_v]) return false;
      k.slot[sv] = kSat;
      k.count = static_cast<std::uint8_t>(k.count + 1);
      return true;
    }
    (void)ei;
    if (status(cu) == kSat || status(cv) == kSat) return false;
    if (status(cu) == kFree && status(cv) == kFree) {
      k.slot[su] = end_code(static_cast<std::uint16_t>(sv), to_v);
      k.slot[sv] = end_code(static_cast<std::uint16_t>(su), neg(to_v));
      return true;
    }
    if (status(cu) == kEnd && status(cv) == kEnd && mate(cu) == sv) {
      std::uint16_t val = add(value(cv), to_v);  // start at v, run to u, return
      if (!good_[val]) return false;
      k.slot[su] = kSat;
      k.slot[sv] = kSat;
      k.count = static_cast<std::uint8_t>(k.count + 1);
      return true;
    }
    if (status(cu) == kEnd && status(cv) == kFree) {
      std::size_t sa = mate(cu);
      std::uint16_t a_to_v = add(neg(value(cu)), to_v);
      k.slot[su] = kSat;
      k.slot[sa] = end_code(static_cast<std::uint16_t>(sv), a_to_v);
      k.slot[sv] = end_code(static_cast<std::uint16_t>(sa), neg(a_to_v));
      return true;
    }
    if (status(cu) == kFree && status(cv) == kEnd) {
      std::size_t sb = mate(cv);
      std::uint16_t b_to_u = add(neg(value(cv)), neg(to_v));
      k.slot[sv] = kSat;
      k.slot[sb] = end_code(static_cast<std::uint16_t>(su), b_to_u);
      k.slot[su] = end_code(static_cast<std::uint16_t>(sb), neg(b_to_u));
      return true;
    }
    // two fragments a..u and v..b joined into a..b
    std::size_t sa = mate(cu), sb = mate(cv);
    std::uint16_t a_to_b = add(add(neg(value(cu)), to_v), value(cv));
    k.slot[su] = kSat;
    k.slot[sv] = kSat;
    k.slot[sa] = end_code(static_cast<std::uint16_t>(sb), a_to_b);
    k.slot[sb] = end_code(static_cast<std::uint16_t>(sa), neg(a_to_b));
    return true;
  }

  static constexpr std::uint16_t kUnknown = 0xffff;

  const LabeledGraph& g_;
  Target target_;
  std::vector<int> order_;
  std::vector<std::uint16_t> to_head_, to_tail_;
  std::unordered_map<Element, std::uint16_t, ElementHash> ids_;
  std::vector<Element> elems_;
  std::vector<char> good_;
  std::vector<std::vector<std::uint16_t>> sums_;
  std::vector<std::uint16_t> negs_;
};
}  // namespace detail

// Exact search over families of disjoint target cycles along a vertex order; the count
// is capped at `cap`. Removed vertices and banned edges (by index) are ignored.
inline FrontierResult frontier_pack(const LabeledGraph& g, Target target, int cap, const std::vector<int>& order,
                                    const std::vector<bool>& removed = {}, const std::vector<bool>& banned_edge = {}) {
  detail::FrontierDp dp(g, target, order);
  return dp.run(cap, removed, banned_edge);
}

struct FrontierReport {
  Target target = Target::Auto;
  int nu = 0;                 // exact when below nu_cap
  int nu_cap = 2;
  int nu_half_lower = 0;      // lower bound from the cycles met along the way
  int tau = 0;                // exact
  std::vector<Walk> packing;
  std::vector<Walk> half_packing;
  std::vector<int> transversal;
  std::vector<Walk> found;    // cycles gathered by the covering loop
  std::size_t peak_states = 0;
  int oracle_calls = 0;
};

// Covering by implicit hitting sets: a minimum hitting set of the cycles found so far
// is optimal as soon as the frontier search finds no target cycle avoiding it.
inline FrontierReport frontier_pack_cover(const LabeledGraph& g, Target target = Target::Auto, int nu_cap = 2,
                                          int half_goal = 4) {
  FrontierReport r;
  r.target = resolve_target(g, target);
  r.nu_cap = nu_cap;
  std::vector<int> order = frontier_order(g);
  detail::FrontierDp dp(g, r.target, order);
  FrontierResult p = dp.run(nu_cap, {}, {});
  r.peak_states = p.peak_states;
  ++r.oracle_calls;
  r.nu = p.count;
  r.packing = p.cycles;
  const std::size_t n = g.vertex_count();
  SetSystem sys;
  sys.n = static_cast<int>(n);
  auto add_found = [&](const Walk& w) {
    std::vector<int> s;
    for (int v : w.vertex_set()) s.push_back(g.vertex_index(v));
    sys.sets.push_back(s);
    r.found.push_back(w);
  };
  for (const Walk& w : p.cycles) add_found(w);
  while (true) {
    std::vector<int> h = min_hitting_set(sys);
    std::vector<bool> removed(n, false);
    for (int v : h) removed[static_cast<std::size_t>(v)] = true;
    FrontierResult q = dp.run(1, removed, {});
    ++r.oracle_calls;
    r.peak_states = std::max(r.peak_states, q.peak_states);
    if (q.count == 0) {
      for (int v : h) r.transversal.push_back(g.vertices()[static_cast<std::size_t>(v)]);
      r.tau = static_cast<int>(h.size());
      break;
    }
    add_found(q.cycles.front());
  }
  for (int i : max_set_packing(sys, 2)) r.half_packing.push_back(r.found[static_cast<std::size_t>(i)]);
  // Greedy extension: add cycles avoiding vertices already used twice.
  std::set<std::vector<int>> have;
  for (const Walk& w : r.half_packing) have.insert(w.edge_set());
  while (static_cast<int>(r.half_packing.size()) < half_goal) {
    std::vector<int> use(n, 0);
    for (const Walk& w : r.half_packing)
      for (int v : w.vertex_set()) ++use[static_cast<std::size_t>(g.vertex_index(v))];
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) removed[i] = use[i] >= 2;
    std::optional<Walk> fresh;
    FrontierResult q = dp.run(1, removed, {});
    ++r.oracle_calls;
    if (q.count == 0) break;
    if (!have.count(q.cycles.front().edge_set())) {
      fresh = q.cycles.front();
    } else {
      for (int e : q.cycles.front().edges) {
        std::vector<bool> banned(g.edge_count(), false);
        banned[static_cast<std::size_t>(g.edge_index(e))] = true;
        FrontierResult b = dp.run(1, removed, banned);
        ++r.oracle_calls;
        if (b.count > 0 && !have.count(b.cycles.front().edge_set())) {
          fresh = b.cycles.front();
          break;
        }
      }
    }
    if (!fresh) break;
    have.insert(fresh->edge_set());
    r.half_packing.push_back(*fresh);
  }
  r.nu_half_lower = static_cast<int>(r.half_packing.size());
  return r;
}

}  // namespace glg
