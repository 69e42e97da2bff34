#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glg/graph.hpp"

namespace glg {

class LinkageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PairType { Series, Nested, Crossing };

inline const char* pair_type_name(PairType t) {
  switch (t) {
    case PairType::Series: return "series";
    case PairType::Nested: return "nested";
    case PairType::Crossing: return "crossing";
  }
  return "?";
}

inline PairType parse_pair_type(const std::string& s) {
  if (s == "series") return PairType::Series;
  if (s == "nested") return PairType::Nested;
  if (s == "crossing") return PairType::Crossing;
  throw LinkageError("unknown linkage type '" + s + "'");
}

// Endpoint positions of one path in the terminal order; left < right.
struct Chord {
  int left = 0;
  int right = 0;
  Chord() = default;
  Chord(int a, int b) : left(std::min(a, b)), right(std::max(a, b)) {
    if (a == b) throw LinkageError("a chord needs two distinct ends");
  }
  friend bool operator==(const Chord& a, const Chord& b) { return a.left == b.left && a.right == b.right; }
};

inline PairType classify_pair(Chord p, Chord q) {
  if (p.left == q.left || p.left == q.right || p.right == q.left || p.right == q.right)
    throw LinkageError("paths share an endpoint");
  if (q.left < p.left) std::swap(p, q);
  if (p.right < q.left) return PairType::Series;
  if (q.right < p.right) return PairType::Nested;
  return PairType::Crossing;
}

inline void require_distinct_ends(const std::vector<Chord>& cs) {
  std::set<int> ends;
  for (const Chord& c : cs)
    if (!ends.insert(c.left).second || !ends.insert(c.right).second) throw LinkageError("linkage paths share an endpoint");
}

// The common type of all pairs; a linkage with fewer than two paths counts as series.
inline std::optional<PairType> linkage_type(const std::vector<Chord>& cs) {
  if (cs.size() < 2) return PairType::Series;
  PairType t = classify_pair(cs[0], cs[1]);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (classify_pair(cs[i], cs[j]) != t) return std::nullopt;
  return t;
}

inline bool is_pure(const std::vector<Chord>& cs) { return linkage_type(cs).has_value(); }

struct Interval {
  int lo = 0;
  int hi = 0;
  bool meets(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool before(const Interval& o) const { return hi < o.lo; }
};

inline Interval span(const std::vector<Chord>& cs) {
  Interval r{cs.front().left, cs.front().right};
  for (const Chord& c : cs) {
    r.lo = std::min(r.lo, c.left);
    r.hi = std::max(r.hi, c.right);
  }
  return r;
}
inline Interval left_span(const std::vector<Chord>& cs) {
  Interval r{cs.front().left, cs.front().left};
  for (const Chord& c : cs) {
    r.lo = std::min(r.lo, c.left);
    r.hi = std::max(r.hi, c.left);
  }
  return r;
}
inline Interval right_span(const std::vector<Chord>& cs) {
  Interval r{cs.front().right, cs.front().right};
  for (const Chord& c : cs) {
    r.lo = std::min(r.lo, c.right);
    r.hi = std::max(r.hi, c.right);
  }
  return r;
}

inline std::vector<Chord> pick(const std::vector<Chord>& cs, const std::vector<std::size_t>& idx) {
  std::vector<Chord> out;
  for (std::size_t i : idx) out.push_back(cs[i]);
  return out;
}

namespace detail {

inline std::vector<std::size_t> by_left(const std::vector<Chord>& cs) {
  std::vector<std::size_t> idx(cs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cs[a].left < cs[b].left; });
  return idx;
}

// Longest strictly monotone subsequence of seq (positions), increasing or decreasing.
inline std::vector<std::size_t> longest_monotone(const std::vector<int>& seq, bool increasing) {
  const std::size_t n = seq.size();
  std::vector<std::size_t> len(n, 1), prev(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
      if (ok && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = j;
      }
    }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (len[i] > len[best]) best = i;
  std::vector<std::size_t> out;
  if (n == 0) return out;
  for (std::size_t i = best; i != SIZE_MAX; i = prev[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

// A pure sub-linkage of size t from chords that pairwise cross or nest: a monotone run
// of right ends in left-end order. At least (t-1)^2 + 1 chords always suffice.
inline std::vector<std::size_t> extract_monotone(const std::vector<Chord>& cs, int t) {
  if (t < 1) throw LinkageError("t must be positive");
  require_distinct_ends(cs);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (classify_pair(cs[i], cs[j]) == PairType::Series) throw LinkageError("chords must pairwise cross or nest");
  std::vector<std::size_t> order = detail::by_left(cs);
  std::vector<int> rights;
  for (std::size_t i : order) rights.push_back(cs[i].right);
  std::vector<std::size_t> inc = detail::longest_monotone(rights, true);
  std::vector<std::size_t> dec = detail::longest_monotone(rights, false);
  const std::vector<std::size_t>& run = inc.size() >= static_cast<std::size_t>(t) ? inc : dec;
  if (run.size() < static_cast<std::size_t>(t)) throw LinkageError("no monotone run of length t");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < static_cast<std::size_t>(t); ++k) out.push_back(order[run[k]]);
  return out;
}

// A pure sub-linkage of size t from at least t^3 chords (indices, sorted by left end):
// t disjoint intervals if the greedy schedule finds them, otherwise a monotone run among
// the chords through the most stabbed point.
inline std::vector<std::size_t> extract_pure(const std::vector<Chord>& cs, int t) {
  if (t < 1) throw LinkageError("t must be positive");
  const std::size_t need = static_cast<std::size_t>(t) * static_cast<std::size_t>(t) * static_cast<std::size_t>(t);
  if (cs.size() < need) throw LinkageError("need at least t^3 = " + std::to_string(need) + " paths, got " + std::to_string(cs.size()));
  require_distinct_ends(cs);
  std::vector<std::size_t> order(cs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cs[a].right < cs[b].right; });
  std::vector<std::size_t> series;
  int edge = INT_MIN;
  for (std::size_t i : order)
    if (cs[i].left > edge) {
      series.push_back(i);
      edge = cs[i].right;
    }
  if (series.size() >= static_cast<std::size_t>(t)) {
    series.resize(static_cast<std::size_t>(t));
    std::sort(series.begin(), series.end(), [&](std::size_t a, std::size_t b) { return cs[a].left < cs[b].left; });
    return series;
  }
  std::set<int> points;
  for (const Chord& c : cs) {
    points.insert(c.left);
    points.insert(c.right);
  }
  int best_point = 0;
  std::size_t best_load = 0;
  for (int p : points) {
    std::size_t load = 0;
    for (const Chord& c : cs) load += (c.left <= p && p <= c.right) ? 1 : 0;
    if (load > best_load) {
      best_load = load;
      best_point = p;
    }
  }
  std::vector<std::size_t> stab;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].left <= best_point && best_point <= cs[i].right) stab.push_back(i);
  std::vector<std::size_t> out;
  for (std::size_t k : extract_monotone(pick(cs, stab), t)) out.push_back(stab[k]);
  return out;
}

struct Separation {
  std::vector<std::size_t> p;  // indices into the P chords
  std::vector<std::size_t> q;
  std::string rule;            // which case produced the result
};

// The disjointness clause matching the types of the original linkages.
inline bool separation_clause_holds(const std::vector<Chord>& p, const std::vector<Chord>& q, PairType tp, PairType tq) {
  if (p.empty() || q.empty()) return false;
  bool ps = tp == PairType::Series, qs = tq == PairType::Series;
  if (ps && qs) return !span(p).meets(span(q));
  if (ps) return !span(p).meets(left_span(q)) && !span(p).meets(right_span(q));
  if (qs) return !span(q).meets(left_span(p)) && !span(q).meets(right_span(p));
  std::vector<Interval> iv{left_span(p), right_span(p), left_span(q), right_span(q)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (iv[i].meets(iv[j])) return false;
  return true;
}

namespace detail {

inline Separation separate_series_first(const std::vector<Chord>& p, const std::vector<Chord>& q, PairType tq, std::size_t t) {
  std::vector<std::size_t> pi = by_left(p), qi = by_left(q);
  auto range = [](const std::vector<std::size_t>& v, std::size_t a, std::size_t b) {
    return std::vector<std::size_t>(v.begin() + static_cast<std::ptrdiff_t>(a), v.begin() + static_cast<std::ptrdiff_t>(b));
  };
  int pr_t = p[pi[t - 1]].right, pr_2t = p[pi[2 * t - 1]].right;
  if (q[qi[3 * t - 1]].left > pr_t) return {range(pi, 0, t), range(qi, 3 * t, 4 * t), "first block"};
  if (tq == PairType::Series) return {range(pi, t, 2 * t), range(qi, 0, t), "both in series"};
  std::size_t right_of = 0;
  for (const Chord& c : q) right_of += c.right > pr_2t ? 1 : 0;
  if (right_of >= 3 * t) return {range(pi, t, 2 * t), range(qi, t, 2 * t), "right ends beyond"};
  std::vector<std::size_t> low;
  for (std::size_t i : qi)
    if (q[i].right < pr_2t && low.size() < t) low.push_back(i);
  return {range(pi, 2 * t, 3 * t), low, "right ends before"};
}

}  // namespace detail

// Pure sub-linkages of size t from pure linkages of size 4t with pairwise distinct ends.
inline Separation separate_linkages(const std::vector<Chord>& p, const std::vector<Chord>& q, int t_in) {
  if (t_in < 1) throw LinkageError("t must be positive");
  const std::size_t t = static_cast<std::size_t>(t_in);
  if (p.size() != 4 * t || q.size() != 4 * t) throw LinkageError("both linkages need exactly 4t paths");
  std::vector<Chord> all = p;
  all.insert(all.end(), q.begin(), q.end());
  require_distinct_ends(all);
  auto tp = linkage_type(p), tq = linkage_type(q);
  if (!tp || !tq) throw LinkageError("both linkages must be pure");
  Separation s;
  if (*tp == PairType::Series) {
    s = detail::separate_series_first(p, q, *tq, t);
  } else if (*tq == PairType::Series) {
    Separation r = detail::separate_series_first(q, p, *tp, t);
    s = {r.q, r.p, r.rule};
  } else {
    std::vector<std::size_t> pi = detail::by_left(p), qi = detail::by_left(q);
    for (std::size_t a = 0; a < 4 && s.p.empty(); ++a)
      for (std::size_t b = 0; b < 4 && s.p.empty(); ++b) {
        std::vector<std::size_t> pa(pi.begin() + static_cast<std::ptrdiff_t>(a * t), pi.begin() + static_cast<std::ptrdiff_t>((a + 1) * t));
        std::vector<std::size_t> qb(qi.begin() + static_cast<std::ptrdiff_t>(b * t), qi.begin() + static_cast<std::ptrdiff_t>((b + 1) * t));
        std::vector<Chord> cp = pick(p, pa), cq = pick(q, qb);
        Interval xl = left_span(cp), xr = right_span(cp), yl = left_span(cq), yr = right_span(cq);
        if (!xl.meets(yl) && !xl.meets(yr) && !xr.meets(yl) && !xr.meets(yr))
          s = {pa, qb, "block pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"};
      }
    if (s.p.empty()) throw std::logic_error("no separated block pair");
  }
  if (!separation_clause_holds(pick(p, s.p), pick(q, s.q), *tp, *tq))
    throw std::logic_error("separation violates its disjointness clause");
  return s;
}

// ---- graph-level checks

struct CleanReport {
  bool ok = true;
  std::string clause;
  std::string detail;
};

// Chords of graph paths whose ends lie in the ordered terminal list.
inline std::vector<Chord> chords_of(const std::vector<int>& terminals, const std::vector<Walk>& paths) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < terminals.size(); ++i) pos[terminals[i]] = static_cast<int>(i);
  std::vector<Chord> out;
  for (const Walk& w : paths) {
    if (w.vertices.empty() || !pos.count(w.start()) || !pos.count(w.end()))
      throw LinkageError("path end is not a terminal");
    out.emplace_back(pos[w.start()], pos[w.end()]);
  }
  return out;
}

// Gamma value of a path read from its left end to its right end; coordinate 0 means the
// whole label, 1 or 2 a direct-sum side.
inline Element left_to_right_value(const LabeledGraph& g, const std::vector<int>& terminals, const Walk& w, int coordinate) {
  auto pos = [&](int v) { return std::find(terminals.begin(), terminals.end(), v) - terminals.begin(); };
  Walk d = pos(w.start()) < pos(w.end()) ? w : w.reversed();
  Element v = walk_value(g, d);
  if (coordinate == 0) return v;
  return project(v, coordinate == 1 ? Side::Left : Side::Right);
}

inline CleanReport check_clean(const LabeledGraph& g, const std::vector<int>& terminals, const std::vector<Walk>& paths,
                               const std::vector<int>& b_side, int coordinate) {
  CleanReport r;
  auto fail = [&](const std::string& c, const std::string& d) {
    r.ok = false;
    r.clause = c;
    r.detail = d;
    return r;
  };
  if (paths.empty()) return fail("linkage", "empty linkage");
  std::set<int> used;
  std::set<int> term(terminals.begin(), terminals.end());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Walk& w = paths[i];
    if (w.edges.empty() || !is_path_walk(g, w)) return fail("linkage", "path " + std::to_string(i) + " is not a path");
    if (!term.count(w.start()) || !term.count(w.end())) return fail("linkage", "path " + std::to_string(i) + " does not end in terminals");
    for (std::size_t k = 1; k + 1 < w.vertices.size(); ++k)
      if (term.count(w.vertices[k])) return fail("linkage", "path " + std::to_string(i) + " passes through a terminal");
    for (int v : w.vertices)
      if (!used.insert(v).second) return fail("linkage", "paths are not disjoint at vertex " + std::to_string(v));
  }
  std::set<int> bset(b_side.begin(), b_side.end());
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t k = 1; k + 1 < paths[i].vertices.size(); ++k)
      if (bset.count(paths[i].vertices[k])) return fail("interior", "path " + std::to_string(i) + " has an interior vertex in B");
  std::vector<Chord> cs = chords_of(terminals, paths);
  auto type = linkage_type(cs);
  if (!type) return fail("pure", "linkage is not pure");
  std::vector<Element> vals;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    vals.push_back(left_to_right_value(g, terminals, paths[i], coordinate));
    if (is_zero(vals.back())) return fail("non-zero", "path " + std::to_string(i) + " is zero");
  }
  if (*type != PairType::Series && paths.size() >= 2)
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (vals[i] != vals[0]) return fail("equal-values", "paths 0 and " + std::to_string(i) + " have different values");
  return r;
}

inline CleanReport check_clean_pair(const LabeledGraph& g, const std::vector<int>& terminals, const std::vector<Walk>& p,
                                    const std::vector<Walk>& q, const std::vector<int>& b_side) {
  CleanReport r = check_clean(g, terminals, p, b_side, 1);
  if (!r.ok) {
    r.clause = "P " + r.clause;
    return r;
  }
  r = check_clean(g, terminals, q, b_side, 2);
  if (!r.ok) {
    r.clause = "Q " + r.clause;
    return r;
  }
  auto fail = [&](const std::string& c, const std::string& d) {
    r.ok = false;
    r.clause = c;
    r.detail = d;
    return r;
  };
  std::set<int> pv;
  for (const Walk& w : p) pv.insert(w.vertices.begin(), w.vertices.end());
  for (const Walk& w : q)
    for (int v : w.vertices)
      if (pv.count(v)) return fail("disjoint", "P and Q meet at vertex " + std::to_string(v));
  if (p.size() != q.size()) return fail("sizes", "sizes differ");
  std::vector<Chord> cp = chords_of(terminals, p), cq = chords_of(terminals, q);
  Interval ip = span(cp), iq = span(cq);
  if (!ip.meets(iq)) {
    if (!ip.before(iq)) return fail("position", "I_P is not left of I_Q");
    return r;
  }
  Interval pl = left_span(cp), ql = left_span(cq), pr = right_span(cp), qr = right_span(cq);
  if (!(pl.before(ql) && ql.before(pr) && pr.before(qr))) return fail("position", "endpoint intervals are not interleaved");
  if (*linkage_type(cp) == PairType::Series || *linkage_type(cq) == PairType::Series)
    return fail("position", "a linkage is in series while the spans meet");
  return r;
}

}  // namespace glg
