#pragma once

// Random generators for valid inputs of the constructions under test.

#include <set>
#include <string>
#include <vector>

#include "glg/linkage.hpp"
#include "glg/lemmas.hpp"
#include "glg/random.hpp"

namespace fixtures {

using namespace glg;

inline const std::vector<std::string>& abelian_pool() {
  static const std::vector<std::string> pool{"z2", "z3", "z4", "z5", "z", "za2"};
  return pool;
}

inline GroupPtr random_sum(Rng& rng) {
  const auto& p = abelian_pool();
  auto pick = [&] { return parse_group(p[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(p.size()) - 1))]); };
  return Group::sum(pick(), pick());
}

// Graph under construction where every edge is given by its value read from a to b.
struct Draft {
  GroupPtr grp;
  Rng* rng;
  std::vector<int> vs;
  std::vector<EdgeRec> es;
  std::vector<Element> ls;
  int nv = 0, ne = 0;

  Draft(GroupPtr g, Rng& r) : grp(std::move(g)), rng(&r) {}

  int vertex() {
    vs.push_back(nv);
    return nv++;
  }
  int edge(int a, int b, const Element& val) {
    if (coin(*rng, 0.5)) {
      es.push_back({ne, a, b});
      ls.push_back(val);
    } else {
      es.push_back({ne, b, a});
      ls.push_back(inv(val));
    }
    return ne++;
  }
  Element any() { return random_element(grp, *rng, 2); }
  LabeledGraph build() const { return LabeledGraph(grp, vs, es, ls); }

  // Path through `ids` whose total read from front to back is `total`.
  Walk path(const std::vector<int>& ids, const Element& total) {
    Walk w{{ids.front()}, {}};
    Element acc = grp->zero();
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      Element v = i + 2 == ids.size() ? op(inv(acc), total) : any();
      acc = op(acc, v);
      w.edges.push_back(edge(ids[i], ids[i + 1], v));
      w.vertices.push_back(ids[i + 1]);
    }
    return w;
  }
  Walk cycle(const std::vector<int>& ids, const Element& total) {
    std::vector<int> closed = ids;
    closed.push_back(ids.front());
    return path(closed, total);
  }
  std::vector<int> fresh(int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(vertex());
    return out;
  }
  // Random element whose coordinate i is non-zero; the other coordinate is zero when
  // `other_zero` holds.
  Element nonzero_in(int i, bool other_zero = false) {
    for (;;) {
      Element l = random_element(grp->left(), *rng, 3), r = random_element(grp->right(), *rng, 3);
      if (other_zero) (i == 1 ? r : l) = (i == 1 ? grp->right() : grp->left())->zero();
      if (!is_zero(i == 1 ? l : r)) return grp->pair(l, r);
    }
  }
  void noise(int extra_vertices, int extra_edges) {
    for (int i = 0; i < extra_vertices; ++i) vertex();
    for (int i = 0; i < extra_edges && nv > 1; ++i) {
      int a = static_cast<int>(uniform(*rng, 0, nv - 1)), b = static_cast<int>(uniform(*rng, 0, nv - 1));
      if (a != b) edge(a, b, any());
    }
  }
};

inline std::vector<int> path_ids(Draft& d, int from, int to, int interior) {
  std::vector<int> ids{from};
  for (int v : d.fresh(interior)) ids.push_back(v);
  ids.push_back(to);
  return ids;
}

struct TwoCycles {
  LabeledGraph g;
  Walk c1, c2, p1, p2;
};

inline TwoCycles two_cycles(Rng& rng) {
  Draft d(random_sum(rng), rng);
  std::vector<int> u = d.fresh(static_cast<int>(uniform(rng, 2, 5)));
  std::vector<int> w = d.fresh(static_cast<int>(uniform(rng, 2, 5)));
  TwoCycles t;
  Element a = d.nonzero_in(1), b = d.nonzero_in(2);
  t.c1 = d.cycle(u, a);
  t.c2 = d.cycle(w, b);
  std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(u.size()) - 1));
  std::size_t i2 = (i + static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(u.size()) - 1))) % u.size();
  std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(w.size()) - 1));
  std::size_t j2 = (j + static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(w.size()) - 1))) % w.size();
  t.p1 = d.path(path_ids(d, u[i], w[j], static_cast<int>(uniform(rng, 0, 2))), d.any());
  t.p2 = d.path(path_ids(d, u[i2], w[j2], static_cast<int>(uniform(rng, 0, 2))), d.any());
  if (coin(rng, 0.5)) t.p1 = t.p1.reversed();
  d.noise(static_cast<int>(uniform(rng, 0, 2)), static_cast<int>(uniform(rng, 0, 4)));
  t.g = d.build();
  return t;
}

struct Brick {
  LabeledGraph g;
  Walk c, c1, c2, p1, p1b, p2, p2b;
};

inline Brick brick(Rng& rng) {
  Draft d(random_sum(rng), rng);
  int len = static_cast<int>(uniform(rng, 4, 9));
  std::vector<int> cv = d.fresh(len);
  // four distinct positions in cyclic order p1, p1', p2, p2'
  std::set<int> pos;
  while (pos.size() < 4) pos.insert(static_cast<int>(uniform(rng, 0, len - 1)));
  std::vector<int> ps(pos.begin(), pos.end());
  int rot = static_cast<int>(uniform(rng, 0, 3));
  std::rotate(ps.begin(), ps.begin() + rot, ps.end());
  std::vector<int> u = d.fresh(static_cast<int>(uniform(rng, 2, 4)));
  std::vector<int> w = d.fresh(static_cast<int>(uniform(rng, 2, 4)));
  Brick b;
  b.c = d.cycle(cv, d.any());
  b.c1 = d.cycle(u, d.nonzero_in(1, true));
  b.c2 = d.cycle(w, d.nonzero_in(2));
  auto attach = [&](int from, int to) { return d.path(path_ids(d, from, to, static_cast<int>(uniform(rng, 0, 2))), d.any()); };
  std::size_t q = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(u.size()) - 1));
  std::size_t qb = (q + static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(u.size()) - 1))) % u.size();
  std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(w.size()) - 1));
  std::size_t rb = (r + static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(w.size()) - 1))) % w.size();
  b.p1 = attach(cv[static_cast<std::size_t>(ps[0])], u[q]);
  b.p1b = attach(cv[static_cast<std::size_t>(ps[1])], u[qb]);
  b.p2 = attach(cv[static_cast<std::size_t>(ps[2])], w[r]);
  b.p2b = attach(cv[static_cast<std::size_t>(ps[3])], w[rb]);
  d.noise(static_cast<int>(uniform(rng, 0, 2)), static_cast<int>(uniform(rng, 0, 4)));
  b.g = d.build();
  return b;
}

struct Exchange {
  LabeledGraph g;
  std::vector<int> s;
  std::vector<Walk> q, r;
};

// 3t Gamma_1-non-zero S-paths Q and t Gamma_2-non-zero S-paths R; R visits interior
// vertices of Q one at a time.
inline Exchange exchange(Rng& rng, int t) {
  Draft d(random_sum(rng), rng);
  Exchange ex;
  std::vector<std::vector<int>> interiors;
  for (int i = 0; i < 3 * t; ++i) {
    std::vector<int> ids = path_ids(d, d.vertex(), d.vertex(), static_cast<int>(uniform(rng, 1, 4)));
    ex.s.push_back(ids.front());
    ex.s.push_back(ids.back());
    interiors.emplace_back(ids.begin() + 1, ids.end() - 1);
    ex.q.push_back(d.path(ids, d.nonzero_in(1)));
  }
  std::set<int> taken;
  for (int i = 0; i < t; ++i) {
    std::vector<int> ids{d.vertex()};
    int hops = static_cast<int>(uniform(rng, 0, 3 * t));
    for (int k = 0; k < hops; ++k) {
      const auto& in = interiors[static_cast<std::size_t>(uniform(rng, 0, 3 * t - 1))];
      int v = in[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(in.size()) - 1))];
      if (taken.count(v)) continue;
      taken.insert(v);
      if (coin(rng, 0.3)) ids.push_back(d.vertex());
      ids.push_back(v);
    }
    ids.push_back(d.vertex());
    ex.s.push_back(ids.front());
    ex.s.push_back(ids.back());
    ex.r.push_back(d.path(ids, d.nonzero_in(2)));
  }
  ex.g = d.build();
  return ex;
}

// Pure linkage of `type` on the given sorted terminal positions (an even number).
inline std::vector<Chord> pure_on(const std::vector<int>& pos, PairType type) {
  std::vector<Chord> out;
  const std::size_t k = pos.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    switch (type) {
      case PairType::Series: out.emplace_back(pos[2 * i], pos[2 * i + 1]); break;
      case PairType::Nested: out.emplace_back(pos[i], pos[pos.size() - 1 - i]); break;
      case PairType::Crossing: out.emplace_back(pos[i], pos[k + i]); break;
    }
  }
  return out;
}

// Two pure linkages of size n on a random interleaving of 4n terminals.
inline std::pair<std::vector<Chord>, std::vector<Chord>> linkage_pair(Rng& rng, int n, PairType tp, PairType tq) {
  std::vector<int> owner(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < 4 * n; ++i) owner[static_cast<std::size_t>(i)] = i < 2 * n ? 0 : 1;
  std::shuffle(owner.begin(), owner.end(), rng);
  std::vector<int> pp, qq;
  for (int i = 0; i < 4 * n; ++i) (owner[static_cast<std::size_t>(i)] == 0 ? pp : qq).push_back(i);
  std::vector<Chord> p = pure_on(pp, tp), q = pure_on(qq, tq);
  std::shuffle(p.begin(), p.end(), rng);
  std::shuffle(q.begin(), q.end(), rng);
  return {p, q};
}

// Random perfect matching of 2k terminals.
inline std::vector<Chord> random_matching(Rng& rng, int k) {
  std::vector<int> ends(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < 2 * k; ++i) ends[static_cast<std::size_t>(i)] = i;
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Chord> out;
  for (int i = 0; i < k; ++i) out.emplace_back(ends[static_cast<std::size_t>(2 * i)], ends[static_cast<std::size_t>(2 * i + 1)]);
  return out;
}

// Chord i joins i and k + perm[i]: every pair crosses or nests.
inline std::vector<Chord> permutation_family(const std::vector<int>& perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<Chord> out;
  for (int i = 0; i < k; ++i) out.emplace_back(i, k + perm[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace fixtures
