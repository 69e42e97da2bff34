#pragma once

#include <random>
#include <vector>

#include "glg/graph.hpp"

namespace glg {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Integers and free-abelian coordinates are drawn from [-span, span].
inline Element random_element(const GroupPtr& g, Rng& rng, long long span = 3) {
  switch (g->kind()) {
    case GroupKind::Integers: return g->integer(BigInt(uniform(rng, -span, span)));
    case GroupKind::Cyclic: return g->residue(uniform(rng, 0, g->modulus() - 1));
    case GroupKind::FreeAbelian: {
      std::vector<long long> v(static_cast<std::size_t>(g->rank()));
      for (auto& x : v) x = uniform(rng, -span, span);
      return g->vector(v);
    }
    case GroupKind::Quotient: {
      std::vector<long long> v;
      for (long long d : g->factors()) v.push_back(d > 0 ? uniform(rng, 0, d - 1) : uniform(rng, -span, span));
      return g->vector(v);
    }
    case GroupKind::Free: {
      std::vector<long long> w;
      long long len = uniform(rng, 0, span);
      for (long long i = 0; i < len && g->generators() > 0; ++i) {
        long long x = uniform(rng, 1, g->generators());
        w.push_back(coin(rng, 0.5) ? x : -x);
      }
      return g->word(w);
    }
    case GroupKind::Sum: return g->pair(random_element(g->left(), rng, span), random_element(g->right(), rng, span));
  }
  return g->zero();
}

struct RandomGraphOptions {
  int n = 6;
  double edge_p = 0.45;
  double loop_p = 0.0;
  double parallel_p = 0.0;  // chance of a second edge on a chosen pair
  double zero_p = 0.2;      // chance of an identity label
  long long span = 3;
};

// Vertices 0..n-1; pairs visited in order, orientation by coin flip.
inline LabeledGraph random_graph(const GroupPtr& g, Rng& rng, const RandomGraphOptions& o) {
  GraphBuilder b(g);
  for (int v = 0; v < o.n; ++v) b.add_vertex(v);
  auto label = [&] { return coin(rng, o.zero_p) ? g->zero() : random_element(g, rng, o.span); };
  auto add = [&](int x, int y) {
    if (coin(rng, 0.5)) std::swap(x, y);
    b.add_edge(x, y, label());
  };
  for (int x = 0; x < o.n; ++x) {
    if (o.loop_p > 0 && coin(rng, o.loop_p)) b.add_edge(x, x, label());
    for (int y = x + 1; y < o.n; ++y) {
      if (!coin(rng, o.edge_p)) continue;
      add(x, y);
      if (o.parallel_p > 0 && coin(rng, o.parallel_p)) add(x, y);
    }
  }
  return b.build();
}

// A random walk of shifts: each step picks a vertex and a random element.
inline std::vector<std::pair<int, Element>> random_shifts(const LabeledGraph& g, Rng& rng, int steps, long long span = 3) {
  std::vector<std::pair<int, Element>> out;
  if (g.vertex_count() == 0) return out;
  for (int i = 0; i < steps; ++i) {
    int v = g.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(g.vertex_count()) - 1))];
    out.push_back({v, random_element(g.group(), rng, span)});
  }
  return out;
}

}  // namespace glg
