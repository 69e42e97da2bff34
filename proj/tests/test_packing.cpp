#include <catch2/catch_amalgamated.hpp>

#include "criteria.hpp"
#include "glg/frontier.hpp"

using namespace glg;

namespace {

std::vector<std::set<int>> vertex_sets(const LabeledGraph& g, const std::set<std::vector<int>>& edge_sets) {
  std::vector<std::set<int>> out;
  for (const auto& ids : edge_sets) {
    std::set<int> vs;
    for (int id : ids) {
      vs.insert(g.edge_by_id(id).tail);
      vs.insert(g.edge_by_id(id).head);
    }
    out.push_back(vs);
  }
  return out;
}

// Largest family in which no vertex is used more than twice.
int max_half(const std::vector<std::set<int>>& sets) {
  int best = 0;
  std::map<int, int> load;
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int taken) {
    best = std::max(best, taken);
    if (i == sets.size() || taken + static_cast<int>(sets.size() - i) <= best) return;
    bool fits = std::all_of(sets[i].begin(), sets[i].end(), [&](int v) { return load[v] < 2; });
    if (fits) {
      for (int v : sets[i]) ++load[v];
      go(i + 1, taken + 1);
      for (int v : sets[i]) --load[v];
    }
    go(i + 1, taken);
  };
  go(0, 0);
  return best;
}

}  // namespace

TEST_CASE("packing and covering numbers match brute force") {
  Rng rng(51);
  const std::vector<std::string> groups{"z2", "z3", "sum(z2,z2)", "sum(z2,z3)", "free2"};
  for (int i = 0; i < 150; ++i) {
    auto g = parse_group(groups[static_cast<std::size_t>(i) % groups.size()]);
    LabeledGraph lg = criteria::small_graph(rng, g, 7, 14);
    bool doubly = g->kind() == GroupKind::Sum;
    auto sets = vertex_sets(lg, oracle::nonzero_sets(lg, doubly));
    PackCoverReport r = pack_cover_report(lg);
    INFO("instance " << i << " over " << g->describe());
    CHECK(r.nu == oracle::max_disjoint(sets));
    CHECK(r.nu_half == max_half(sets));
    CHECK(r.tau == oracle::min_hitting(sets, lg.vertices()));
    CHECK(check_cycle_packing(lg, r.packing, Target::Auto, 1).empty());
    CHECK(check_cycle_packing(lg, r.half_packing, Target::Auto, 2).empty());
    CHECK(check_transversal(lg, r.transversal, Target::Auto).empty());
    CHECK(r.nu <= r.nu_half);
    CHECK(r.nu_half <= 2 * r.tau);
  }
}

TEST_CASE("frontier search agrees with enumeration") {
  Rng rng(52);
  // The frontier engine interns values, so only finite groups are used here.
  const std::vector<std::string> groups{"z3", "sum(z2,z3)", "z5", "sum(z3,z3)"};
  for (int i = 0; i < 120; ++i) {
    auto g = parse_group(groups[static_cast<std::size_t>(i) % groups.size()]);
    LabeledGraph lg = criteria::small_graph(rng, g, 9, 20);
    PackCoverReport e = pack_cover_report(lg);
    FrontierReport f = frontier_pack_cover(lg, Target::Auto, 3);
    INFO("instance " << i << " over " << g->describe());
    CHECK(f.nu == std::min(e.nu, 3));
    CHECK(f.tau == e.tau);
    CHECK(f.nu_half_lower <= e.nu_half);
    CHECK(check_cycle_packing(lg, f.packing, Target::Auto, 1).empty());
    CHECK(check_cycle_packing(lg, f.half_packing, Target::Auto, 2).empty());
    CHECK(check_transversal(lg, f.transversal, Target::Auto).empty());
  }
}

TEST_CASE("witness checks reject bad certificates") {
  auto g = parse_group("z2");
  GraphBuilder gb(g);
  for (int i = 0; i < 4; ++i) gb.add_vertex();
  gb.add_edge(0, 1, g->residue(1));
  gb.add_edge(1, 2, g->zero());
  gb.add_edge(2, 0, g->zero());
  gb.add_edge(2, 3, g->zero());
  gb.add_edge(3, 0, g->zero());
  LabeledGraph lg = gb.build();
  Walk tri{{0, 1, 2, 0}, {0, 1, 2}};
  Walk square{{0, 1, 2, 3, 0}, {0, 1, 3, 4}};
  Walk zero_tri{{0, 2, 3, 0}, {2, 3, 4}};
  CHECK(check_cycle_packing(lg, {tri}, Target::Auto, 1).empty());
  CHECK_FALSE(check_cycle_packing(lg, {tri, square}, Target::Auto, 1).empty());
  CHECK(check_cycle_packing(lg, {tri, square}, Target::Auto, 2).empty());
  CHECK_FALSE(check_cycle_packing(lg, {zero_tri}, Target::Auto, 1).empty());
  CHECK_FALSE(check_cycle_packing(lg, {tri, tri.rotated(1)}, Target::Auto, 2).empty());
  CHECK(check_transversal(lg, {1}, Target::Auto).empty());
  CHECK(check_transversal(lg, {3}, Target::Auto) == "uncovered cycle with edges {0,1,2}");
  CHECK_FALSE(check_transversal(lg, {9}, Target::Auto).empty());
}

TEST_CASE("non-zero A-paths obey the half-integral duality") {
  auto o = criteria::a_path_duality(120, 53);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("A-path packing on a path with both ends in A") {
  auto g = parse_group("z3");
  GraphBuilder gb(g);
  for (int i = 0; i < 4; ++i) gb.add_vertex();
  gb.add_edge(0, 1, g->residue(1));
  gb.add_edge(1, 2, g->zero());
  gb.add_edge(2, 3, g->residue(2));
  LabeledGraph lg = gb.build();
  APathReport r = nonzero_A_paths(lg, {0, 2, 3});
  CHECK(r.nu == 1);
  CHECK(r.tau == 1);
  CHECK(r.cover == std::vector<int>{2});
  APathReport z = nonzero_A_paths(lg, {0, 3});
  CHECK(z.nu == 0);
  CHECK(z.tau == 0);
}
