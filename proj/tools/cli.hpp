#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "glg/io.hpp"
#include "glg/packing.hpp"
#include "glg/random.hpp"
#include "glg/reductions.hpp"
#include "glg/walls.hpp"

namespace glg::cli {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kLimit = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const json& j, const std::string& out_path, std::ostream& out) {
  std::string text = dump(j);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Usage("cannot write " + out_path);
  f << text;
}

// Splits at commas that are not inside parentheses.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::set<int> parse_ids(const std::string& s) {
  std::set<int> out;
  for (const std::string& t : split_top(s)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw Usage("bad vertex id '" + t + "'");
      out.insert(v);
    } catch (const std::logic_error&) {
      throw Usage("bad vertex id '" + t + "'");
    }
  }
  return out;
}

inline Target parse_target(const std::string& s) {
  if (s == "auto") return Target::Auto;
  if (s == "nonzero") return Target::NonZero;
  if (s == "doubly" || s == "doubly-nonzero") return Target::DoublyNonZero;
  throw Usage("unknown target '" + s + "'");
}

inline json cycle_row(const CycleInfo& c) {
  return {{"edges", c.edges}, {"vertices", c.vertices}, {"value", element_to_json(c.value)}, {"nonzero", c.nonzero()},
          {"doubly_nonzero", c.doubly_nonzero()}};
}

// ---- gen

inline json gen_wall(int r, const std::string& group) {
  Wall w = elementary_wall(r, parse_group(group));
  json j = graph_to_json(w.graph);
  j["kind"] = "wall";
  j["anatomy"] = wall_anatomy(w);
  return j;
}

inline json gen_escher(int h) {
  EscherWall ew = escher_wall(h);
  json j = graph_to_json(ew.graph);
  j["kind"] = "escher";
  j["anatomy"] = wall_anatomy(ew.wall);
  j["paths"] = walks_to_json(ew.paths);
  return j;
}

inline json gen_obstruction(int h, const std::string& p, const std::string& q, const std::string& groups) {
  std::vector<std::string> gs = split_top(groups);
  if (gs.size() != 2) throw Usage("--groups needs two descriptors, e.g. z3,z3");
  ObstructionSpec s;
  s.h = h;
  s.p_type = parse_pair_type(p);
  s.q_type = parse_pair_type(q);
  s.g1 = parse_group(gs[0]);
  s.g2 = parse_group(gs[1]);
  Obstruction ob = build_obstruction(s);
  json j = graph_to_json(ob.graph);
  j["kind"] = "obstruction";
  j["anatomy"] = wall_anatomy(ob.wall);
  j["linkages"] = {{"p", walks_to_json(ob.p)}, {"q", walks_to_json(ob.q)}, {"p_type", p}, {"q_type", q}, {"h", h}};
  j["terminals"] = ob.terminals;
  return j;
}

inline json gen_random(int n, double p, const std::string& group, std::uint64_t seed) {
  if (n < 0) throw Usage("--n must be non-negative");
  if (p < 0 || p > 1) throw Usage("--edge-p must lie in [0,1]");
  Rng rng(seed);
  RandomGraphOptions o;
  o.n = n;
  o.edge_p = p;
  json j = graph_to_json(random_graph(parse_group(group), rng, o));
  j["kind"] = "random";
  j["seed"] = seed;
  return j;
}

// ---- analyze

inline json analyze(const LabeledGraph& g, const std::set<std::string>& checks, std::size_t limit) {
  json r;
  if (checks.count("bipartite")) {
    BipartiteResult b = is_gamma_bipartite(g);
    json jb = {{"bipartite", b.bipartite}};
    if (b.bipartite) {
      json sh = json::array();
      for (const auto& [v, a] : b.shifts) sh.push_back({v, element_to_json(a)});
      jb["shifts"] = sh;
    } else if (b.witness) {
      jb["witness"] = walk_to_json(*b.witness);
    }
    r["bipartite"] = jb;
  }
  if (checks.count("robust")) {
    if (g.group()->kind() != GroupKind::Sum) {
      r["robust"] = {{"robust", nullptr}, {"reason", "labels are not in a direct sum"}};
    } else {
      RobustResult rb = is_robust(g, limit);
      json jr = {{"robust", rb.robust}};
      if (rb.witness)
        jr["witness"] = {{"coordinate", rb.witness->coordinate}, {"first", walk_to_json(rb.witness->first)},
                         {"second", walk_to_json(rb.witness->second)}};
      r["robust"] = jr;
    }
  }
  if (checks.count("classify")) {
    std::vector<CycleInfo> cs = enumerate_cycles(g, limit);
    Target t = resolve_target(g, Target::Auto);
    json rows = json::array();
    std::size_t hits = 0;
    for (const CycleInfo& c : cs) {
      if (c.matches(t)) {
        ++hits;
        rows.push_back(cycle_row(c));
      }
    }
    r["classify"] = {{"target", target_name(t)}, {"cycles", cs.size()}, {"matching", hits}, {"matching_cycles", rows}};
  }
  return r;
}

// ---- pack / cover

inline json report_json(const PackCoverReport& r, bool pack, bool cover) {
  json j = {{"target", target_name(r.target)}, {"engine", "enumeration"}};
  if (pack) {
    j["nu"] = r.nu;
    j["nu_half"] = r.nu_half;
    j["nu_half_exact"] = r.nu_half_exact;
    j["packing"] = walks_to_json(r.packing);
    j["half_packing"] = walks_to_json(r.half_packing);
  }
  if (cover) {
    j["tau"] = r.tau;
    j["transversal"] = r.transversal;
  }
  return j;
}

inline json frontier_json(const FrontierReport& r, bool pack, bool cover) {
  json j = {{"target", target_name(r.target)}, {"engine", "frontier"}};
  if (pack) {
    j["nu"] = r.nu;
    j["nu_capped_at"] = r.nu_cap;
    j["nu_half"] = r.nu_half_lower;
    j["nu_half_exact"] = false;
    j["packing"] = walks_to_json(r.packing);
    j["half_packing"] = walks_to_json(r.half_packing);
  }
  if (cover) {
    j["tau"] = r.tau;
    j["transversal"] = r.transversal;
  }
  return j;
}

inline json pack_cover(const LabeledGraph& g, Target t, const std::string& engine, std::size_t limit, bool pack, bool cover) {
  if (engine == "frontier") return frontier_json(frontier_pack_cover(g, t, 3), pack, cover);
  if (engine == "enum") return report_json(pack_cover_report(g, t, limit), pack, cover);
  if (engine != "auto") throw Usage("unknown engine '" + engine + "'");
  try {
    return report_json(pack_cover_report(g, t, limit), pack, cover);
  } catch (const LimitExceeded&) {
    return frontier_json(frontier_pack_cover(g, t, 3), pack, cover);
  }
}

// ---- reduce

inline json reduce_cmd(const json& doc, const std::string& kind, const std::string& s, const std::string& s2) {
  if (kind == "homology") {
    EmbeddedGraph eg = embedding_from_json(doc);
    HomologyResult hr = homology_labeling(eg);
    json j = graph_to_json(hr.labeled);
    j["homology"] = {{"h1", hr.h1->describe()}, {"faces", hr.faces.size()}, {"euler", euler_characteristic(eg)},
                     {"orientable", is_orientable(eg)}};
    return j;
  }
  ReductionInstance in;
  in.kind = parse_reduction(kind);
  in.graph = graph_from_json(doc);
  in.s = parse_ids(s);
  in.s2 = parse_ids(s2);
  for (const auto* set : {&in.s, &in.s2})
    for (int v : *set)
      if (!in.graph.has_vertex(v)) throw Usage("vertex " + std::to_string(v) + " is not in the graph");
  json j = graph_to_json(reduce(in));
  j["instance"] = {{"kind", kind}, {"s", in.s}, {"s2", in.s2}};
  return j;
}

// ---- verify

struct Verdict {
  bool ok = true;
  std::string violation;
};

inline Verdict verify_cmd(const LabeledGraph& g, const json& cert, std::size_t limit) {
  Target t = parse_target(cert.value("target", std::string("auto")));
  Target resolved = resolve_target(g, t);
  auto fam = [&](const char* key) {
    std::vector<Walk> ws;
    for (const json& w : cert.at(key)) ws.push_back(walk_from_json(w));
    return ws;
  };
  Verdict v;
  auto note = [&](const std::string& clause, const std::string& s) {
    if (!s.empty() && v.ok) {
      v.ok = false;
      v.violation = clause + ": " + s;
    }
  };
  bool any = false;
  try {
    if (cert.contains("packing")) {
      any = true;
      note("packing", check_cycle_packing(g, fam("packing"), resolved, 1));
    }
    if (cert.contains("half_packing")) {
      any = true;
      note("half_packing", check_cycle_packing(g, fam("half_packing"), resolved, 2));
    }
    if (cert.contains("transversal")) {
      any = true;
      std::vector<int> x = cert.at("transversal").get<std::vector<int>>();
      std::string bad;
      try {
        bad = check_transversal(g, x, resolved, limit);
      } catch (const LimitExceeded&) {
        std::vector<bool> removed(g.vertex_count(), false);
        for (int u : x) {
          if (!g.has_vertex(u)) throw ParseError("unknown vertex " + std::to_string(u));
          removed[static_cast<std::size_t>(g.vertex_index(u))] = true;
        }
        FrontierResult fr = frontier_pack(g, resolved, 1, frontier_order(g), removed);
        if (fr.count > 0) {
          std::string s;
          for (std::size_t i = 0; i < fr.cycles[0].edge_set().size(); ++i)
            s += (i ? "," : "") + std::to_string(fr.cycles[0].edge_set()[i]);
          bad = "uncovered cycle with edges {" + s + "}";
        }
      }
      note("transversal", bad);
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!any) throw ParseError("certificate has no packing, half_packing or transversal");
  return v;
}

// ---- experiment

struct ExperimentRow {
  int index = 0;
  int n = 0;
  std::size_t m = 0;
  std::size_t cycles = 0;
  int nu = 0, nu_half = 0, tau = 0;
};

inline ExperimentRow experiment_row(std::uint64_t seed, int index, int lo, int hi, double p, const GroupPtr& g, std::size_t limit) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  RandomGraphOptions o;
  o.n = static_cast<int>(uniform(rng, lo, hi));
  o.edge_p = p;
  LabeledGraph lg = random_graph(g, rng, o);
  PackCoverReport r = pack_cover_report(lg, Target::Auto, limit);
  ExperimentRow row;
  row.index = index;
  row.n = o.n;
  row.m = lg.edge_count();
  row.cycles = target_cycles(lg, Target::Auto, limit).size();
  row.nu = r.nu;
  row.nu_half = r.nu_half;
  row.tau = r.tau;
  return row;
}

inline json experiment(std::uint64_t seed, int count, const std::string& sizes, double p, const std::string& group, int threads,
                       std::size_t limit) {
  int lo = 0, hi = 0;
  {
    std::size_t dash = sizes.find('-');
    try {
      lo = std::stoi(sizes.substr(0, dash));
      hi = dash == std::string::npos ? lo : std::stoi(sizes.substr(dash + 1));
    } catch (const std::logic_error&) {
      throw Usage("--sizes expects N or LO-HI");
    }
    if (lo < 1 || hi < lo) throw Usage("--sizes expects 1 <= LO <= HI");
  }
  if (count < 0) throw Usage("--count must be non-negative");
  if (threads < 1) throw Usage("--threads must be positive");
  GroupPtr g = parse_group(group);
  std::vector<ExperimentRow> rows(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  auto work = [&](int tid) {
    try {
      for (int i = tid; i < count; i += threads) rows[static_cast<std::size_t>(i)] = experiment_row(seed, i, lo, hi, p, g, limit);
    } catch (...) {
      errors[static_cast<std::size_t>(tid)] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  json out_rows = json::array();
  long long best_num = 0, best_den = 1;
  int max_tau = 0;
  for (const ExperimentRow& r : rows) {
    out_rows.push_back({{"index", r.index}, {"n", r.n}, {"m", r.m}, {"cycles", r.cycles}, {"nu", r.nu}, {"nu_half", r.nu_half}, {"tau", r.tau}});
    max_tau = std::max(max_tau, r.tau);
    if (r.nu_half > 0 && static_cast<long long>(r.tau) * best_den > best_num * r.nu_half) {
      best_num = r.tau;
      best_den = r.nu_half;
    }
  }
  return {{"seed", seed},
          {"count", count},
          {"sizes", sizes},
          {"edge_p", p},
          {"group", g->describe()},
          {"rows", out_rows},
          {"max_tau", max_tau},
          {"max_tau_over_nu_half", std::to_string(best_num) + "/" + std::to_string(best_den)}};
}

// ---- entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"group-labelled graphs: generation, packing and covering, reductions, walls"};
  app.require_subcommand(1);
  std::string out_path;
  std::size_t limit = default_cycle_limit();
  app.add_option("--limit", limit, "cycle enumeration limit");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->set_help_flag("--help", "print help");
  std::string kind, group = "z2", p_type = "nested", q_type = "series", groups = "z3,z3";
  int r = 6, h = 1, n = 6;
  double edge_p = 0.45;
  std::uint64_t seed = 1;
  gen->add_option("kind", kind, "wall | escher | obstruction | random")->required();
  gen->add_option("--r", r, "wall size");
  gen->add_option("--h", h, "height");
  gen->add_option("--p", p_type, "type of P: series | nested | crossing");
  gen->add_option("--edge-p", edge_p, "edge probability for random graphs");
  gen->add_option("--q", q_type, "type of Q");
  gen->add_option("--groups", groups, "two group descriptors for the obstruction");
  gen->add_option("--group", group, "group descriptor");
  gen->add_option("--n", n, "vertex count for random graphs");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--out", out_path, "output file");

  auto* an = app.add_subcommand("analyze", "bipartite / robust / classify checks");
  std::string file, checks = "bipartite,robust,classify";
  an->add_option("file", file)->required();
  an->add_option("--checks", checks);
  an->add_option("--out", out_path);

  std::string target = "auto", engine = "auto";
  auto* pk = app.add_subcommand("pack", "maximum disjoint and half-integral packings");
  pk->add_option("file", file)->required();
  pk->add_option("--target", target);
  pk->add_option("--engine", engine, "auto | enum | frontier");
  pk->add_option("--out", out_path);
  auto* cv = app.add_subcommand("cover", "minimum transversal");
  cv->add_option("file", file)->required();
  cv->add_option("--target", target);
  cv->add_option("--engine", engine, "auto | enum | frontier");
  cv->add_option("--out", out_path);

  auto* rd = app.add_subcommand("reduce", "apply a reduction");
  std::string rkind, s_set, s2_set;
  rd->add_option("file", file)->required();
  rd->add_option("--kind", rkind, "cycles | odd | s | odd-s | s1s2 | homology")->required();
  rd->add_option("--s", s_set, "S or S1 as comma-separated vertex ids");
  rd->add_option("--s2", s2_set, "S2");
  rd->add_option("--out", out_path);

  auto* vf = app.add_subcommand("verify", "check a packing or transversal certificate");
  std::string cert;
  vf->add_option("file", file)->required();
  vf->add_option("--cert", cert)->required();

  auto* ex = app.add_subcommand("experiment", "random packing/covering sweep");
  int count = 100, threads = 1;
  double ex_edge_p = 0.6;
  std::string sizes = "4-7", egroup = "sum(z2,z3)";
  ex->add_option("--seed", seed);
  ex->add_option("--count", count);
  ex->add_option("--sizes", sizes);
  ex->add_option("--edge-p", ex_edge_p);
  ex->add_option("--group", egroup);
  ex->add_option("--threads", threads);
  ex->add_option("--out", out_path);

  auto* cn = app.add_subcommand("canon", "parse and re-serialize an instance");
  cn->add_option("file", file)->required();
  cn->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (gen->parsed()) {
      json j;
      if (kind == "wall") {
        j = gen_wall(r, group);
      } else if (kind == "escher") {
        j = gen_escher(h);
      } else if (kind == "obstruction") {
        j = gen_obstruction(h, p_type, q_type, groups);
      } else if (kind == "random") {
        j = gen_random(n, edge_p, gen->count("--group") ? group : "sum(z2,z3)", seed);
      } else {
        throw Usage("unknown kind '" + kind + "'");
      }
      emit(j, out_path, out);
      return kOk;
    }
    if (an->parsed()) {
      std::set<std::string> cs;
      for (const std::string& c : split_top(checks)) {
        if (c != "bipartite" && c != "robust" && c != "classify") throw Usage("unknown check '" + c + "'");
        cs.insert(c);
      }
      emit(analyze(graph_from_json(parse_json(read_file(file))), cs, limit), out_path, out);
      return kOk;
    }
    if (pk->parsed() || cv->parsed()) {
      LabeledGraph g = graph_from_json(parse_json(read_file(file)));
      emit(pack_cover(g, parse_target(target), engine, limit, pk->parsed(), cv->parsed()), out_path, out);
      return kOk;
    }
    if (rd->parsed()) {
      emit(reduce_cmd(parse_json(read_file(file)), rkind, s_set, s2_set), out_path, out);
      return kOk;
    }
    if (vf->parsed()) {
      LabeledGraph g = graph_from_json(parse_json(read_file(file)));
      Verdict v = verify_cmd(g, parse_json(read_file(cert)), limit);
      json j = {{"ok", v.ok}};
      if (!v.ok) j["violation"] = v.violation;
      out << dump(j);
      if (!v.ok) err << "verification failed: " << v.violation << "\n";
      return v.ok ? kOk : kFailed;
    }
    if (ex->parsed()) {
      emit(experiment(seed, count, sizes, ex_edge_p, egroup, threads, limit), out_path, out);
      return kOk;
    }
    if (cn->parsed()) {
      json doc = parse_json(read_file(file));
      LabeledGraph g = graph_from_json(doc);
      json core = graph_to_json(g);
      for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!core.contains(it.key())) core[it.key()] = it.value();
      emit(core, out_path, out);
      return kOk;
    }
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {  // group, graph, wall and reduction errors
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace glg::cli
