#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "glg/reductions.hpp"
#include "glg/walls.hpp"

namespace glg {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers are decimal strings; plain JSON numbers are accepted on input.
inline json element_to_json(const Element& a) {
  const GroupPtr& g = a.group();
  if (!g) throw ParseError("uninitialised element");
  switch (g->kind()) {
    case GroupKind::Integers: return json(a.integer().str());
    case GroupKind::Cyclic: return json(a.residue());
    case GroupKind::Sum: return json::array({element_to_json(a.left()), element_to_json(a.right())});
    default: return json(a.coords());
  }
}

inline Element element_from_json(const GroupPtr& g, const json& j) {
  try {
    switch (g->kind()) {
      case GroupKind::Integers:
        if (j.is_string()) return g->integer(BigInt(j.get<std::string>()));
        if (!j.is_number_integer()) throw ParseError("expected an integer for " + g->describe());
        return g->integer(BigInt(j.get<long long>()));
      case GroupKind::Cyclic:
        if (!j.is_number_integer()) throw ParseError("expected a residue for " + g->describe());
        return g->residue(j.get<long long>());
      case GroupKind::Sum:
        if (!j.is_array() || j.size() != 2) throw ParseError("expected a pair for " + g->describe());
        return g->pair(element_from_json(g->left(), j[0]), element_from_json(g->right(), j[1]));
      case GroupKind::Free:
        if (!j.is_array()) throw ParseError("expected a word for " + g->describe());
        return g->word(j.get<std::vector<long long>>());
      default:
        if (!j.is_array()) throw ParseError("expected a vector for " + g->describe());
        return g->vector(j.get<std::vector<long long>>());
    }
  } catch (const GroupError& e) {
    throw ParseError(e.what());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::runtime_error& e) {  // cpp_int string conversion
    throw ParseError(e.what());
  }
}

inline json graph_to_json(const LabeledGraph& g) {
  json j;
  j["group"] = g.group()->describe();
  j["vertices"] = g.vertices();
  json es = json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeRec& e = g.edge(i);
    es.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"label", element_to_json(g.label(i))}});
  }
  j["edges"] = es;
  return j;
}

inline LabeledGraph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("group") || !j.contains("vertices") || !j.contains("edges"))
      throw ParseError("graph needs group, vertices and edges");
    GroupPtr g = parse_group(j.at("group").get<std::string>());
    std::vector<int> vs = j.at("vertices").get<std::vector<int>>();
    std::vector<EdgeRec> es;
    std::vector<Element> ls;
    for (const json& e : j.at("edges")) {
      es.push_back(EdgeRec{e.at("id").get<int>(), e.at("tail").get<int>(), e.at("head").get<int>()});
      ls.push_back(e.contains("label") ? element_from_json(g, e.at("label")) : g->zero());
    }
    return LabeledGraph(g, vs, es, ls);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const GroupError& e) {
    throw ParseError(e.what());
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

inline json walk_to_json(const Walk& w) { return {{"vertices", w.vertices}, {"edges", w.edges}}; }

inline Walk walk_from_json(const json& j) {
  try {
    return Walk{j.at("vertices").get<std::vector<int>>(), j.at("edges").get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline json walks_to_json(const std::vector<Walk>& ws) {
  json a = json::array();
  for (const Walk& w : ws) a.push_back(walk_to_json(w));
  return a;
}

inline json wall_anatomy(const Wall& w) {
  json coords = json::array();
  for (const auto& [c, v] : w.branch) coords.push_back({v, c.first, c.second});
  json bricks = json::array();
  for (const Walk& b : w.bricks) bricks.push_back(b.vertices);
  json hs = json::array(), vs = json::array();
  for (const Walk& p : w.horizontal) hs.push_back(p.vertices);
  for (const Walk& p : w.vertical) vs.push_back(p.vertices);
  return {{"r", w.r},           {"coords", coords},   {"corners", w.corners},       {"nails", w.nails},
          {"top_nails", w.top_nails}, {"bricks", bricks}, {"boundary", w.boundary.vertices},
          {"horizontal", hs},   {"vertical", vs}};
}

inline json embedding_to_json(const EmbeddedGraph& eg) {
  json j = graph_to_json(eg.graph);
  json rot = json::array();
  for (const auto& [v, es] : eg.rotation) rot.push_back({v, es});
  json signs = json::array();
  for (const auto& [e, s] : eg.sign)
    if (s != 1) signs.push_back({e, s});
  j["embedding"] = {{"rotation", rot}, {"signs", signs}};
  return j;
}

inline EmbeddedGraph embedding_from_json(const json& j) {
  EmbeddedGraph eg;
  eg.graph = graph_from_json(j);
  try {
    const json& em = j.at("embedding");
    for (const json& r : em.at("rotation")) eg.rotation[r.at(0).get<int>()] = r.at(1).get<std::vector<int>>();
    if (em.contains("signs"))
      for (const json& s : em.at("signs")) eg.sign[s.at(0).get<int>()] = s.at(1).get<int>();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return eg;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace glg
