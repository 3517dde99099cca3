#include "hypercover/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypercover {

using nlohmann::json;

namespace {

constexpr int kIndent = 2;

json edges_to_json(const std::vector<VertexSet>& edges) {
  json arr = json::array();
  for (const VertexSet& e : edges) arr.push_back(e);
  return arr;
}

}  // namespace

std::string to_json(const Hypergraph& h) {
  json doc;
  doc["n"] = h.vertex_count();
  doc["m"] = h.uniformity();
  doc["edges"] = edges_to_json(h.edges());
  return doc.dump(kIndent);
}

Hypergraph hypergraph_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const int n = doc.at("n").get<int>();
    const int m = doc.at("m").get<int>();
    std::vector<VertexSet> edges;
    for (const json& e : doc.at("edges")) {
      edges.push_back(e.get<VertexSet>());
    }
    return Hypergraph(n, m, std::move(edges));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed hypergraph JSON: ") +
                                ex.what());
  }
}

std::string to_json(const MonomialIdeal& ideal) {
  json doc;
  doc["n"] = ideal.vars();
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(g);
  doc["generators"] = gens;
  return doc.dump(kIndent);
}

MonomialIdeal ideal_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const int n = doc.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const json& g : doc.at("generators")) {
      gens.push_back(g.get<Monomial>());
    }
    return MonomialIdeal(n, std::move(gens));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed ideal JSON: ") +
                                ex.what());
  }
}

std::string to_json(const AssProfile& profile) {
  json doc;
  doc["power"] = profile.power;
  doc["minimal"] = edges_to_json(profile.minimal);
  json embedded = json::array();
  for (const WitnessedPrime& wp : profile.embedded) {
    json entry;
    entry["prime"] = wp.prime;
    if (wp.witness) {
      entry["witness"] = *wp.witness;
    } else {
      entry["witness"] = nullptr;
    }
    embedded.push_back(entry);
  }
  doc["embedded"] = embedded;
  return doc.dump(kIndent);
}

std::string macaulay2_script(const Hypergraph& h) {
  std::ostringstream out;
  out << "R = QQ[x_1..x_" << h.vertex_count() << "];\n";
  out << "I = monomialIdeal(";
  bool first_edge = true;
  for (const VertexSet& e : h.edges()) {
    if (!first_edge) out << ", ";
    first_edge = false;
    bool first_var = true;
    for (int v : e) {
      if (!first_var) out << "*";
      first_var = false;
      out << "x_" << v;
    }
  }
  out << ");\n";
  return out.str();
}

}  // namespace hypercover
