#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "weyl/cartan.hpp"
#include "weyl/complex.hpp"
#include "weyl/order.hpp"

namespace weyl {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Scheme file schema:
//   rank: integer
//   objects: list of strings
//   reflections: { "1": { object: object, ... }, ... }
//   cartan: { object: rank x rank integer matrix, ... }
// Parsing is structural only; axiom checking is validate_scheme's job.
inline RawScheme parse_scheme_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("top level is not a JSON object");
  for (const char* field : {"rank", "objects", "reflections", "cartan"})
    if (!doc.contains(field))
      throw parse_error(std::string("missing field '") + field + "'");

  RawScheme raw;
  if (!doc["rank"].is_number_integer())
    throw parse_error("field 'rank' is not an integer");
  raw.rank = doc["rank"].get<int>();

  if (!doc["objects"].is_array())
    throw parse_error("field 'objects' is not a list");
  for (const auto& o : doc["objects"]) {
    if (!o.is_string()) throw parse_error("object names must be strings");
    raw.objects.push_back(o.get<std::string>());
  }

  if (!doc["reflections"].is_object())
    throw parse_error("field 'reflections' is not a map");
  for (const auto& [key, table] : doc["reflections"].items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (...) {
      throw parse_error("reflection key '" + key + "' is not an index");
    }
    if (!table.is_object())
      throw parse_error("reflection '" + key + "' is not a map");
    for (const auto& [from, to] : table.items()) {
      if (!to.is_string())
        throw parse_error("reflection '" + key + "' maps '" + from +
                          "' to a non-string");
      raw.reflections[i][from] = to.get<std::string>();
    }
  }

  if (!doc["cartan"].is_object())
    throw parse_error("field 'cartan' is not a map");
  for (const auto& [name, rows] : doc["cartan"].items()) {
    if (!rows.is_array())
      throw parse_error("cartan matrix for object " + name + " is not a list");
    std::vector<Vec> matrix;
    for (const auto& row : rows) {
      if (!row.is_array())
        throw parse_error("cartan matrix for object " + name +
                          " has a non-list row");
      Vec r;
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw parse_error("cartan matrix for object " + name +
                            " has a non-integer entry");
        r.push_back(x.get<Int>());
      }
      matrix.push_back(std::move(r));
    }
    if (matrix.size() != static_cast<size_t>(raw.rank))
      throw parse_error("cartan matrix for object " + name +
                        " does not have rank rows");
    for (const auto& r : matrix)
      if (r.size() != static_cast<size_t>(raw.rank))
        throw parse_error("cartan matrix for object " + name +
                          " has a row of wrong length");
    raw.cartan[name] = std::move(matrix);
  }
  return raw;
}

inline RawScheme parse_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  try {
    return parse_scheme_json(doc);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

inline json scheme_to_json(const RawScheme& raw) {
  json doc;
  doc["rank"] = raw.rank;
  doc["objects"] = raw.objects;
  json refl = json::object();
  for (const auto& [i, table] : raw.reflections) {
    json t = json::object();
    for (const auto& [from, to] : table) t[from] = to;
    refl[std::to_string(i)] = std::move(t);
  }
  doc["reflections"] = std::move(refl);
  json cart = json::object();
  for (const auto& [name, rows] : raw.cartan) cart[name] = rows;
  doc["cartan"] = std::move(cart);
  return doc;
}

// Label with the canonical word and the source as superscript,
// e.g. 12^c; the identity renders as id^a.
inline std::string element_label(const System& S, int a, int idx) {
  const HomSet& hs = S.hom(a);
  std::string word;
  for (int i : hs.words[idx]) word += std::to_string(i + 1);
  if (word.empty()) word = "id";
  return word + "^" + S.scheme().object_name(hs.elems[idx].source);
}

// Hasse diagram of the weak order, bottom to top.
inline std::string poset_dot(const System& S, int a) {
  const WeakOrder& P = S.poset(a);
  std::ostringstream os;
  os << "digraph weak_order {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int u = 0; u < P.size(); ++u)
    os << "  \"" << element_label(S, a, u) << "\";\n";
  for (int u = 0; u < P.size(); ++u)
    for (int v : P.covers_up[u])
      os << "  \"" << element_label(S, a, u) << "\" -> \""
         << element_label(S, a, v) << "\";\n";
  os << "}\n";
  return os.str();
}

// Facet ridge-adjacency graph of the Coxeter complex.
inline std::string complex_dot(const System& S, const CoxeterComplex& C) {
  std::ostringstream os;
  os << "graph coxeter_complex {\n  node [shape=plaintext];\n";
  for (size_t w = 0; w < C.facets.size(); ++w)
    os << "  \"" << element_label(S, C.object, static_cast<int>(w)) << "\";\n";
  for (size_t w1 = 0; w1 < C.facets.size(); ++w1)
    for (size_t w2 = w1 + 1; w2 < C.facets.size(); ++w2) {
      std::vector<int> cap;
      std::set_intersection(C.facets[w1].begin(), C.facets[w1].end(),
                            C.facets[w2].begin(), C.facets[w2].end(),
                            std::back_inserter(cap));
      if (cap.size() + 1 == C.facets[w1].size())
        os << "  \"" << element_label(S, C.object, static_cast<int>(w1))
           << "\" -- \"" << element_label(S, C.object, static_cast<int>(w2))
           << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace weyl
