#pragma once

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weyl/check.hpp"
#include "weyl/complex.hpp"
#include "weyl/order.hpp"
#include "weyl/scheme_io.hpp"

namespace weyl::cli {

// Exit codes: 0 success, 1 validation or property failure, 2 usage or parse
// error.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct fail_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  if (text.empty() || text == "id") return word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (...) {
      throw usage_error("word entry '" + item + "' is not an index");
    }
    if (i < 1 || i > rank)
      throw usage_error("word index " + item + " out of range 1.." +
                        std::to_string(rank));
    word.push_back(i - 1);
  }
  return word;
}

inline std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word[k] + 1);
  }
  return s;
}

inline json morphism_json(const System& S, int a, int idx) {
  const HomSet& hs = S.hom(a);
  json j;
  j["source"] = S.scheme().object_name(hs.elems[idx].source);
  j["target"] = S.scheme().object_name(a);
  j["word"] = json::array();
  for (int i : hs.words[idx]) j["word"].push_back(i + 1);
  j["length"] = hs.elems[idx].length;
  j["label"] = element_label(S, a, idx);
  return j;
}

struct Loaded {
  RawScheme raw;
  CartanScheme scheme;
  RootGenResult roots;
};

inline Loaded load_scheme(const std::string& path, Int cap,
                          std::ostream& err) {
  const RawScheme raw = parse_scheme_file(path);
  const ValidationReport rep = validate_scheme(raw);
  if (!rep.ok()) {
    err << rep.to_string();
    throw fail_error("not a Cartan scheme");
  }
  CartanScheme scheme = CartanScheme::from_raw(raw);
  if (cap <= 0) cap = default_root_cap(scheme);
  RootGenResult rg = generate_roots(scheme, cap);
  return {raw, std::move(scheme), std::move(rg)};
}

inline System load_system(const std::string& path, Int cap,
                          std::ostream& err) {
  Loaded L = load_scheme(path, cap, err);
  if (!L.roots.finite()) {
    err << "root system is not finite within cap (object "
        << L.scheme.object_name(L.roots.not_finite->object) << ", vector "
        << vec_to_string(L.roots.not_finite->vec) << ")\n";
    throw fail_error("root system not finite");
  }
  const AxiomReport ax = check_axioms(L.scheme, *L.roots.roots);
  if (!ax.ok()) {
    err << ax.to_string();
    throw fail_error("root system axioms fail");
  }
  return System::build(std::move(L.scheme), std::move(*L.roots.roots));
}

inline int object_id_or_throw(const CartanScheme& s, const std::string& name) {
  const int a = s.object_id(name);
  if (a < 0) throw usage_error("unknown object '" + name + "'");
  return a;
}

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Weyl groupoid toolkit: root systems, weak order lattices and "
               "Coxeter complexes of Cartan schemes, in exact arithmetic"};
  app.require_subcommand(1);

  std::string file, object, target, format = "json", uword, vword, su, sv;
  Int cap = 0;
  size_t cutoff = kDefaultChainCutoff;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "scheme file (JSON)")->required();
    sub->add_option("--cap", cap, "coordinate-height cap for root generation");
  };

  CLI::App* c_validate = app.add_subcommand(
      "validate", "check the Cartan scheme and root system axioms");
  add_common(c_validate);

  CLI::App* c_roots =
      app.add_subcommand("roots", "positive roots at an object");
  add_common(c_roots);
  c_roots->add_option("--object", object)->required();

  CLI::App* c_hom =
      app.add_subcommand("hom", "all morphisms with the given target");
  add_common(c_hom);
  c_hom->add_option("--target", target)->required();

  CLI::App* c_poset = app.add_subcommand("poset", "weak order Hasse diagram");
  add_common(c_poset);
  c_poset->add_option("--target", target)->required();
  c_poset->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* c_poincare = app.add_subcommand(
      "poincare", "length generating polynomial with diagnostics");
  add_common(c_poincare);
  c_poincare->add_option("--target", target)->required();

  CLI::App* c_meet = app.add_subcommand("meet", "meet in the weak order");
  CLI::App* c_join = app.add_subcommand("join", "join in the weak order");
  for (CLI::App* sub : {c_meet, c_join}) {
    add_common(sub);
    sub->add_option("--target", target)->required();
    sub->add_option("--u", uword, "comma-separated indices")->required();
    sub->add_option("--su", su, "source object of u")->required();
    sub->add_option("--v", vword)->required();
    sub->add_option("--sv", sv, "source object of v")->required();
  }

  CLI::App* c_interval =
      app.add_subcommand("interval", "topology of an open interval");
  add_common(c_interval);
  c_interval->add_option("--target", target)->required();
  c_interval->add_option("--u", uword)->required();
  c_interval->add_option("--su", su)->required();
  c_interval->add_option("--v", vword)->required();
  c_interval->add_option("--sv", sv)->required();
  c_interval->add_option("--cutoff", cutoff, "homology chain cutoff");

  CLI::App* c_complex =
      app.add_subcommand("complex", "Coxeter complex at an object");
  add_common(c_complex);
  c_complex->add_option("--object", object)->required();
  c_complex->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* c_arr = app.add_subcommand(
      "arrangement", "hyperplane arrangement and chamber census");
  add_common(c_arr);
  c_arr->add_option("--object", object)->required();

  CLI::App* c_check =
      app.add_subcommand("check", "run the full property suite");
  add_common(c_check);
  c_check->add_option("--object", object);
  c_check->add_option("--cutoff", cutoff, "homology chain cutoff");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (app.got_subcommand(c_validate)) {
      const RawScheme raw = parse_scheme_file(file);
      const ValidationReport rep = validate_scheme(raw);
      json doc;
      doc["scheme_violations"] = json::array();
      for (const auto& v : rep.violations)
        doc["scheme_violations"].push_back(v.to_string());
      bool ok = rep.ok();
      if (ok) {
        CartanScheme scheme = CartanScheme::from_raw(raw);
        const Int c = cap > 0 ? cap : default_root_cap(scheme);
        const RootGenResult rg = generate_roots(scheme, c);
        doc["finite"] = rg.finite();
        if (!rg.finite()) {
          ok = false;
          doc["not_finite"] = {
              {"object", scheme.object_name(rg.not_finite->object)},
              {"vector", rg.not_finite->vec}};
        } else {
          const AxiomReport ax = check_axioms(scheme, *rg.roots);
          doc["axiom_failures"] = json::array();
          for (const auto& f : ax.failures)
            doc["axiom_failures"].push_back(
                "(" + f.axiom + ") object " + scheme.object_name(f.object) +
                ": " + f.witness);
          json counts = json::object();
          for (int a = 0; a < scheme.num_objects(); ++a)
            counts[scheme.object_name(a)] = rg.roots->count_positive(a);
          doc["positive_root_counts"] = counts;
          ok = ax.ok();
        }
      }
      doc["valid"] = ok;
      out << doc.dump(2) << "\n";
      return ok ? kOk : kFail;
    }

    if (app.got_subcommand(c_roots)) {
      Loaded L = load_scheme(file, cap, err);
      const int a = object_id_or_throw(L.scheme, object);
      if (!L.roots.finite()) {
        err << "root system is not finite within cap (object "
            << L.scheme.object_name(L.roots.not_finite->object) << ", vector "
            << vec_to_string(L.roots.not_finite->vec) << ")\n";
        return kFail;
      }
      for (const Vec& v : L.roots.roots->positive[a])
        out << json(v).dump() << "\n";
      return kOk;
    }

    const System S = load_system(file, cap, err);

    if (app.got_subcommand(c_hom)) {
      const int a = object_id_or_throw(S.scheme(), target);
      json arr = json::array();
      for (int k = 0; k < S.hom(a).size(); ++k)
        arr.push_back(morphism_json(S, a, k));
      out << arr.dump(2) << "\n";
      return kOk;
    }

    if (app.got_subcommand(c_poset)) {
      const int a = object_id_or_throw(S.scheme(), target);
      if (format == "dot") {
        out << poset_dot(S, a);
      } else {
        const WeakOrder& P = S.poset(a);
        json doc;
        doc["nodes"] = json::array();
        for (int k = 0; k < P.size(); ++k) doc["nodes"].push_back(morphism_json(S, a, k));
        doc["covers"] = json::array();
        for (int u = 0; u < P.size(); ++u)
          for (int v : P.covers_up[u]) doc["covers"].push_back({u, v});
        out << doc.dump(2) << "\n";
      }
      return kOk;
    }

    if (app.got_subcommand(c_poincare)) {
      const int a = object_id_or_throw(S.scheme(), target);
      const Poincare pp = poincare_polynomial(S.hom(a));
      json doc;
      doc["coefficients"] = pp.coefficients;
      doc["unimodal"] = pp.unimodal;
      doc["q_factorization"]["complete"] = pp.factor_complete;
      doc["q_factorization"]["exponents"] = pp.exponents;
      if (!pp.factor_complete)
        doc["q_factorization"]["remainder"] = pp.remainder;
      out << doc.dump(2) << "\n";
      return kOk;
    }

    if (app.got_subcommand(c_meet) || app.got_subcommand(c_join) ||
        app.got_subcommand(c_interval)) {
      const int a = object_id_or_throw(S.scheme(), target);
      auto element = [&](const std::string& w, const std::string& src) {
        const int s = object_id_or_throw(S.scheme(), src);
        const Morphism m =
            from_word(S.scheme(), S.roots(), parse_word(w, S.scheme().rank()), s);
        if (m.target != a)
          throw usage_error("word " + w + "^" + src + " targets object " +
                            S.scheme().object_name(m.target) + ", not " +
                            target);
        return S.hom(a).find(m);
      };
      const int ui = element(uword, su);
      const int vi = element(vword, sv);

      if (app.got_subcommand(c_interval)) {
        const WeakOrder& P = S.poset(a);
        if (!P.leq(ui, vi)) {
          json doc;
          doc["comparable"] = false;
          out << doc.dump(2) << "\n";
          return kFail;
        }
        const int gap = S.hom(a).elems[vi].length - S.hom(a).elems[ui].length;
        if (gap < 2)
          throw usage_error("length gap " + std::to_string(gap) +
                            " is below 2; open interval is empty");
        const IntervalClass c = classify_interval(S, a, ui, vi, cutoff);
        json doc;
        doc["comparable"] = true;
        doc["classification"] = c.kind == IntervalKind::Sphere
                                    ? "sphere(" +
                                          std::to_string(c.sphere_dim) + ")"
                                    : "contractible";
        doc["reduced_euler_characteristic"] = c.chi_tilde;
        doc["chi_consistent"] = c.chi_consistent;
        doc["open_interval_size"] = c.open_size;
        if (c.homology_checked) {
          doc["gf2_reduced_betti"] = c.betti;
          doc["homology_consistent"] = c.homology_consistent;
        }
        out << doc.dump(2) << "\n";
        return c.chi_consistent && c.homology_consistent ? kOk : kFail;
      }

      const Morphism result =
          app.got_subcommand(c_meet)
              ? meet(S, S.hom(a).elems[ui], S.hom(a).elems[vi])
              : join(S, S.hom(a).elems[ui], S.hom(a).elems[vi]);
      out << morphism_json(S, a, S.hom(a).find(result)).dump(2) << "\n";
      return kOk;
    }

    if (app.got_subcommand(c_complex)) {
      const int a = object_id_or_throw(S.scheme(), object);
      const CoxeterComplex C = coxeter_complex(S, a);
      if (format == "dot") {
        out << complex_dot(S, C);
        return kOk;
      }
      json doc;
      doc["f_vector"] = C.sc.f_vector();
      doc["euler_characteristic"] = C.sc.euler_characteristic();
      doc["pure"] = C.sc.pure();
      doc["dimension"] = C.sc.dim();
      doc["pseudomanifold"] = C.sc.is_pseudomanifold();
      doc["gf2_betti"] = C.sc.betti_gf2(false);
      doc["facets"] = json::array();
      for (size_t w = 0; w < C.facets.size(); ++w) {
        json f;
        f["morphism"] = element_label(S, a, static_cast<int>(w));
        f["vertices"] = C.facets[w];
        doc["facets"].push_back(std::move(f));
      }
      out << doc.dump(2) << "\n";
      return kOk;
    }

    if (app.got_subcommand(c_arr)) {
      const int a = object_id_or_throw(S.scheme(), object);
      const CosetTable T = enumerate_cosets(S, a);
      const auto faces = geometric_faces(S, a, T);
      const Arrangement A = arrangement(S, a, faces);
      json doc;
      doc["hyperplane_normals"] = json::array();
      for (const Vec& v : A.normals) doc["hyperplane_normals"].push_back(v);
      doc["chambers"] = json::array();
      for (const auto& ch : A.chambers) {
        json c;
        c["morphism"] = element_label(S, a, ch.morphism);
        c["signs"] = ch.signs;
        c["walls"] = ch.walls;
        c["rays"] = ch.rays;
        c["simplicial"] = ch.simplicial;
        doc["chambers"].push_back(std::move(c));
      }
      doc["simplicial"] = A.simplicial;
      out << doc.dump(2) << "\n";
      return A.simplicial ? kOk : kFail;
    }

    if (app.got_subcommand(c_check)) {
      int obj = -1;
      if (!object.empty()) obj = object_id_or_throw(S.scheme(), object);
      const auto results = run_check_suite(S, obj, cutoff);
      json doc;
      doc["checks"] = json::array();
      int failed = 0;
      for (const auto& r : results) {
        json c;
        c["name"] = r.name;
        c["scope"] = r.scope;
        c["pass"] = r.pass;
        if (!r.detail.empty()) c["detail"] = r.detail;
        doc["checks"].push_back(std::move(c));
        if (!r.pass) ++failed;
      }
      doc["total"] = results.size();
      doc["failed"] = failed;
      doc["all_pass"] = failed == 0;
      out << doc.dump(2) << "\n";
      return failed == 0 ? kOk : kFail;
    }

    err << "no subcommand dispatched\n";
    return kUsage;
  } catch (const usage_error& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const fail_error& e) {
    err << e.what() << "\n";
    return kFail;
  } catch (const not_comparable& e) {
    err << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace weyl::cli
