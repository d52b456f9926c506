// Acceptance suite: runs every gate criterion on the bundled schemes and
// prints one PASS/FAIL line per criterion.  Exit code is the failure count.

#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "weyl/check.hpp"
#include "weyl/cli.hpp"
#include "weyl/complex.hpp"
#include "weyl/order.hpp"
#include "weyl/scheme_io.hpp"

using namespace weyl;

namespace {

std::string g_data_dir = WEYL_DATA_DIR;

std::string data_path(const std::string& name) {
  return g_data_dir + "/" + name;
}

System load(const std::string& name, Int cap = 0) {
  const RawScheme raw = parse_scheme_file(data_path(name));
  CartanScheme scheme = CartanScheme::from_raw(raw);
  if (cap <= 0) cap = default_root_cap(scheme);
  RootGenResult rg = generate_roots(scheme, cap);
  if (!rg.finite()) throw std::runtime_error(name + ": roots not finite");
  return System::build(std::move(scheme), std::move(*rg.roots));
}

struct Gate {
  int passed = 0;
  int failed = 0;

  void report(int k, int total, const std::string& what, bool ok,
              const std::string& note = "") {
    std::cout << "[" << (k < 10 ? " " : "") << k << "/" << total << "] "
              << (ok ? "PASS" : "FAIL") << " " << what;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    (ok ? passed : failed) += 1;
  }
};

bool expect(bool cond, std::string& note, const std::string& msg) {
  if (!cond && note.empty()) note = msg;
  return cond;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];
  Gate gate;
  const int total = 11;

  try {
    const System S = load("bruhat.json");
    const int nobj = S.scheme().num_objects();

    // 1. golden dataset validates end to end, 8 positive roots, l(w_I) = 8
    {
      std::string note;
      bool ok = true;
      std::ostringstream cli_out, cli_err;
      const int code = cli::run({"validate", data_path("bruhat.json")},
                                cli_out, cli_err);
      ok &= expect(code == 0, note, "CLI validate exit code");
      const RawScheme raw = parse_scheme_file(data_path("bruhat.json"));
      ok &= expect(validate_scheme(raw).ok(), note, "scheme violations");
      const AxiomReport ax = check_axioms(S.scheme(), S.roots());
      ok &= expect(ax.ok(), note, "root axioms");
      for (int a = 0; a < nobj; ++a) {
        ok &= expect(S.roots().count_positive(a) == 8, note,
                     "|R^a_+| != 8 at " + S.scheme().object_name(a));
        ok &= expect(S.hom(a).max_length == 8, note, "l(w_I) != 8");
      }
      gate.report(1, total, "golden scheme: axioms, |R_+| = 8, l(w_I) = 8",
                  ok, note);
    }

    // 2. Poincare polynomials: c not unimodal and unfactorable, a and b
    //    factor into q-integers
    {
      std::string note;
      bool ok = true;
      const Poincare pc = poincare_polynomial(S.hom(S.scheme().object_id("c")));
      ok &= expect(pc.coefficients ==
                       std::vector<Int>{1, 3, 6, 7, 6, 7, 6, 3, 1},
                   note, "coefficients at c");
      ok &= expect(!pc.unimodal, note, "c should not be unimodal");
      ok &= expect(!pc.factor_complete, note, "c should not factor");
      const Poincare pa = poincare_polynomial(S.hom(S.scheme().object_id("a")));
      ok &= expect(pa.factor_complete, note, "a should factor");
      ok &= expect(pa.exponents == std::vector<int>{4, 3, 1}, note,
                   "exponents at a");
      const Poincare pb = poincare_polynomial(S.hom(S.scheme().object_id("b")));
      ok &= expect(pb.factor_complete, note, "b should factor");
      std::vector<Int> prod{1};
      for (int e : pb.exponents) {
        std::vector<Int> next(prod.size() + e, 0);
        for (size_t t = 0; t < prod.size(); ++t)
          for (int s = 0; s <= e; ++s) next[t + s] += prod[t];
        prod = std::move(next);
      }
      ok &= expect(prod == pb.coefficients, note, "b factor product");
      gate.report(2, total, "Poincare: (1,3,6,7,6,7,6,3,1) at c, q-integer "
                            "factorizations at a and b",
                  ok, note);
    }

    // 3. |Hom(-> x)| = 40, level sizes symmetric
    {
      std::string note;
      bool ok = true;
      for (int a = 0; a < nobj; ++a) {
        ok &= expect(S.hom(a).size() == 40, note,
                     "|Hom| != 40 at " + S.scheme().object_name(a));
        const auto& ls = S.hom(a).level_sizes;
        for (size_t k = 0; k < ls.size(); ++k)
          ok &= expect(ls[k] == ls[ls.size() - 1 - k], note,
                       "level sizes not symmetric");
      }
      gate.report(3, total, "|Hom(-> x)| = 40 with symmetric level sizes",
                  ok, note);
    }

    // 4. lattice suite: constructive meet/join vs brute force and the
    //    content identity, all pairs at all five targets
    {
      std::string note;
      bool ok = true;
      long pairs = 0;
      for (int a = 0; a < nobj; ++a) {
        const HomSet& hs = S.hom(a);
        const WeakOrder& P = S.poset(a);
        for (int u = 0; u < hs.size(); ++u)
          for (int v = 0; v < hs.size(); ++v) {
            ++pairs;
            const Morphism m = meet(S, hs.elems[u], hs.elems[v]);
            ok &= expect(hs.find(m) == meet_brute(P, u, v), note,
                         "meet mismatch");
            const Morphism j = join(S, hs.elems[u], hs.elems[v]);
            ok &= expect(hs.find(j) == join_brute(P, u, v), note,
                         "join mismatch");
            const JMask lhs = hs.contents[u] | hs.contents[v];
            const JMask rhs = content(S.scheme(), S.roots(), m) |
                              content(S.scheme(), S.roots(),
                                      quotient(S, a, u, v));
            ok &= expect(lhs == rhs, note, "J(u) u J(v) identity");
          }
      }
      gate.report(4, total, "lattice suite over " + std::to_string(pairs) +
                                " pairs: meet, join, content identity",
                  ok, note);
    }

    // 5. ortho-complement laws for every element at every target
    {
      std::string note;
      bool ok = true;
      for (int a = 0; a < nobj; ++a) {
        const HomSet& hs = S.hom(a);
        const WeakOrder& P = S.poset(a);
        for (int w = 0; w < hs.size(); ++w) {
          const Morphism o = ortho(S, hs.elems[w]);
          const int oi = hs.find(o);
          ok &= expect(hs.elems[w].length + o.length == hs.max_length, note,
                       "(1) lengths");
          const JMask Iw = left_descents(hs.elems[w]);
          const JMask Io = left_descents(o);
          ok &= expect((Iw & Io) == 0, note, "(2) descent disjointness");
          ok &= expect((Iw | Io) == full_mask(S.scheme().rank()), note,
                       "(3) descent complement");
          ok &= expect(meet_brute(P, w, oi) == hs.bottom, note, "(O1)");
          ok &= expect(join_brute(P, w, oi) == hs.top, note, "(O2)");
          ok &= expect(hs.find(ortho(S, o)) == w, note, "(O3)");
        }
        for (int u = 0; u < hs.size(); ++u)
          for (int v = 0; v < hs.size(); ++v)
            if (P.leq(u, v))
              ok &= expect(P.leq(hs.find(ortho(S, hs.elems[v])),
                                 hs.find(ortho(S, hs.elems[u]))),
                           note, "(O4) antitone");
      }
      gate.report(5, total, "ortho-complement (O1)-(O4) and complements",
                  ok, note);
    }

    // 6. descent structure: Boolean poset of longest words, meet/join of
    //    the w_J family
    {
      std::string note;
      bool ok = true;
      for (int a = 0; a < nobj; ++a) {
        const HomSet& hs = S.hom(a);
        const WeakOrder& P = S.poset(a);
        const auto wj = longest_word_indices(S, a);
        for (int w = 0; w < hs.size(); ++w) {
          const Descents d = descents(S, a, w);
          std::set<int> expect_bar;
          for (JMask J = 0; J <= full_mask(3); ++J)
            if ((J & ~d.left) == 0) expect_bar.insert(wj[J]);
          ok &= expect(std::set<int>(d.bar.begin(), d.bar.end()) ==
                           expect_bar,
                       note, "bar D_L(w) != {w_J : J <= I_L(w)}");
          for (JMask J = 0; J <= full_mask(3); ++J)
            for (JMask K = 0; K <= full_mask(3); ++K) {
              if ((J & ~d.left) != 0 || (K & ~d.left) != 0) continue;
              ok &= expect(P.leq(wj[J], wj[K]) == ((J & ~K) == 0), note,
                           "Boolean order mismatch");
            }
        }
        for (JMask J = 0; J <= full_mask(3); ++J)
          for (JMask K = 0; K <= full_mask(3); ++K) {
            const Morphism m = meet(S, hs.elems[wj[J]], hs.elems[wj[K]]);
            ok &= expect(hs.find(m) == wj[J & K], note, "w_J ^ w_K");
            const Morphism j = join(S, hs.elems[wj[J]], hs.elems[wj[K]]);
            ok &= expect(hs.find(j) == wj[J | K], note, "w_J v w_K");
          }
      }
      gate.report(6, total,
                  "descents: bar D_L(w) is Boolean, w_J lattice embedding",
                  ok, note);
    }

    // 7. interval topology: classification vs reduced Euler characteristic
    //    and GF(2) homology below the cutoff
    {
      std::string note;
      bool ok = true;
      long intervals = 0, homs = 0;
      for (int a = 0; a < nobj; ++a) {
        const HomSet& hs = S.hom(a);
        const WeakOrder& P = S.poset(a);
        for (int u = 0; u < hs.size(); ++u)
          for (int v = 0; v < hs.size(); ++v) {
            if (!P.leq(u, v)) continue;
            if (hs.elems[v].length - hs.elems[u].length < 2) continue;
            ++intervals;
            const IntervalClass c = classify_interval(S, a, u, v);
            ok &= expect(c.chi_consistent, note, "chi mismatch");
            ok &= expect(c.homology_consistent, note, "homology mismatch");
            if (c.homology_checked) ++homs;
          }
      }
      gate.report(7, total,
                  "interval topology on " + std::to_string(intervals) +
                      " intervals (" + std::to_string(homs) +
                      " with homology)",
                  ok, note);
    }

    // 8. Coxeter complex: sphere profile, isomorphism with the sign-vector
    //    model, simplicial arrangement with 8 hyperplanes
    {
      std::string note;
      bool ok = true;
      for (int a = 0; a < nobj; ++a) {
        const CoxeterComplex C = coxeter_complex(S, a);
        ok &= expect(C.sc.pure() && C.sc.dim() == 2, note, "purity");
        for (const auto& [r, deg] : C.sc.ridge_degrees()) {
          (void)r;
          ok &= expect(deg == 2, note, "edge not in two triangles");
        }
        ok &= expect(C.sc.euler_characteristic() == 2, note, "chi != 2");
        ok &= expect(C.sc.betti_gf2(false) == std::vector<Int>{1, 0, 1},
                     note, "Betti profile");
        const auto faces = geometric_faces(S, a, C.table);
        ok &= expect(verify_isomorphism(C.table, faces).ok, note,
                     "complex isomorphism");
        const Arrangement A = arrangement(S, a, faces);
        ok &= expect(A.normals.size() == 8, note, "hyperplane count");
        ok &= expect(A.simplicial, note, "chamber not simplicial");
      }
      gate.report(8, total,
                  "Coxeter complex: S^2 profile, coset/sign isomorphism, "
                  "simplicial arrangement",
                  ok, note);
    }

    // 9. shelling along a length-lexicographic linear extension
    {
      std::string note;
      bool ok = true;
      for (int a = 0; a < nobj; ++a) {
        const CoxeterComplex C = coxeter_complex(S, a);
        std::map<std::vector<int>, int> pos;
        const auto& top = C.sc.faces[C.sc.dim()];
        for (size_t k = 0; k < top.size(); ++k)
          pos[top[k]] = static_cast<int>(k);
        std::vector<int> order;
        for (int w = 0; w < S.hom(a).size(); ++w)
          order.push_back(pos.at(C.facets[w]));
        ok &= expect(shelling_check(C.sc, order).ok, note,
                     "shelling fails at " + S.scheme().object_name(a));
      }
      gate.report(9, total, "length-lexicographic shelling at every object",
                  ok, note);
    }

    // 10. classical fixtures and the affine rejection
    {
      std::string note;
      bool ok = true;
      const System A2 = load("a2.json");
      ok &= expect(A2.hom(0).size() == 6, note, "A2 size");
      ok &= expect(A2.roots().positive[0] ==
                       std::vector<Vec>{{0, 1}, {1, 0}, {1, 1}},
                   note, "A2 roots");
      ok &= expect(A2.hom(0).level_sizes == std::vector<int>{1, 2, 2, 1},
                   note, "A2 hexagon ranks");
      const CoxeterComplex CA2 = coxeter_complex(A2, 0);
      ok &= expect(CA2.sc.f_vector() == std::vector<Int>{6, 6} &&
                       CA2.sc.euler_characteristic() == 0,
                   note, "A2 circle");
      const System B2 = load("b2.json");
      ok &= expect(B2.hom(0).size() == 8, note, "B2 size");
      ok &= expect(B2.roots().count_positive(0) == 4, note, "B2 roots");
      const System R1 = load("rank1.json");
      ok &= expect(R1.hom(0).size() == 2, note, "rank-1 size");
      const RawScheme aff = parse_scheme_file(data_path("affine_a1.json"));
      const CartanScheme as = CartanScheme::from_raw(aff);
      ok &= expect(!generate_roots(as, 50).finite(), note,
                   "affine matrix not rejected");
      gate.report(10, total, "fixtures: A2, B2, rank-1, affine rejection",
                  ok, note);
    }

    // 11. restriction functor: W(C|_J) = W_J(C) elementwise, l_J = l
    {
      std::string note;
      bool ok = true;
      std::vector<CheckResult> rs;
      checks::Acc acc(rs);
      checks::restriction_checks(S, acc);
      for (const auto& r : rs)
        ok &= expect(r.pass, note, r.name + ": " + r.detail);
      gate.report(11, total,
                  "restriction functor W(C|_J) = W_J(C) with l_J = l", ok,
                  note);
    }
  } catch (const std::exception& e) {
    std::cout << "FATAL " << e.what() << "\n";
    return 99;
  }

  std::cout << gate.passed << "/" << total << " criteria passed\n";
  return gate.failed;
}
