#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "test_support.hpp"
#include "weyl/roots.hpp"

using namespace weyl;

TEST_CASE("A2 closure matches an independent by-hand oracle") {
  // sigma_1 and sigma_2 written out from the Cartan matrix [[2,-1],[-1,2]]
  const std::vector<std::vector<Vec>> sigmas = {
      {{-1, 1}, {0, 1}},  // rows of sigma_1
      {{1, 0}, {1, -1}},  // rows of sigma_2
  };
  auto apply = [&](int s, const Vec& v) {
    return Vec{sigmas[s][0][0] * v[0] + sigmas[s][0][1] * v[1],
               sigmas[s][1][0] * v[0] + sigmas[s][1][1] * v[1]};
  };
  std::set<Vec> closure{{1, 0}, {0, 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Vec& v : std::set<Vec>(closure)) {
      for (int s = 0; s < 2; ++s)
        if (closure.insert(apply(s, v)).second) grew = true;
    }
  }
  std::set<Vec> oracle_positive;
  for (const Vec& v : closure)
    if (v[0] >= 0 && v[1] >= 0) oracle_positive.insert(v);

  const CartanScheme a2 = CartanScheme::from_raw(load_raw("a2.json"));
  const RootGenResult rg = generate_roots(a2, default_root_cap(a2));
  REQUIRE(rg.finite());
  const std::set<Vec> got(rg.roots->positive[0].begin(),
                          rg.roots->positive[0].end());
  REQUIRE(got == oracle_positive);
  REQUIRE(got == std::set<Vec>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("the five-object scheme has eight positive roots everywhere") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  const RootGenResult rg = generate_roots(s, default_root_cap(s));
  REQUIRE(rg.finite());
  for (int a = 0; a < 5; ++a) REQUIRE(rg.roots->count_positive(a) == 8);
}

TEST_CASE("B2 variant has four positive roots") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("b2.json"));
  const RootGenResult rg = generate_roots(s, default_root_cap(s));
  REQUIRE(rg.finite());
  REQUIRE(rg.roots->count_positive(0) == 4);
  REQUIRE(rg.roots->contains_positive(0, {1, 2}));
}

TEST_CASE("affine matrix is rejected as not finite") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("affine_a1.json"));
  const RootGenResult rg = generate_roots(s, 50);
  REQUIRE_FALSE(rg.finite());
  REQUIRE(rg.not_finite->object == 0);
  REQUIRE(height(rg.not_finite->vec) > 50);
}

TEST_CASE("closure is idempotent") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  const RootGenResult r1 = generate_roots(s, default_root_cap(s));
  const RootGenResult r2 = generate_roots(s, default_root_cap(s));
  REQUIRE(r1.roots->all == r2.roots->all);
  REQUIRE(r1.roots->positive == r2.roots->positive);
}

TEST_CASE("axioms hold on the fixtures") {
  for (const char* name : {"bruhat.json", "a2.json", "b2.json", "rank1.json"}) {
    const CartanScheme s = CartanScheme::from_raw(load_raw(name));
    const RootGenResult rg = generate_roots(s, default_root_cap(s));
    REQUIRE(rg.finite());
    const AxiomReport rep = check_axioms(s, *rg.roots);
    INFO(name << "\n" << rep.to_string());
    REQUIRE(rep.ok());
  }
}

TEST_CASE("m^a_{2,3} = 4 and rho_2 rho_3 fix a") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  const RootGenResult rg = generate_roots(s, default_root_cap(s));
  const int a = s.object_id("a");
  REQUIRE(root_pair_count(*rg.roots, a, 1, 2) == 4);
  REQUIRE(s.reflect(1, a) == a);
  REQUIRE(s.reflect(2, a) == a);
}

TEST_CASE("an injected multiple of alpha_1 is an R2 failure") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  RootGenResult rg = generate_roots(s, default_root_cap(s));
  RootSystem bad = *rg.roots;
  const int a = s.object_id("a");
  bad.all[a].push_back({2, 0, 0});
  bad.all[a].push_back({-2, 0, 0});
  bad.positive[a].push_back({2, 0, 0});
  std::sort(bad.all[a].begin(), bad.all[a].end());
  std::sort(bad.positive[a].begin(), bad.positive[a].end());
  const AxiomReport rep = check_axioms(s, bad);
  bool witnessed = false;
  for (const auto& f : rep.failures)
    if (f.axiom == "R2" && f.object == a &&
        f.witness.find("(2,0,0)") != std::string::npos)
      witnessed = true;
  REQUIRE(witnessed);
  REQUIRE(rep.axiom_ok("R1"));
}

TEST_CASE("weakening c^a_{23} breaks the scheme downstream, not at C1/C2") {
  RawScheme raw = load_raw("bruhat.json");
  raw.cartan["a"][1][2] = -1;  // was -2; rho_2 fixes a, so (C2) still holds
  REQUIRE(validate_scheme(raw).ok());
  const CartanScheme s = CartanScheme::from_raw(raw);
  const RootGenResult rg = generate_roots(s, default_root_cap(s));
  const bool pipeline_ok = rg.finite() && check_axioms(s, *rg.roots).ok();
  REQUIRE_FALSE(pipeline_ok);
}

TEST_CASE("indecomposability is off-diagonal connectivity") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  REQUIRE(is_indecomposable(s.cartan(s.object_id("a"))));

  Mat block = Mat::identity(2);
  block(0, 0) = 2;
  block(1, 1) = 2;
  REQUIRE_FALSE(is_indecomposable(block));

  const CartanScheme a2 = CartanScheme::from_raw(load_raw("a2.json"));
  REQUIRE(is_indecomposable(a2.cartan(0)));
}
