#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "weyl/cartan.hpp"

using namespace weyl;

namespace {
bool has_violation(const ValidationReport& rep, const std::string& axiom,
                   const std::vector<std::string>& objects,
                   const std::vector<int>& indices) {
  for (const auto& v : rep.violations)
    if (v.axiom == axiom && v.objects == objects && v.indices == indices)
      return true;
  return false;
}
}  // namespace

TEST_CASE("the five-object scheme validates cleanly") {
  const RawScheme raw = load_raw("bruhat.json");
  REQUIRE(validate_scheme(raw).ok());
}

TEST_CASE("a non-involutive reflection is a C1 violation") {
  RawScheme raw = load_raw("bruhat.json");
  raw.reflections[1]["a"] = "b";
  raw.reflections[1]["b"] = "c";
  const ValidationReport rep = validate_scheme(raw);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(has_violation(rep, "C1", {"b"}, {1}));
  REQUIRE(has_violation(rep, "C1", {"a"}, {1}));
}

TEST_CASE("a row mismatch across an edge is a C2 violation") {
  RawScheme raw = load_raw("bruhat.json");
  raw.cartan["b"][0][1] = -2;  // c^b_{12}, while c^a_{12} stays -1
  const ValidationReport rep = validate_scheme(raw);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(has_violation(rep, "C2", {"a", "b"}, {1, 2}));
}

TEST_CASE("generalized Cartan matrix conditions") {
  RawScheme raw = load_raw("a2.json");
  raw.cartan["a"][0][0] = 1;
  REQUIRE(has_violation(validate_scheme(raw), "gcm", {"a"}, {1}));

  raw = load_raw("a2.json");
  raw.cartan["a"][0][1] = 1;
  REQUIRE(has_violation(validate_scheme(raw), "gcm", {"a"}, {1, 2}));

  raw = load_raw("a2.json");
  raw.cartan["a"][0][1] = 0;  // c_{21} stays -1
  REQUIRE(has_violation(validate_scheme(raw), "gcm", {"a"}, {1, 2}));
}

TEST_CASE("structural problems are reported apart from axioms") {
  RawScheme raw = load_raw("bruhat.json");
  raw.cartan.erase("c");
  ValidationReport rep = validate_scheme(raw);
  REQUIRE(has_violation(rep, "structure", {"c"}, {}));

  raw = load_raw("bruhat.json");
  raw.reflections[2]["b"] = "zzz";
  rep = validate_scheme(raw);
  REQUIRE(has_violation(rep, "structure", {"b", "zzz"}, {2}));

  raw = load_raw("bruhat.json");
  raw.reflections[3].erase("d");
  rep = validate_scheme(raw);
  REQUIRE(has_violation(rep, "structure", {"d"}, {3}));

  raw = load_raw("bruhat.json");
  raw.cartan["a"] = {{2, -1}, {-1, 2}};
  rep = validate_scheme(raw);
  REQUIRE(has_violation(rep, "structure", {"a"}, {}));
}

TEST_CASE("validation is idempotent and canonically ordered") {
  RawScheme raw = load_raw("bruhat.json");
  raw.reflections[1]["a"] = "b";
  raw.reflections[1]["b"] = "c";
  raw.cartan["e"][0][0] = 3;
  const ValidationReport r1 = validate_scheme(raw);
  const ValidationReport r2 = validate_scheme(raw);
  REQUIRE(r1.violations == r2.violations);
  REQUIRE(std::is_sorted(r1.violations.begin(), r1.violations.end()));
}

TEST_CASE("restriction keeps objects and cuts matrices") {
  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));

  const CartanScheme r12 = s.restrict({0, 1});
  REQUIRE(r12.rank() == 2);
  REQUIRE(r12.num_objects() == 5);
  const Mat& Ca = r12.cartan(r12.object_id("a"));
  REQUIRE(Ca(0, 0) == 2);
  REQUIRE(Ca(0, 1) == -1);
  REQUIRE(Ca(1, 0) == -1);
  REQUIRE(Ca(1, 1) == 2);

  REQUIRE(s.restrict({0, 1, 2}) == s);

  const CartanScheme a2 = CartanScheme::from_raw(load_raw("a2.json"));
  const CartanScheme r1 = a2.restrict({0});
  REQUIRE(r1.rank() == 1);
  REQUIRE(r1.cartan(0)(0, 0) == 2);

  REQUIRE(s.restrict({0, 1}).restrict({0}) == s.restrict({0}));
  REQUIRE_THROWS_AS(s.restrict({}), std::invalid_argument);
}

TEST_CASE("simple reflection matrices follow the Cartan rows") {
  const CartanScheme a2 = CartanScheme::from_raw(load_raw("a2.json"));
  const Mat s1 = a2.simple_reflection(0, 0);
  REQUIRE(s1.col(0) == Vec{-1, 0});  // alpha_1 -> -alpha_1
  REQUIRE(s1.col(1) == Vec{1, 1});   // alpha_2 -> alpha_2 + alpha_1

  const CartanScheme s = CartanScheme::from_raw(load_raw("bruhat.json"));
  const int a = s.object_id("a");
  const Mat s2 = s.simple_reflection(1, a);
  REQUIRE(s2.col(2) == Vec{0, 2, 1});  // alpha_3 -> alpha_3 + 2 alpha_2

  for (int i = 0; i < s.rank(); ++i)
    for (int x = 0; x < s.num_objects(); ++x) {
      Vec e(3, 0);
      e[i] = 1;
      REQUIRE(s.simple_reflection(i, x).col(i) == negate(e));
      const Int d = det(s.simple_reflection(i, x));
      REQUIRE((d == 1 || d == -1));
      // involution across the object change
      REQUIRE(s.simple_reflection(i, s.reflect(i, x)) *
                  s.simple_reflection(i, x) ==
              Mat::identity(3));
    }
}
