#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "test_support.hpp"
#include "weyl/groupoid.hpp"

using namespace weyl;

TEST_CASE("from_word composes right to left through the object change") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  const int b = S.scheme().object_id("b");
  const int c = S.scheme().object_id("c");

  const Morphism w = from_word(S.scheme(), S.roots(), {0, 1}, c);  // "12^c"
  REQUIRE(w.source == c);
  REQUIRE(w.target == a);
  REQUIRE(w.length == 2);

  const Morphism id = from_word(S.scheme(), S.roots(), {}, a);
  REQUIRE(id == identity_morphism(S.scheme(), a));

  const Morphism ss = from_word(S.scheme(), S.roots(), {0, 0}, a);
  REQUIRE(ss == identity_morphism(S.scheme(), a));

  const Morphism s1b = simple_morphism(S.scheme(), S.roots(), 0, b);
  const Morphism s2c = simple_morphism(S.scheme(), S.roots(), 1, c);
  REQUIRE(compose(S.roots(), s1b, s2c) == w);

  REQUIRE(compose(S.roots(), identity_morphism(S.scheme(), a),
                  S.hom(a).elems[7]) == S.hom(a).elems[7]);
  const Morphism& u = S.hom(a).elems[17];
  REQUIRE(compose(S.roots(), u, inverse(u)) ==
          identity_morphism(S.scheme(), a));
  REQUIRE_THROWS_AS(compose(S.roots(), s2c, s2c), object_mismatch);
}

TEST_CASE("Hom(-> a) has forty elements on the five-object scheme") {
  const System S = load_system("bruhat.json");
  for (int a = 0; a < 5; ++a) {
    REQUIRE(S.hom(a).size() == 40);
    REQUIRE(S.hom(a).max_length == 8);
  }
  const int a = S.scheme().object_id("a");
  REQUIRE(S.hom(a).level_sizes ==
          std::vector<int>{1, 3, 5, 7, 8, 7, 5, 3, 1});
  const int c = S.scheme().object_id("c");
  REQUIRE(S.hom(c).level_sizes ==
          std::vector<int>{1, 3, 6, 7, 6, 7, 6, 3, 1});
}

TEST_CASE("A2 enumeration agrees with a closure oracle") {
  const System S = load_system("a2.json");
  REQUIRE(S.hom(0).size() == 6);

  // oracle: close {I} under right multiplication by the two generators,
  // with no length bookkeeping at all
  const Mat g1 = S.scheme().simple_reflection(0, 0);
  const Mat g2 = S.scheme().simple_reflection(1, 0);
  std::set<std::vector<Int>> closure{Mat::identity(2).a};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& entry : std::set<std::vector<Int>>(closure)) {
      Mat m(2);
      m.a = entry;
      for (const Mat& g : {g1, g2})
        if (closure.insert((m * g).a).second) grew = true;
    }
  }
  REQUIRE(closure.size() == 6);
  for (const Morphism& w : S.hom(0).elems) REQUIRE(closure.count(w.act.a));
}

TEST_CASE("rank one gives exactly id and sigma_1") {
  const System S = load_system("rank1.json");
  REQUIRE(S.hom(0).size() == 2);
  REQUIRE(S.hom(0).elems[1].length == 1);
}

TEST_CASE("lengths and the parabolic length function") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  REQUIRE(identity_morphism(S.scheme(), a).length == 0);
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < 5; ++x)
      REQUIRE(simple_morphism(S.scheme(), S.roots(), i, x).length == 1);

  const Morphism wI = longest_word(S.scheme(), a, full_mask(3));
  REQUIRE(wI.length == 8);
  REQUIRE(wI.source == S.scheme().object_id("e"));

  const Morphism w = from_word(S.scheme(), S.roots(), {0, 1}, a);
  REQUIRE(length_J(S.scheme(), S.roots(), w, indices_to_mask({0, 1})) == 2);
  REQUIRE_THROWS_AS(length_J(S.scheme(), S.roots(), w, indices_to_mask({0})),
                    std::invalid_argument);
}

TEST_CASE("reduced words against brute force on A2") {
  const System S = load_system("a2.json");
  const Morphism wI = longest_word(S.scheme(), 0, full_mask(2));
  REQUIRE(wI.length == 3);

  // oracle: try all 2^3 words of length three
  std::set<std::vector<int>> oracle;
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<int> word;
    for (int t = 0; t < 3; ++t) word.push_back((bits >> t) & 1);
    if (from_word(S.scheme(), S.roots(), word, wI.source) == wI)
      oracle.insert(word);
  }
  REQUIRE(oracle == std::set<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});

  const auto words = reduced_words(S.scheme(), S.roots(), wI);
  REQUIRE(std::set<std::vector<int>>(words.begin(), words.end()) == oracle);

  REQUIRE(reduced_words(S.scheme(), S.roots(),
                        identity_morphism(S.scheme(), 0)) ==
          std::vector<std::vector<int>>{{}});
}

TEST_CASE("all reduced words of one morphism use the same letters") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  for (const Morphism& w : S.hom(a).elems) {
    const JMask J = content(S.scheme(), S.roots(), w);
    for (const auto& word : reduced_words(S.scheme(), S.roots(), w))
      REQUIRE(indices_to_mask(word) == J);
  }
}

TEST_CASE("content of longest words and the root characterization") {
  const System S = load_system("bruhat.json");
  REQUIRE(content(S.scheme(), S.roots(),
                  identity_morphism(S.scheme(), 0)) == 0u);
  for (int a = 0; a < 5; ++a)
    for (JMask J = 0; J <= full_mask(3); ++J) {
      const Morphism wJ = longest_word(S.scheme(), a, J);
      REQUIRE(content(S.scheme(), S.roots(), wJ) == J);
    }
}

TEST_CASE("longest words over singletons and the empty set") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  REQUIRE(longest_word(S.scheme(), a, 0) ==
          identity_morphism(S.scheme(), a));
  for (int j = 0; j < 3; ++j)
    REQUIRE(longest_word(S.scheme(), a, 1u << j) ==
            simple_morphism(S.scheme(), S.roots(), j,
                            S.scheme().reflect(j, a)));
}

TEST_CASE("parabolic decomposition on knowns") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  const int c = S.scheme().object_id("c");
  const JMask J = indices_to_mask({0, 1});

  // "12^c" lies in Hom(c, a) and uses only letters from J
  const Morphism v_in = from_word(S.scheme(), S.roots(), {0, 1}, c);
  const auto [u1, v1] = parabolic_decompose(S.scheme(), S.roots(), v_in, J);
  REQUIRE(u1 == identity_morphism(S.scheme(), a));
  REQUIRE(v1 == v_in);

  const Morphism u_in = from_word(S.scheme(), S.roots(), {2}, a);
  const auto [u2, v2] = parabolic_decompose(S.scheme(), S.roots(), u_in, J);
  REQUIRE(u2 == u_in);
  REQUIRE(v2 == identity_morphism(S.scheme(), a));
}

TEST_CASE("known reduced words reproduce the longest elements") {
  const System S = load_system("bruhat.json");
  const int a = S.scheme().object_id("a");
  const int b = S.scheme().object_id("b");
  const int c = S.scheme().object_id("c");
  const int d = S.scheme().object_id("d");
  const int e = S.scheme().object_id("e");

  // 12131232^e tops Hom(-> a); 12132132^d tops Hom(-> b); 12132132^c
  // tops Hom(-> c)
  const Morphism top_a =
      from_word(S.scheme(), S.roots(), {0, 1, 0, 2, 0, 1, 2, 1}, e);
  REQUIRE(S.hom(a).find(top_a) == S.hom(a).top);
  const Morphism top_b =
      from_word(S.scheme(), S.roots(), {0, 1, 0, 2, 1, 0, 2, 1}, d);
  REQUIRE(S.hom(b).find(top_b) == S.hom(b).top);
  const Morphism top_c =
      from_word(S.scheme(), S.roots(), {0, 1, 0, 2, 1, 0, 2, 1}, c);
  REQUIRE(S.hom(c).find(top_c) == S.hom(c).top);

  REQUIRE(tau(S.scheme(), b) == d);
  REQUIRE(tau(S.scheme(), c) == c);
}

TEST_CASE("tau is an involution sending a to e") {
  const System S = load_system("bruhat.json");
  for (int x = 0; x < 5; ++x)
    REQUIRE(tau(S.scheme(), tau(S.scheme(), x)) == x);
  REQUIRE(tau(S.scheme(), S.scheme().object_id("a")) ==
          S.scheme().object_id("e"));

  const int a = S.scheme().object_id("a");
  const Morphism t = t_map(S.scheme(), S.roots(), a,
                           identity_morphism(S.scheme(), a));
  REQUIRE(t == identity_morphism(S.scheme(), S.scheme().object_id("e")));
}
