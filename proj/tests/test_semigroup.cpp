#include <algorithm>

#include "doctest.h"

#include "common.hpp"

namespace ffact {

  TEST_SUITE("semigroup") {
    TEST_CASE("cyclic group tables are semigroups with identity") {
      auto const S = test::cyclic(5);
      CHECK(S.size() == 5);
      CHECK(S.identity() == Element{0});
      CHECK(idempotents(S) == std::vector<Element>{0});
    }

    TEST_CASE("the left-zero table has no identity") {
      auto const S = test::left_zero();
      CHECK(S.product(0, 1) == 0);
      CHECK(S.product(1, 0) == 1);
      CHECK_FALSE(S.identity().has_value());
      CHECK(idempotents(S) == std::vector<Element>{0, 1});
    }

    TEST_CASE("the trivial semigroup") {
      CHECK(idempotents(test::trivial()) == std::vector<Element>{0});
      CHECK(test::trivial().identity() == Element{0});
    }

    TEST_CASE("non-associative tables report a witness") {
      try {
        make_semigroup({{0, 0, 2}, {0, 0, 0}, {0, 0, 0}});
        FAIL("expected NotAssociative");
      } catch (NotAssociative const& e) {
        CHECK(e.code() == ErrorCode::not_associative);
        CHECK(e.witness() == std::array<Element, 3>{0, 1, 2});
      }
    }

    TEST_CASE("malformed tables") {
      auto code = [](std::vector<std::vector<Element>> const& t) {
        try {
          make_semigroup(t);
        } catch (Error const& e) {
          return e.code();
        }
        return ErrorCode::parse_error;
      };
      CHECK(code({{0, 2}, {1, 0}}) == ErrorCode::index_out_of_range);
      CHECK(code({{0, 1}, {1}}) == ErrorCode::index_out_of_range);
    }

    TEST_CASE("monoid extension") {
      auto const ext = monoid_extension(test::left_zero());
      CHECK(ext.adjoined);
      CHECK(ext.identity == 2);
      CHECK(ext.monoid.size() == 3);
      for (Element a = 0; a < 3; ++a) {
        CHECK(ext.monoid.product(a, 2) == a);
        CHECK(ext.monoid.product(2, a) == a);
      }
      auto const z5 = monoid_extension(test::cyclic(5));
      CHECK_FALSE(z5.adjoined);
      CHECK(z5.identity == 0);
      CHECK(z5.monoid == test::cyclic(5));
    }

    TEST_CASE("eval_word") {
      auto const Z5 = test::cyclic(5);
      auto const Z2 = test::cyclic(2);
      // digit sum 22
      CHECK(eval_word(test::digits(Z5), Z5, "210232300322002") == 2);
      CHECK(eval_word(test::digits(Z5), Z5, "3") == 3);
      CHECK(eval_word(test::digits(Z2), Z2, "10011") == 1);
      CHECK_THROWS_AS(eval_word(test::digits(Z2), Z2, ""), Error);
      try {
        eval_word(test::digits(Z2), Z2, "102");
        FAIL("expected UnknownLetter");
      } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::unknown_letter);
      }
    }

    TEST_CASE("morphism preimages") {
      auto const S   = test::left_zero();
      auto const phi = Morphism({{'a', 0}, {'b', 1}, {'c', 0}}, S);
      CHECK(phi.preimage(0) == std::vector<char>{'a', 'c'});
      CHECK(phi.preimage(1) == std::vector<char>{'b'});
      CHECK_THROWS_AS(Morphism({{'a', 2}}, S), Error);
    }

    TEST_CASE("Green's relations of a group") {
      auto const G = green(test::cyclic(5));
      CHECK(G.D.count() == 1);
      CHECK(G.H.count() == 1);
      CHECK(G.L.count() == 1);
      CHECK(G.R.count() == 1);
      CHECK(G.regular_D == std::vector<bool>{true});
      CHECK(G.group_H == std::vector<bool>{true});
    }

    TEST_CASE("Green's relations of the left-zero semigroup") {
      auto const G = green(test::left_zero());
      CHECK(G.L.classes == std::vector<std::vector<Element>>{{0, 1}});
      CHECK(G.R.classes == std::vector<std::vector<Element>>{{0}, {1}});
      CHECK(G.H.classes == std::vector<std::vector<Element>>{{0}, {1}});
      CHECK(G.D.classes == std::vector<std::vector<Element>>{{0, 1}});
      CHECK(G.regular_D == std::vector<bool>{true});
      CHECK(G.group_H == std::vector<bool>{true, true});
    }

    TEST_CASE("Green's relations of a null semigroup") {
      // 1 * anything = 0, so 1 lies in a non-regular D-class above 0
      auto const S = make_semigroup({{0, 0}, {0, 0}});
      auto const G = green(S);
      CHECK(G.D.classes == std::vector<std::vector<Element>>{{0}, {1}});
      CHECK(G.regular_D == std::vector<bool>{true, false});
      CHECK(G.d_leq(0, 1));
      CHECK_FALSE(G.d_leq(1, 0));
      try {
        lclass_to_group_projection(S, G, G.L.class_of[1]);
        FAIL("expected NotRegular");
      } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::not_regular);
      }
    }

    TEST_CASE("green agrees with the brute-force definition") {
      for (auto const& S : test::small_semigroups()) {
        REQUIRE(green(S) == oracle::green_bruteforce(S));
      }
    }

    TEST_CASE("regular D-classes: every L- and R-class has an idempotent") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (std::size_t d = 0; d < G.D.count(); ++d) {
          bool const has_idempotent
              = std::any_of(G.D.classes[d].begin(), G.D.classes[d].end(),
                            [&](Element a) { return S.is_idempotent(a); });
          REQUIRE(G.regular_D[d] == has_idempotent);
          if (!G.regular_D[d]) {
            continue;
          }
          for (Element a : G.D.classes[d]) {
            bool in_l = false, in_r = false;
            for (Element e : G.idempotents) {
              in_l = in_l || G.L.class_of[e] == G.L.class_of[a];
              in_r = in_r || G.R.class_of[e] == G.R.class_of[a];
            }
            REQUIRE(in_l);
            REQUIRE(in_r);
          }
        }
      }
    }

    TEST_CASE("products staying in a D-class prolong R and L") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (Element a = 0; a < S.size(); ++a) {
          for (Element b = 0; b < S.size(); ++b) {
            Element const c = S.product(a, b);
            if (G.D.class_of[a] == G.D.class_of[b]
                && G.D.class_of[c] == G.D.class_of[a]) {
              REQUIRE(G.R.class_of[a] == G.R.class_of[c]);
              REQUIRE(G.L.class_of[b] == G.L.class_of[c]);
            }
          }
        }
      }
    }

    TEST_CASE("H-classes of a D-class have equal size") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (std::size_t d = 0; d < G.D.count(); ++d) {
          auto const hs = G.h_classes_in_d(d);
          for (std::size_t h : hs) {
            REQUIRE(G.H.classes[h].size() == G.H.classes[hs[0]].size());
          }
        }
      }
    }

    TEST_CASE("group H-classes are exactly those with an idempotent") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (std::size_t h = 0; h < G.H.count(); ++h) {
          auto const& cls = G.H.classes[h];
          bool const  has_idempotent
              = std::any_of(cls.begin(), cls.end(),
                            [&](Element a) { return S.is_idempotent(a); });
          REQUIRE(G.group_H[h] == has_idempotent);
          if (G.group_H[h]) {
            Element const e = G.group_identity(h);
            for (Element a : cls) {
              REQUIRE(S.product(e, a) == a);
              REQUIRE(S.product(a, e) == a);
              REQUIRE(G.H.class_of[S.product(a, a)] == h);
            }
          }
        }
      }
    }

    TEST_CASE("L-class projection onto a group H-class") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (std::size_t l = 0; l < G.L.count(); ++l) {
          auto const& L = G.L.classes[l];
          if (!G.regular_D[G.D.class_of[L[0]]]) {
            continue;
          }
          auto const f = lclass_to_group_projection(S, G, l);
          REQUIRE(G.group_H[f.h_class]);
          REQUIRE(G.L.class_of[G.H.classes[f.h_class][0]] == l);
          for (Element a : L) {
            REQUIRE(G.H.class_of[f(a)] == f.h_class);
            for (Element b : L) {
              if (G.L.class_of[S.product(a, b)] == l) {
                REQUIRE(f(S.product(a, b)) == S.product(f(a), f(b)));
              }
            }
          }
          // a bijection from every H-class of L onto H
          for (std::size_t h : G.h_classes_in_l(l)) {
            std::vector<Element> image;
            for (Element a : G.H.classes[h]) {
              image.push_back(f(a));
            }
            std::sort(image.begin(), image.end());
            REQUIRE(image == G.H.classes[f.h_class]);
          }
        }
      }
    }

    TEST_CASE("projection examples") {
      auto const Z5 = test::cyclic(5);
      auto const f  = lclass_to_group_projection(Z5, green(Z5), 0);
      for (Element a = 0; a < 5; ++a) {
        CHECK(f(a) == a);
      }
      auto const S = test::left_zero();
      auto const g = lclass_to_group_projection(S, green(S), 0);
      CHECK(g.identity == 0);
      CHECK(g(0) == 0);
      CHECK(g(1) == 0);
    }
  }

}  // namespace ffact
