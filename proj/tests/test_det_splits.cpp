#include <random>

#include "doctest.h"

#include "common.hpp"

namespace ffact {

  TEST_SUITE("det_splits") {
    TEST_CASE("L-class split of a group is the anchored group split") {
      auto const   Z5 = test::cyclic(5);
      auto const   G  = green(Z5);
      std::mt19937 rng(3);
      for (int trial = 0; trial < 50; ++trial) {
        AdditiveLabelling const sigma(Z5, test::random_gaps(Z5, 12, rng));
        REQUIRE(det_split_lclass(sigma, G, 0) == split_group_h(sigma, G, 0));
      }
    }

    TEST_CASE("L-class split of the left-zero semigroup") {
      auto const S   = test::left_zero();
      auto const G   = green(S);
      auto const phi = test::ab(S, 0, 1);
      auto const sigma = labelling_from_word("abab", phi, S, Cuts::all);
      auto const s     = det_split_lclass(sigma, G, 0);
      CHECK(s.height() <= 2);
      CHECK(is_forward_ramseyan(s, sigma));
      CHECK(det_split_lclass(AdditiveLabelling(S, {}), G, 0).levels
            == std::vector<std::size_t>{1});
      CHECK(det_split_dclass(sigma, G, {0}) == s);
    }

    TEST_CASE("L-class split rejects values outside the class") {
      auto const S = test::left_zero();
      auto const G = green(S);
      // the L-class of 0 in the null semigroup is not regular
      auto const N = make_semigroup({{0, 0}, {0, 0}});
      CHECK_THROWS_AS(det_split_lclass(AdditiveLabelling(N, {1}), green(N), 1),
                      Error);
      CHECK_THROWS_AS(det_split_lclass(AdditiveLabelling(S, {0}), G, 4), Error);
      auto const Z = make_semigroup({{0, 0}, {0, 1}});
      CHECK_THROWS_AS(det_split_lclass(AdditiveLabelling(Z, {0, 1}), green(Z), 1),
                      Error);
    }

    TEST_CASE("D-class split") {
      auto const S = test::left_zero();
      auto const G = green(S);
      for (std::size_t count = 0; count <= 8; ++count) {
        for (auto const& gaps : test::all_gaps(S, count)) {
          AdditiveLabelling const sigma(S, gaps);
          auto const              s = det_split_dclass(sigma, G, {0});
          REQUIRE(s.height() <= 2);
          REQUIRE(is_forward_ramseyan(s, sigma));
        }
      }
      auto const Z = make_semigroup({{0, 0}, {0, 1}});
      CHECK_THROWS_AS(det_split_dclass(AdditiveLabelling(Z, {0}), green(Z), {}),
                      Error);
      CHECK_THROWS_AS(det_split_dclass(AdditiveLabelling(Z, {0}), green(Z), {0, 1}),
                      Error);
      CHECK_THROWS_AS(det_split_dclass(AdditiveLabelling(Z, {0}), green(Z), {1}),
                      Error);
    }

    TEST_CASE("trivial semigroup gives a constant split") {
      auto const              T = test::trivial();
      AdditiveLabelling const sigma(T, std::vector<Element>(9, 0));
      CHECK(det_ramseyan_split(sigma).levels == std::vector<std::size_t>(10, 1));
    }

    TEST_CASE("the left-zero word abababab") {
      auto const S     = test::left_zero();
      auto const sigma = labelling_from_word("abababab", test::ab(S, 0, 1), S,
                                             Cuts::all);
      auto const s     = det_ramseyan_split(sigma);
      CHECK(s.height() <= 2);
      CHECK(is_forward_ramseyan(s, sigma));
    }

    TEST_CASE("forward ramseyan on every small labelling") {
      for (auto const& S : test::small_semigroups()) {
        auto const G = green(S);
        for (std::size_t count = 0; count <= 5; ++count) {
          for (auto const& gaps : test::all_gaps(S, count)) {
            AdditiveLabelling const sigma(S, gaps);
            auto const              s = det_ramseyan_split(sigma, G);
            REQUIRE(s.size() == sigma.size());
            REQUIRE(s.height() <= S.size());
            REQUIRE(oracle::forward_ramseyan_bruteforce(S, gaps, s.levels));
          }
        }
      }
    }

    TEST_CASE("prefix determinism") {
      auto const   Z5 = test::cyclic(5);
      auto const   G  = green(Z5);
      std::mt19937 rng(5);
      // agreeing on 6 values, lengths 8 and 10
      for (int trial = 0; trial < 100; ++trial) {
        auto a = test::random_gaps(Z5, 7, rng);
        auto b = a;
        b.resize(6);
        auto const tail = test::random_gaps(Z5, 3, rng);
        b.insert(b.end(), tail.begin(), tail.end());
        auto const sa = det_ramseyan_split(AdditiveLabelling(Z5, a), G);
        auto const sb = det_ramseyan_split(AdditiveLabelling(Z5, b), G);
        REQUIRE(std::equal(sa.levels.begin(), sa.levels.begin() + 7,
                           sb.levels.begin()));
      }
      for (auto const& S : test::small_semigroups()) {
        auto const              G2   = green(S);
        auto const              gaps = test::random_gaps(S, 12, rng);
        AdditiveLabelling const sigma(S, gaps);
        auto const              full = det_ramseyan_split(sigma, G2);
        for (std::size_t p = 1; p <= sigma.size(); ++p) {
          auto const pre = det_ramseyan_split(sigma.prefix(p), G2);
          REQUIRE(std::equal(pre.levels.begin(), pre.levels.end(),
                             full.levels.begin()));
        }
      }
    }

    TEST_CASE("streaming matches batch") {
      auto const Z2 = test::cyclic(2);
      StreamingSplitBuilder b(Z2);
      CHECK(b.levels() == std::vector<std::size_t>{1});
      for (int i = 0; i < 4; ++i) {
        b.extend(1);
      }
      CHECK(b.split() == det_ramseyan_split(AdditiveLabelling(Z2, {1, 1, 1, 1})));
      CHECK_THROWS_AS(b.extend(2), Error);

      std::mt19937 rng(13);
      for (auto const& S : test::small_semigroups()) {
        auto const            G    = green(S);
        auto const            gaps = test::random_gaps(S, 25, rng);
        StreamingSplitBuilder builder(S, G);
        for (std::size_t i = 0; i < gaps.size(); ++i) {
          std::size_t const level = builder.extend(gaps[i]);
          REQUIRE(level == builder.levels().back());
        }
        REQUIRE(builder.split() == det_ramseyan_split(AdditiveLabelling(S, gaps), G));
      }
    }

    TEST_CASE("streaming builders can be moved") {
      auto const            Z5 = test::cyclic(5);
      StreamingSplitBuilder a(Z5);
      a.extend(3);
      StreamingSplitBuilder b(std::move(a));
      b.extend(2);
      CHECK(b.split() == det_ramseyan_split(AdditiveLabelling(Z5, {3, 2})));
    }
  }

}  // namespace ffact
