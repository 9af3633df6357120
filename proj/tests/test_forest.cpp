#include <random>

#include "doctest.h"

#include "common.hpp"

namespace ffact {

  namespace {
    FactTree worked_tree() {
      return tree_from_json(read_file(FFACT_FIXTURES "/worked_tree.json"));
    }

    std::string random_word(std::vector<char> const& alphabet,
                            std::size_t              length,
                            std::mt19937&            rng) {
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      std::string                                w;
      for (std::size_t i = 0; i < length; ++i) {
        w.push_back(alphabet[pick(rng)]);
      }
      return w;
    }
  }  // namespace

  TEST_SUITE("forest") {
    TEST_CASE("leaves and nodes") {
      auto const a = FactTree::leaf('a');
      CHECK(a.is_leaf());
      CHECK(a.height() == 0);
      CHECK(a.yield() == "a");
      auto const t = FactTree::node({FactTree::node({a, FactTree::leaf('b')}), a});
      CHECK(t.height() == 2);
      CHECK(t.yield() == "aba");
      CHECK(to_string(t) == "((a b) a)");
      CHECK_THROWS_AS(FactTree::node({a}), Error);
    }

    TEST_CASE("bracket form round trip") {
      auto const t = parse_tree("((2 1) 0 (3  (2 2)))");
      CHECK(t.yield() == "210322");
      CHECK(parse_tree(to_string(t)) == t);
      CHECK(parse_tree("x") == FactTree::leaf('x'));
      for (auto const* bad : {"", "(", "(a)", "(a b", "(a b))", "ab", "()"}) {
        CHECK_THROWS_AS(parse_tree(bad), Error);
      }
      CHECK(parse_tree(to_string(worked_tree())) == worked_tree());
    }

    TEST_CASE("the worked tree is ramseyan") {
      auto const Z5  = test::cyclic(5);
      auto const phi = test::digits(Z5);
      auto const t   = worked_tree();
      CHECK(t.yield() == "2102323003220002");
      CHECK(t.height() == 6);
      CHECK(is_ramseyan_tree(t, phi, Z5));
      auto const s = tree_to_split(t, phi, Z5);
      CHECK(s.size() == 15);
      CHECK(s.height() <= t.height());
      CHECK(is_ramseyan(s, labelling_from_word(t.yield(), phi, Z5, Cuts::interior)));
    }

    TEST_CASE("idempotent nodes") {
      auto const Z5  = test::cyclic(5);
      auto const phi = test::digits(Z5);
      auto const l   = [](char c) { return FactTree::leaf(c); };
      CHECK_FALSE(is_ramseyan_tree(FactTree::node({l('1'), l('1'), l('1')}), phi, Z5));
      CHECK(is_ramseyan_tree(FactTree::node({l('0'), l('0'), l('0')}), phi, Z5));
      CHECK(is_ramseyan_tree(
          FactTree::node({FactTree::node({l('1'), l('4')}),
                          FactTree::node({l('2'), l('3')}), l('0')}),
          phi, Z5));
      // binary nodes are always allowed
      CHECK(is_ramseyan_tree(FactTree::node({l('1'), FactTree::node({l('2'), l('4')})}),
                             phi, Z5));
      CHECK_THROWS_AS(is_ramseyan_tree(l('7'), phi, Z5), Error);
      CHECK_THROWS_AS(
          tree_to_split(FactTree::node({l('1'), l('1'), l('1')}), phi, Z5), Error);
    }

    TEST_CASE("tree from the worked example split") {
      auto const Z5 = test::cyclic(5);
      // the example labelling is the interior-cut labelling of this word
      std::string const w     = "x2102323003220002y";
      auto const        psi   = Morphism({{'x', 0}, {'y', 0}, {'0', 0}, {'1', 1},
                                          {'2', 2}, {'3', 3}},
                                         Z5);
      auto const        sigma = labelling_from_word(w, psi, Z5, Cuts::interior);
      REQUIRE(std::vector<Element>(sigma.gaps().begin(), sigma.gaps().end())
              == test::example_gaps());
      auto const t = split_to_tree(w, psi, Z5, test::example_split());
      CHECK(t.yield() == w);
      CHECK(t.height() <= 9);
      CHECK(is_ramseyan_tree(t, psi, Z5));
    }

    TEST_CASE("split_to_tree rejects bad input") {
      auto const Z5  = test::cyclic(5);
      auto const phi = test::digits(Z5);
      CHECK(split_to_tree("3", phi, Z5, Split{}) == FactTree::leaf('3'));
      CHECK_THROWS_AS(split_to_tree("123", phi, Z5, Split{{1}}), Error);
      try {
        split_to_tree("111", phi, Z5, Split{{1, 1}});
        FAIL("expected split_not_ramseyan");
      } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::split_not_ramseyan);
      }
    }

    TEST_CASE("single letters") {
      auto const Z5 = test::cyclic(5);
      CHECK(factorisation_tree("4", test::digits(Z5), Z5) == FactTree::leaf('4'));
      CHECK(tree_to_split(FactTree::leaf('4'), test::digits(Z5), Z5).size() == 0);
    }

    TEST_CASE("factorisation tree of the worked word") {
      auto const Z5  = test::cyclic(5);
      auto const phi = test::digits(Z5);
      auto const t   = factorisation_tree("210232300322002", phi, Z5);
      CHECK(t.yield() == "210232300322002");
      CHECK(t.height() <= 15);
      CHECK(is_ramseyan_tree(t, phi, Z5));
    }

    TEST_CASE("factorisation trees of every short word") {
      for (auto const& S : test::small_semigroups()) {
        for (Element a = 0; a < S.size(); ++a) {
          for (Element b = 0; b < S.size(); ++b) {
            auto const phi = test::ab(S, a, b);
            for (auto const& w : oracle::words_upto({'a', 'b'}, 6)) {
              auto const t = factorisation_tree(w, phi, S);
              REQUIRE(t.yield() == w);
              REQUIRE(t.height() <= 3 * S.size());
              REQUIRE(is_ramseyan_tree(t, phi, S));
            }
          }
        }
      }
    }

    TEST_CASE("split and tree conversions") {
      std::mt19937 rng(17);
      for (auto const& S : test::small_semigroups()) {
        auto const phi = test::ab(S, 0, static_cast<Element>(S.size() - 1));
        for (int trial = 0; trial < 5; ++trial) {
          auto const w     = random_word({'a', 'b'}, 12, rng);
          auto const sigma = labelling_from_word(w, phi, S, Cuts::interior);
          auto const s     = ramseyan_split(sigma);
          auto const t     = split_to_tree(w, phi, S, s);
          REQUIRE(t.height() <= 3 * s.height());
          auto const back = tree_to_split(t, phi, S);
          REQUIRE(is_ramseyan(back, sigma));
          REQUIRE(back.height() <= t.height());
          REQUIRE(back.height() <= 3 * s.height());
        }
      }
    }

    TEST_CASE("long words over Z/5Z") {
      auto const   Z5  = test::cyclic(5);
      auto const   phi = test::digits(Z5);
      std::mt19937 rng(19);
      for (int trial = 0; trial < 20; ++trial) {
        auto const w = random_word({'0', '1', '2', '3', '4'}, 200, rng);
        auto const t = factorisation_tree(w, phi, Z5);
        REQUIRE(t.yield() == w);
        REQUIRE(t.height() <= 15);
        REQUIRE(is_ramseyan_tree(t, phi, Z5));
      }
    }
  }

}  // namespace ffact
