#include <random>

#include "doctest.h"

#include "common.hpp"

namespace ffact {

  namespace {
    void set_field(std::vector<bool>& bits,
                   std::size_t        i,
                   std::size_t        width,
                   std::size_t        value) {
      for (std::size_t b = 0; b < width; ++b) {
        bits[i * width + b] = ((value >> b) & 1) != 0;
      }
    }

    std::size_t mismatches(CompactedWord const& c, AdditiveLabelling const& sigma) {
      std::size_t bad = 0;
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        for (std::size_t y = x + 1; y < sigma.size(); ++y) {
          bad += decode(c, x, y) != sigma.sigma(x, y);
        }
      }
      return bad;
    }
  }  // namespace

  TEST_SUITE("compaction") {
    TEST_CASE("widths") {
      CHECK(field_width(1) == 0);
      CHECK(field_width(2) == 1);
      CHECK(field_width(3) == 2);
      CHECK(field_width(4) == 2);
      CHECK(field_width(5) == 3);
      CHECK(det_width_bound(5) == 26);
      CHECK(complete_width_bound(5) == 75);
      CHECK(det_width_bound(1) == 0);
      CHECK(complete_width_bound(2) == 14);
    }

    TEST_CASE("hex") {
      CHECK(to_hex({}) == "");
      CHECK(to_hex({true}) == "1");
      CHECK(to_hex({false, true, false, false, true}) == "12");
      CHECK(from_hex("12", 5) == std::vector<bool>{false, true, false, false, true});
      CHECK(from_hex("", 0).empty());
      CHECK_THROWS_AS(from_hex("20", 5), Error);
      CHECK_THROWS_AS(from_hex("1g", 8), Error);
      CHECK(from_hex("1", 8) == std::vector<bool>{true, false, false, false, false, false, false, false});
      std::mt19937 rng(31);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<bool> bits(rng() % 40);
        for (std::size_t i = 0; i < bits.size(); ++i) {
          bits[i] = (rng() & 1) != 0;
        }
        REQUIRE(from_hex(to_hex(bits), bits.size()) == bits);
      }
    }

    TEST_CASE("records of a single position") {
      auto const              Z5 = test::cyclic(5);
      AdditiveLabelling const sigma(Z5, {});
      auto const              det = compact_det(sigma);
      CHECK(det.size() == 1);
      CHECK(det.record(0) == Record{1, {0, 0, 0, 0, 0}, {}});
      auto const complete = compact_complete(sigma);
      CHECK(complete.record(0) == Record{1, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
      CHECK_THROWS_AS(decode(det, 0, 0), Error);
    }

    TEST_CASE("the worked example") {
      auto const              Z5 = test::cyclic(5);
      AdditiveLabelling const sigma(Z5, test::example_gaps());
      for (auto v : {Variant::deterministic, Variant::complete}) {
        auto const c = compact(sigma, v);
        CHECK(c.variant() == v);
        CHECK(c.size() == 17);
        CHECK(decode(c, 0, 16) == 2);
        CHECK(mismatches(c, sigma) == 0);
        for (std::size_t x = 0; x + 1 < 17; ++x) {
          CHECK(decode(c, x, x + 1) == sigma.gaps()[x]);
        }
      }
      CHECK(compact_det(sigma).bit_width() == 18);
      CHECK(compact_complete(sigma).bit_width() == 33);
      CHECK(compact_complete(sigma).bit_width() <= 75);
      CHECK_THROWS_AS(decode_det(compact_complete(sigma), 0, 1), Error);
      CHECK_THROWS_AS(decode_complete(compact_det(sigma), 0, 1), Error);
      CHECK_THROWS_AS(decode(compact_det(sigma), 3, 2), Error);
      CHECK_THROWS_AS(decode(compact_det(sigma), 3, 17), Error);
    }

    TEST_CASE("record fields follow the split") {
      auto const              Z5 = test::cyclic(5);
      auto const              G  = green(Z5);
      AdditiveLabelling const sigma(Z5, test::example_gaps());
      auto const              s = det_ramseyan_split(sigma, G);
      auto const              c = compact_det(sigma, G);
      for (std::size_t x = 0; x < 17; ++x) {
        auto const r = c.record(x);
        REQUIRE(r.level == s.levels[x]);
        for (std::size_t k = 1; k <= 5; ++k) {
          std::optional<std::size_t> y;
          for (std::size_t z = 0; z < x; ++z) {
            if (s.levels[z] == k) {
              y = z;
            }
          }
          REQUIRE(r.left[k - 1] == (y ? sigma.sigma(*y, x) : 0));
        }
      }
    }

    TEST_CASE("exact decoding on every small labelling") {
      for (auto const& S : test::small_semigroups()) {
        for (std::size_t count = 0; count <= 5; ++count) {
          for (auto const& gaps : test::all_gaps(S, count)) {
            AdditiveLabelling const sigma(S, gaps);
            for (auto v : {Variant::deterministic, Variant::complete}) {
              auto const report = oracle::verify_compaction(sigma, v);
              REQUIRE(report.mismatches == 0);
              REQUIRE(report.ok());
            }
          }
        }
      }
    }

    TEST_CASE("long random labellings") {
      std::mt19937 rng(37);
      auto const   Z5 = test::cyclic(5);
      for (int trial = 0; trial < 10; ++trial) {
        AdditiveLabelling const sigma(Z5, test::random_gaps(Z5, 80, rng));
        REQUIRE(mismatches(compact_det(sigma), sigma) == 0);
        REQUIRE(mismatches(compact_complete(sigma), sigma) == 0);
      }
    }

    TEST_CASE("deterministic records are prefix-stable") {
      std::mt19937 rng(41);
      for (auto const& S : test::small_semigroups()) {
        AdditiveLabelling const sigma(S, test::random_gaps(S, 10, rng));
        auto const              full = compact_det(sigma);
        for (std::size_t p = 1; p <= sigma.size(); ++p) {
          auto const pre = compact_det(sigma.prefix(p));
          for (std::size_t x = 0; x < p; ++x) {
            REQUIRE(pre.bits(x) == full.bits(x));
          }
        }
      }
    }

    TEST_CASE("fillers do not affect decoding") {
      std::mt19937 rng(43);
      auto const   Z5 = test::cyclic(5);
      std::uniform_int_distribution<std::size_t> value(0, 4);
      for (int trial = 0; trial < 20; ++trial) {
        AdditiveLabelling const sigma(Z5, test::random_gaps(Z5, 30, rng));
        auto const              c = compact_complete(sigma);
        std::vector<std::vector<bool>> bits;
        for (std::size_t x = 0; x < c.size(); ++x) {
          bits.push_back(c.bits(x));
          std::size_t const level = c.record(x).level;
          for (std::size_t k = level + 1; k <= 5; ++k) {
            set_field(bits.back(), k, c.field_width(), value(rng));
            set_field(bits.back(), 5 + k, c.field_width(), value(rng));
          }
        }
        CompactedWord const noisy(Variant::complete, Z5, bits);
        REQUIRE(mismatches(noisy, sigma) == 0);

        auto const d = compact_det(sigma);
        bits.clear();
        std::vector<bool> seen(6, false);
        for (std::size_t x = 0; x < d.size(); ++x) {
          bits.push_back(d.bits(x));
          for (std::size_t k = 1; k <= 5; ++k) {
            if (!seen[k]) {
              set_field(bits.back(), k, d.field_width(), value(rng));
            }
          }
          seen[d.record(x).level] = true;
        }
        CompactedWord const noisy_det(Variant::deterministic, Z5, bits);
        REQUIRE(mismatches(noisy_det, sigma) == 0);
      }
    }

    TEST_CASE("one-element semigroup uses zero bits") {
      auto const              T = test::trivial();
      AdditiveLabelling const sigma(T, {0, 0, 0});
      auto const              c = compact_complete(sigma);
      CHECK(c.bit_width() == 0);
      CHECK(c.bits(2).empty());
      CHECK(decode(c, 0, 3) == 0);
    }

    TEST_CASE("malformed records") {
      auto const Z3 = test::cyclic(3);
      CHECK_THROWS_AS(CompactedWord(Variant::deterministic, Z3, {}), Error);
      CHECK_THROWS_AS(
          CompactedWord(Variant::deterministic, Z3, {std::vector<bool>(5)}), Error);
      // level field 3 is above |S| - 1
      std::vector<bool> bits(8, false);
      bits[0] = bits[1] = true;
      CHECK_THROWS_AS(CompactedWord(Variant::deterministic, Z3, {bits}), Error);
      bits[1] = false;
      CHECK(CompactedWord(Variant::deterministic, Z3, {bits}).record(0).level == 2);
    }
  }

}  // namespace ffact
