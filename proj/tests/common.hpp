#ifndef FFACT_TESTS_COMMON_HPP_
#define FFACT_TESTS_COMMON_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ffact/ffact.hpp"

namespace ffact::test {

  inline Semigroup cyclic(std::size_t n) {
    std::vector<std::vector<Element>> rows(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        rows[a].push_back(static_cast<Element>((a + b) % n));
      }
    }
    return make_semigroup(rows);
  }

  // ab = aa = a, ba = bb = b
  inline Semigroup left_zero() {
    return make_semigroup({{0, 0}, {1, 1}});
  }

  inline Semigroup trivial() {
    return make_semigroup({{0}});
  }

  // identity-on-digits morphism 0 -> 0, 1 -> 1, ...
  inline Morphism digits(Semigroup const& S) {
    std::vector<std::pair<char, Element>> images;
    for (Element a = 0; a < S.size() && a < 10; ++a) {
      images.emplace_back(static_cast<char>('0' + a), a);
    }
    return Morphism(images, S);
  }

  inline Morphism ab(Semigroup const& S, Element a, Element b) {
    return Morphism({{'a', a}, {'b', b}}, S);
  }

  // the 16 consecutive values of the worked split example over Z/5Z
  inline std::vector<Element> const& example_gaps() {
    static std::vector<Element> const gaps
        = {2, 1, 0, 2, 3, 2, 3, 0, 0, 3, 2, 2, 0, 0, 0, 2};
    return gaps;
  }

  inline Split example_split() {
    return Split{{1, 3, 2, 2, 1, 2, 1, 2, 2, 2, 3, 2, 1, 1, 1, 1, 2}};
  }

  // every semigroup of size at most 3, with repetitions up to isomorphism
  inline std::vector<Semigroup> const& small_semigroups() {
    static std::vector<Semigroup> const all = [] {
      std::vector<Semigroup> out;
      for (std::size_t n = 1; n <= 3; ++n) {
        auto s = oracle::enumerate_semigroups(n);
        out.insert(out.end(), s.begin(), s.end());
      }
      return out;
    }();
    return all;
  }

  // random consecutive values over S
  inline std::vector<Element> random_gaps(Semigroup const& S,
                                          std::size_t      count,
                                          std::mt19937&    rng) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(S.size() - 1));
    std::vector<Element>                   out(count);
    for (auto& g : out) {
      g = pick(rng);
    }
    return out;
  }

  // every sequence of `count` values over S
  inline std::vector<std::vector<Element>> all_gaps(Semigroup const& S,
                                                    std::size_t      count) {
    std::vector<std::vector<Element>> out{{}};
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::vector<Element>> next;
      for (auto const& g : out) {
        for (Element a = 0; a < S.size(); ++a) {
          next.push_back(g);
          next.back().push_back(a);
        }
      }
      out = std::move(next);
    }
    return out;
  }

}  // namespace ffact::test

#endif  // FFACT_TESTS_COMMON_HPP_
