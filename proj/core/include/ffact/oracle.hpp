#ifndef FFACT_ORACLE_HPP_
#define FFACT_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffact/compaction.hpp"
#include "ffact/labelling.hpp"
#include "ffact/rexp.hpp"
#include "ffact/semigroup.hpp"

//! Brute-force reference implementations. Nothing here reuses the
//! constructive algorithms: predicates are re-derived from their
//! definitions, and searches are exhaustive, so they only scale to small
//! instances.
namespace ffact::oracle {

  //! σ(x, y) as the product of gaps[x..y).
  Element sigma_fold(Semigroup const&         S,
                     std::span<Element const> gaps,
                     std::size_t              x,
                     std::size_t              y);

  //! Definitional checks over all pairs of k-neighbour spans.
  bool ramseyan_bruteforce(Semigroup const&             S,
                           std::span<Element const>     gaps,
                           std::span<std::size_t const> levels);
  bool forward_ramseyan_bruteforce(Semigroup const&             S,
                                   std::span<Element const>     gaps,
                                   std::span<std::size_t const> levels);

  //! Green's relations by existential search over S¹.
  GreenData green_bruteforce(Semigroup const& S);

  //! All associative n x n tables, in lexicographic order. Throws
  //! Error(too_large) for n > 3.
  std::vector<Semigroup> enumerate_semigroups(std::size_t n);

  //! All words over the alphabet with length in [1, maxlen], shortest first.
  std::vector<std::string> words_upto(std::vector<char> const& alphabet,
                                      std::size_t              maxlen);

  //! The least N <= cap such that some split of height N is ramseyan, by
  //! exhaustive search. Throws Error(too_large) beyond 10 positions or a cap
  //! above 4.
  std::optional<std::size_t> min_ramseyan_height(AdditiveLabelling const& sigma,
                                                 std::size_t              cap);

  //! Whether some choice of levels in [1, height], where the level of a
  //! position is a function of the values before it, is ramseyan on every
  //! labelling with at most max_gaps values. Throws Error(too_large) if the
  //! search tree exceeds 2^24 prefixes.
  bool deterministic_ramseyan_exists(Semigroup const& S,
                                     std::size_t      height,
                                     std::size_t      max_gaps);

  //! The words of the language of e with length in [1, maxlen], shortest
  //! first. Throws Error(too_large) for maxlen > 10.
  std::vector<std::string> language_upto(RExpr const&             e,
                                         std::vector<char> const& alphabet,
                                         std::size_t              maxlen);

  struct Mismatch {
    std::size_t x;
    std::size_t y;
    Element     expected;
    Element     decoded;
  };

  struct CompactionReport {
    std::size_t             pairs;
    std::size_t             mismatches;
    std::size_t             bit_width;
    std::size_t             width_bound;
    std::optional<Mismatch> first_mismatch;

    bool ok() const noexcept {
      return mismatches == 0 && bit_width <= width_bound;
    }
  };

  //! Compacts, decodes every pair x < y and compares with sigma_fold.
  CompactionReport verify_compaction(AdditiveLabelling const& sigma, Variant v);

}  // namespace ffact::oracle

#endif  // FFACT_ORACLE_HPP_
