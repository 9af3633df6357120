#ifndef FFACT_LABELLING_HPP_
#define FFACT_LABELLING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ffact/semigroup.hpp"

namespace ffact {

  //! An additive labelling σ of the positions 0 < 1 < ... < m into a finite
  //! semigroup, stored as its consecutive values σ(i, i + 1). σ(x, y) is the
  //! product of the gaps between x and y, so additivity holds by
  //! construction.
  //!
  //! The semigroup is referenced, not owned, and must outlive the labelling.
  class AdditiveLabelling {
   public:
    //! Throws Error(invalid_element) if a gap is not an element of S.
    AdditiveLabelling(Semigroup const& S, std::vector<Element> gaps);

    //! Number of positions, i.e. gaps().size() + 1.
    std::size_t size() const noexcept {
      return _gaps.size() + 1;
    }

    std::span<Element const> gaps() const noexcept {
      return _gaps;
    }

    Semigroup const& semigroup() const noexcept {
      return *_S;
    }

    //! σ(x, y) for x < y; throws Error(invalid_positions) otherwise.
    Element sigma(std::size_t x, std::size_t y) const;

    //! The labelling induced on an ascending subset of the positions.
    AdditiveLabelling restrict(std::span<std::size_t const> positions) const;

    //! The labelling on the first `count` positions.
    AdditiveLabelling prefix(std::size_t count) const;

    //! Adds a fresh minimum p with σ(p, 0) = a, hence σ(p, y) = a·σ(0, y).
    AdditiveLabelling prepend(Element a) const;

   private:
    Semigroup const*     _S;
    std::vector<Element> _gaps;
  };

  enum class Cuts { all, interior };

  //! The cut labelling of a word: with Cuts::all the positions are the
  //! cuts 0..|w| and σ(i, j) = φ(w[i..j)); with Cuts::interior position i
  //! stands for cut i + 1, so the positions are the cuts 1..|w|-1.
  AdditiveLabelling labelling_from_word(std::string_view  w,
                                        Morphism const&   phi,
                                        Semigroup const&  S,
                                        Cuts              mode);

  //! A split assigns every position a level in [1, height].
  struct Split {
    std::vector<std::size_t> levels;

    std::size_t size() const noexcept {
      return levels.size();
    }

    //! The largest level used, 0 for an empty split.
    std::size_t height() const noexcept;

    bool operator==(Split const&) const = default;
  };

  //! The k-neighbourhood classes: maximal sets of level-k positions with no
  //! position of level < k in between. Classes come in ascending order.
  std::vector<std::vector<std::size_t>> k_neighbour_classes(Split const& s,
                                                            std::size_t  k);

  //! Two pairs x < y and x2 < y2 of k-neighbours violating the predicate.
  struct SplitWitness {
    std::size_t level;
    std::size_t x;
    std::size_t y;
    std::size_t x2;
    std::size_t y2;
  };

  struct SplitCheck {
    bool                        holds;
    std::optional<SplitWitness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! Every k-neighbourhood class is mapped by σ to a single idempotent.
  //! Throws Error(invalid_positions) if the sizes differ.
  SplitCheck is_ramseyan(Split const& s, AdditiveLabelling const& sigma);

  //! σ(x, y) = σ(x, y)·σ(x2, y2) for all k-neighbours x < y and x2 < y2.
  SplitCheck is_forward_ramseyan(Split const& s, AdditiveLabelling const& sigma);

}  // namespace ffact

#endif  // FFACT_LABELLING_HPP_
