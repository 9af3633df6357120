#ifndef FFACT_SRC_INTERNAL_HPP_
#define FFACT_SRC_INTERNAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ffact/semigroup.hpp"

namespace ffact::detail {

  // {σ(x, y) : x < y} for the labelling with the given gaps, as a bitmap
  std::vector<bool> values_of(Semigroup const& S, std::span<Element const> gaps);

  // numbering and inverses of a group H-class
  struct GroupData {
    Element                  identity;
    std::vector<std::size_t> rank;     // by element; 1-based on H
    std::vector<Element>     inverse;  // by element; meaningful on H
  };

  GroupData group_data(Semigroup const& S, GreenData const& G, std::size_t h);

  // least-index ≤_J-minimal D-class among those flagged in E
  std::optional<std::size_t> minimal_d_class(GreenData const&         G,
                                             std::vector<bool> const& E);

  // min-closure of the ordering w.r.t. D-class d: returns the members
  // (starting with 0) and the gaps between consecutive members
  struct Closure {
    std::vector<std::size_t> members;
    std::vector<Element>     gaps;
  };

  Closure min_closure(Semigroup const&         S,
                      GreenData const&         G,
                      std::span<Element const> gaps,
                      std::size_t              d);

}  // namespace ffact::detail

#endif  // FFACT_SRC_INTERNAL_HPP_
