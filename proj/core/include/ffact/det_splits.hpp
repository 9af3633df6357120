#ifndef FFACT_DET_SPLITS_HPP_
#define FFACT_DET_SPLITS_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "ffact/labelling.hpp"
#include "ffact/semigroup.hpp"

namespace ffact {

  //! Forward ramseyan split, of height at most |L|, of a labelling whose
  //! values all lie in the L-class `l_class` of a regular D-class. The values
  //! are projected onto a group H-class of L and split around the minimum;
  //! when L has a non-group H-class the minimum gets level 1 on its own.
  //!
  //! Throws Error(not_single_l_class) or Error(not_regular).
  Split det_split_lclass(AdditiveLabelling const& sigma,
                         GreenData const&         G,
                         std::size_t              l_class);

  //! Forward ramseyan split, of height at most |E|, of a labelling with
  //! values in E, a set of L-classes (indices) of one regular D-class.
  //!
  //! Throws Error(not_l_closed).
  Split det_split_dclass(AdditiveLabelling const&        sigma,
                         GreenData const&                G,
                         std::vector<std::size_t> const& E);

  //! Forward ramseyan split of height at most |S| in which the level of a
  //! position only depends on the labelling up to that position.
  Split det_ramseyan_split(AdditiveLabelling const& sigma, GreenData const& G);
  Split det_ramseyan_split(AdditiveLabelling const& sigma);

  //! Computes det_ramseyan_split online: each call to extend reveals one
  //! more position and returns its level. Emitted levels never change.
  class StreamingSplitBuilder {
   public:
    explicit StreamingSplitBuilder(Semigroup const& S);
    StreamingSplitBuilder(Semigroup const& S, GreenData G);
    ~StreamingSplitBuilder();
    StreamingSplitBuilder(StreamingSplitBuilder&&) noexcept;
    StreamingSplitBuilder& operator=(StreamingSplitBuilder&&) noexcept;

    //! Appends the position p with σ(last, p) = value. Throws
    //! Error(invalid_element).
    std::size_t extend(Element value);

    //! Levels of the positions revealed so far; position 0 is present from
    //! the start.
    std::vector<std::size_t> const& levels() const noexcept {
      return _levels;
    }

    Split split() const {
      return Split{_levels};
    }

    class Node;

   private:
    Semigroup const*          _S;
    std::unique_ptr<GreenData> _G;
    std::unique_ptr<Node>      _root;
    std::vector<std::size_t>   _levels;
  };

}  // namespace ffact

#endif  // FFACT_DET_SPLITS_HPP_
