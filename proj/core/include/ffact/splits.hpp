#ifndef FFACT_SPLITS_HPP_
#define FFACT_SPLITS_HPP_

#include <cstddef>
#include <vector>

#include "ffact/labelling.hpp"
#include "ffact/semigroup.hpp"

namespace ffact {

  //! Ramseyan split of a labelling whose values all lie in one group
  //! H-class H: s(x) = n(σ(anchor, x)), with σ(x, x) = 1_H, σ(y, x) the
  //! inverse of σ(x, y) for y < x, and n numbering H by ascending element.
  //! Height at most |H|.
  //!
  //! Throws Error(not_in_group_h_class) or Error(invalid_positions).
  Split split_group_h(AdditiveLabelling const& sigma,
                      GreenData const&         G,
                      std::size_t              anchor);

  //! Ramseyan split of a labelling whose values all lie in one regular
  //! D-class D, of height at most |D|.
  //!
  //! Throws Error(not_regular_d_class).
  Split split_regular_d(AdditiveLabelling const& sigma, GreenData const& G);

  //! Ramseyan split of height at most |E| of the positions 1..m (the minimum
  //! is dropped), for a D-closed set of elements E containing every value
  //! of sigma. The result has sigma.size() - 1 levels.
  //!
  //! Throws Error(not_d_closed) if E is not a union of D-classes or misses a
  //! value of sigma.
  Split split_dclosed(AdditiveLabelling const&    sigma,
                      GreenData const&            G,
                      std::vector<Element> const& E);

  //! Ramseyan split of height at most |S| of all positions.
  Split ramseyan_split(AdditiveLabelling const& sigma, GreenData const& G);
  Split ramseyan_split(AdditiveLabelling const& sigma);

  //! The D-classes (as indices) met by σ(x, y) over all x < y, in
  //! O(size · |S|).
  std::vector<bool> d_classes_of_values(AdditiveLabelling const& sigma,
                                        GreenData const&         G);

}  // namespace ffact

#endif  // FFACT_SPLITS_HPP_
