#ifndef FFACT_FOREST_HPP_
#define FFACT_FOREST_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ffact/labelling.hpp"
#include "ffact/semigroup.hpp"

namespace ffact {

  //! A factorisation tree: a leaf carrying a letter, or an inner node with
  //! at least two ordered children.
  class FactTree {
   public:
    static FactTree leaf(char letter);
    //! Throws Error(parse_error) for fewer than two children.
    static FactTree node(std::vector<FactTree> children);

    bool is_leaf() const noexcept {
      return _children.empty();
    }

    char letter() const noexcept {
      return _letter;
    }

    std::vector<FactTree> const& children() const noexcept {
      return _children;
    }

    //! The word read on the leaves from left to right.
    std::string yield() const;

    //! 0 for a leaf.
    std::size_t height() const;

    bool operator==(FactTree const&) const = default;

   private:
    FactTree() = default;

    char                  _letter = 0;
    std::vector<FactTree> _children;
  };

  //! Bracket form: a leaf is its letter, a node is its children separated by
  //! spaces inside parentheses, e.g. "((2 1) 0)".
  std::string to_string(FactTree const& t);

  //! Inverse of to_string. Throws Error(parse_error).
  FactTree parse_tree(std::string_view text);

  //! Every inner node is binary or its children all evaluate to one common
  //! idempotent. Throws Error(unknown_letter).
  bool is_ramseyan_tree(FactTree const& t, Morphism const& phi, Semigroup const& S);

  //! A ramseyan tree of height at most 3 * height(s) with yield w, from a
  //! ramseyan split of the interior cuts of w.
  //!
  //! Throws Error(split_not_ramseyan) or Error(invalid_positions).
  FactTree split_to_tree(std::string_view w,
                         Morphism const&  phi,
                         Semigroup const& S,
                         Split const&     s);

  //! The split of the interior cuts of yield(t) giving each cut the depth
  //! (the root has depth 1) of the node whose children it separates.
  //!
  //! Throws Error(tree_not_ramseyan).
  Split tree_to_split(FactTree const& t, Morphism const& phi, Semigroup const& S);

  //! A ramseyan factorisation tree of w of height at most 3|S|.
  FactTree factorisation_tree(std::string_view w,
                              Morphism const&  phi,
                              Semigroup const& S);

}  // namespace ffact

#endif  // FFACT_FOREST_HPP_
