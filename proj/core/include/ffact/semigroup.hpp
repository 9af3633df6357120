#ifndef FFACT_SEMIGROUP_HPP_
#define FFACT_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ffact/error.hpp"

namespace ffact {

  //! A finite semigroup on the elements 0, ..., n - 1 given by its Cayley
  //! table. Instances are immutable and are only obtained from
  //! make_semigroup, so the table is always associative.
  class Semigroup {
   public:
    std::size_t size() const noexcept {
      return _n;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _n + b];
    }

    //! The identity element, if S is a monoid.
    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    bool is_idempotent(Element e) const noexcept {
      return product(e, e) == e;
    }

    bool contains(Element a) const noexcept {
      return a < _n;
    }

    std::vector<std::vector<Element>> rows() const;

    bool operator==(Semigroup const&) const = default;

   private:
    friend Semigroup make_semigroup(std::vector<std::vector<Element>> const&);
    Semigroup(std::size_t n, std::vector<Element> table);

    std::size_t             _n;
    std::vector<Element>    _table;
    std::optional<Element>  _identity;
  };

  //! Validates a Cayley table (row a, column b holds a * b).
  //!
  //! Throws Error(index_out_of_range) for a ragged table or an entry >= n,
  //! and NotAssociative with the lexicographically least witness triple.
  Semigroup make_semigroup(std::vector<std::vector<Element>> const& table);

  //! S¹: S itself when S has an identity, otherwise S with a fresh identity
  //! adjoined as element n.
  struct MonoidExtension {
    Semigroup monoid;
    Element   identity;
    bool      adjoined;
  };

  MonoidExtension monoid_extension(Semigroup const& S);

  //! A morphism from A⁺ to S, given by the images of the letters.
  class Morphism {
   public:
    Morphism(std::vector<std::pair<char, Element>> const& images,
             Semigroup const&                            S);

    std::vector<char> const& alphabet() const noexcept {
      return _alphabet;
    }

    bool contains(char letter) const noexcept;

    //! Throws Error(unknown_letter).
    Element image(char letter) const;

    //! Letters whose image is a.
    std::vector<char> preimage(Element a) const;

   private:
    std::vector<char>    _alphabet;
    std::vector<Element> _image;  // parallel to _alphabet
  };

  //! Left-to-right product of the letter images of a nonempty word.
  Element eval_word(Morphism const& phi, Semigroup const& S, std::string_view w);

  std::vector<Element> idempotents(Semigroup const& S);

  //! An n x n boolean relation.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, 0) {}

    bool operator()(Element a, Element b) const noexcept {
      return _bits[a * _n + b] != 0;
    }

    void set(Element a, Element b) noexcept {
      _bits[a * _n + b] = 1;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator==(Relation const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<char> _bits;
  };

  //! Classes are listed in order of their least element, and each class is
  //! sorted ascending.
  struct Partition {
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t>          class_of;

    std::size_t count() const noexcept {
      return classes.size();
    }

    bool operator==(Partition const&) const = default;
  };

  //! Builds a partition from the equivalence a ~ b iff rel(a, b) and
  //! rel(b, a).
  Partition partition_of(Relation const& preorder);

  struct GreenData {
    Relation  leq_L;
    Relation  leq_R;
    Relation  leq_J;
    Partition L;
    Partition R;
    Partition H;
    Partition D;
    std::vector<bool>    regular_D;  // indexed by D-class
    std::vector<bool>    group_H;    // indexed by H-class
    std::vector<Element> idempotents;

    bool operator==(GreenData const&) const = default;

    //! H-class indices contained in the given L-class, ascending.
    std::vector<std::size_t> h_classes_in_l(std::size_t l) const;
    //! H-class indices contained in the given D-class, ascending.
    std::vector<std::size_t> h_classes_in_d(std::size_t d) const;
    //! L-class indices contained in the given D-class, ascending.
    std::vector<std::size_t> l_classes_in_d(std::size_t d) const;
    //! The H-class L ∩ R, if nonempty.
    std::optional<std::size_t> h_class_of(std::size_t l, std::size_t r) const;
    //! D-class order: d1 ≤_J d2.
    bool d_leq(std::size_t d1, std::size_t d2) const;
    //! The identity of a group H-class.
    Element group_identity(std::size_t h) const;
  };

  //! Green's relations of S, computed over S¹ by two passes over the
  //! Cayley table.
  GreenData green(Semigroup const& S);

  //! The mapping f : L -> H of the L-class projection lemma, for an L-class
  //! in a regular D-class. H is the group H-class of L with the least
  //! element, e is its identity.
  struct GroupProjection {
    std::size_t          l_class;
    std::size_t          h_class;
    Element              identity;
    std::vector<Element> image;  // indexed by element; meaningful on L only

    Element operator()(Element a) const noexcept {
      return image[a];
    }
  };

  //! Throws Error(not_regular) if the D-class of L is not regular.
  GroupProjection lclass_to_group_projection(Semigroup const& S,
                                             GreenData const& G,
                                             std::size_t      l_class);

}  // namespace ffact

#endif  // FFACT_SEMIGROUP_HPP_
