#ifndef FFACT_COMPACTION_HPP_
#define FFACT_COMPACTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ffact/labelling.hpp"
#include "ffact/semigroup.hpp"

namespace ffact {

  enum class Variant { deterministic, complete };

  std::string_view to_string(Variant v) noexcept;

  //! The unpacked record of a position.
  //!
  //! left[k - 1] = l_k(x) = σ(max {y < x : s(y) = k}, x) and right[k - 1] =
  //! r_k(x) = σ(x, min {y > x : s(y) = k}); element 0 fills the entries
  //! whose set is empty. The deterministic variant has |S| left entries and
  //! no right entries; the complete variant has |S| of each, of which only
  //! the first s(x) are meaningful.
  struct Record {
    std::size_t          level;
    std::vector<Element> left;
    std::vector<Element> right;

    bool operator==(Record const&) const = default;
  };

  //! Per-position bit vectors p_1(x), ..., p_N(x) from which every σ(x, y)
  //! can be recovered. Field i occupies bits [i·w, (i + 1)·w) with
  //! w = ⌈log₂|S|⌉: field 0 holds s(x) - 1, then l_1..l_|S|, then (complete
  //! variant) r_1..r_|S|.
  class CompactedWord {
   public:
    //! Throws Error(parse_error) if a bit vector has the wrong length or a
    //! field holds a value out of range.
    CompactedWord(Variant                        variant,
                  Semigroup                      S,
                  std::vector<std::vector<bool>> bits);

    Variant variant() const noexcept {
      return _variant;
    }

    Semigroup const& semigroup() const noexcept {
      return _S;
    }

    std::size_t size() const noexcept {
      return _bits.size();
    }

    std::size_t field_width() const noexcept {
      return _field_width;
    }

    std::size_t bit_width() const noexcept {
      return _bit_width;
    }

    std::vector<bool> const& bits(std::size_t x) const {
      return _bits.at(x);
    }

    std::size_t field(std::size_t x, std::size_t i) const;

    Record record(std::size_t x) const;

    bool operator==(CompactedWord const&) const = default;

   private:
    Variant                        _variant;
    Semigroup                      _S;
    std::size_t                    _field_width;
    std::size_t                    _bit_width;
    std::vector<std::vector<bool>> _bits;
  };

  //! ⌈log₂ n⌉, the bits per field.
  std::size_t field_width(std::size_t n) noexcept;

  //! ⌈(2n + 1)·log₂ n⌉ and ⌈(6n + 2)·log₂ n⌉.
  std::size_t det_width_bound(std::size_t n) noexcept;
  std::size_t complete_width_bound(std::size_t n) noexcept;

  //! Records built from det_ramseyan_split; the bits of a position depend
  //! only on the labelling up to that position.
  CompactedWord compact_det(AdditiveLabelling const& sigma, GreenData const& G);
  CompactedWord compact_det(AdditiveLabelling const& sigma);

  //! Records built from ramseyan_split.
  CompactedWord compact_complete(AdditiveLabelling const& sigma,
                                 GreenData const&         G);
  CompactedWord compact_complete(AdditiveLabelling const& sigma);

  CompactedWord compact(AdditiveLabelling const& sigma, Variant v);

  //! σ(x, y) for x < y from the records alone. Throws
  //! Error(invalid_positions).
  Element decode_det(CompactedWord const& c, std::size_t x, std::size_t y);
  Element decode_complete(CompactedWord const& c, std::size_t x, std::size_t y);
  Element decode(CompactedWord const& c, std::size_t x, std::size_t y);

  //! Hexadecimal form of a bit vector read as the integer with bit i equal to
  //! p_{i+1}, zero-padded to ⌈N/4⌉ digits.
  std::string to_hex(std::vector<bool> const& bits);

  //! Throws Error(parse_error) for a malformed string or one with a bit set
  //! at or above `width`.
  std::vector<bool> from_hex(std::string_view hex, std::size_t width);

}  // namespace ffact

#endif  // FFACT_COMPACTION_HPP_
