#ifndef FFACT_ERROR_HPP_
#define FFACT_ERROR_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffact {

  using Element = std::uint32_t;

  enum class ErrorCode {
    not_associative,
    index_out_of_range,
    unknown_letter,
    empty_word,
    word_too_short,
    not_regular,
    not_in_group_h_class,
    not_regular_d_class,
    not_d_closed,
    not_single_l_class,
    not_l_closed,
    split_not_ramseyan,
    tree_not_ramseyan,
    element_out_of_range,
    invalid_positions,
    invalid_element,
    too_large,
    parse_error
  };

  char const* to_string(ErrorCode code) noexcept;

  //! Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  //! Thrown by make_semigroup; carries a triple (a, b, c) with
  //! (ab)c != a(bc).
  class NotAssociative : public Error {
   public:
    explicit NotAssociative(std::array<Element, 3> witness);

    std::array<Element, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<Element, 3> _witness;
  };

}  // namespace ffact

#endif  // FFACT_ERROR_HPP_
