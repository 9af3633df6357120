#include "ffact/error.hpp"

namespace ffact {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::not_associative:
        return "NotAssociative";
      case ErrorCode::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorCode::unknown_letter:
        return "UnknownLetter";
      case ErrorCode::empty_word:
        return "EmptyWord";
      case ErrorCode::word_too_short:
        return "WordTooShort";
      case ErrorCode::not_regular:
        return "NotRegular";
      case ErrorCode::not_in_group_h_class:
        return "NotInGroupHClass";
      case ErrorCode::not_regular_d_class:
        return "NotRegularDClass";
      case ErrorCode::not_d_closed:
        return "NotDClosed";
      case ErrorCode::not_single_l_class:
        return "NotSingleLClass";
      case ErrorCode::not_l_closed:
        return "NotLClosed";
      case ErrorCode::split_not_ramseyan:
        return "SplitNotRamseyan";
      case ErrorCode::tree_not_ramseyan:
        return "TreeNotRamseyan";
      case ErrorCode::element_out_of_range:
        return "ElementOutOfRange";
      case ErrorCode::invalid_positions:
        return "InvalidPositions";
      case ErrorCode::invalid_element:
        return "InvalidElement";
      case ErrorCode::too_large:
        return "TooLarge";
      case ErrorCode::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

  NotAssociative::NotAssociative(std::array<Element, 3> witness)
      : Error(ErrorCode::not_associative,
              "table is not associative: (" + std::to_string(witness[0]) + " "
                  + std::to_string(witness[1]) + ") " + std::to_string(witness[2])
                  + " != " + std::to_string(witness[0]) + " ("
                  + std::to_string(witness[1]) + " " + std::to_string(witness[2])
                  + ")"),
        _witness(witness) {}

}  // namespace ffact
