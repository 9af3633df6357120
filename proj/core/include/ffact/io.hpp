#ifndef FFACT_IO_HPP_
#define FFACT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "ffact/compaction.hpp"
#include "ffact/forest.hpp"
#include "ffact/labelling.hpp"
#include "ffact/semigroup.hpp"

namespace ffact {

  //! Semigroup text format: n on the first line, then n rows of n
  //! whitespace-separated indices, row a column b holding a * b.
  //!
  //! Throws Error(parse_error) besides the errors of make_semigroup.
  Semigroup parse_semigroup(std::string_view text);

  //! Morphism text format: one `<letter>=<index>` per line.
  Morphism parse_morphism(std::string_view text, Semigroup const& S);

  //! Throws Error(parse_error) if the file cannot be read.
  std::string read_file(std::filesystem::path const& path);

  //! {"height": h, "levels": [...]}
  std::string split_to_json(Split const& s);

  //! {"leaf": "a"} or {"children": [...]}
  std::string tree_to_json(FactTree const& t);
  FactTree    tree_from_json(std::string_view json);

  //! {"variant", "bit_width", "bits", "semigroup"}; the Cayley table is
  //! carried along so that the records can be decoded on their own.
  std::string   compacted_to_json(CompactedWord const& c);
  CompactedWord compacted_from_json(std::string_view json);

}  // namespace ffact

#endif  // FFACT_IO_HPP_
