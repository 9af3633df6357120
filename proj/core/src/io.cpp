#include "ffact/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ffact {

  using nlohmann::json;

  namespace {

    [[noreturn]] void parse_fail(std::string const& what) {
      throw Error(ErrorCode::parse_error, what);
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        parse_fail(e.what());
      }
    }

    json tree_json(FactTree const& t) {
      if (t.is_leaf()) {
        return {{"leaf", std::string(1, t.letter())}};
      }
      json children = json::array();
      for (auto const& c : t.children()) {
        children.push_back(tree_json(c));
      }
      return {{"children", std::move(children)}};
    }

    FactTree tree_of(json const& j) {
      if (!j.is_object()) {
        parse_fail("a tree node must be an object");
      }
      if (j.contains("leaf")) {
        auto const& leaf = j.at("leaf");
        if (!leaf.is_string() || leaf.get<std::string>().size() != 1) {
          parse_fail("a leaf must be a one-letter string");
        }
        return FactTree::leaf(leaf.get<std::string>()[0]);
      }
      if (!j.contains("children") || !j.at("children").is_array()) {
        parse_fail("a tree node needs \"leaf\" or \"children\"");
      }
      std::vector<FactTree> children;
      for (auto const& c : j.at("children")) {
        children.push_back(tree_of(c));
      }
      return FactTree::node(std::move(children));
    }

  }  // namespace

  Semigroup parse_semigroup(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long          n = 0;
    if (!(in >> n) || n <= 0) {
      parse_fail("the first line must hold the positive size n");
    }
    std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
      for (long long b = 0; b < n; ++b) {
        long long v;
        if (!(in >> v)) {
          parse_fail("expected " + std::to_string(n * n) + " table entries");
        }
        if (v < 0 || v >= n) {
          throw Error(ErrorCode::index_out_of_range,
                      "table entry " + std::to_string(v) + " is not in [0, "
                          + std::to_string(n - 1) + "]");
        }
        row.push_back(static_cast<Element>(v));
      }
    }
    std::string rest;
    if (in >> rest) {
      parse_fail("unexpected trailing input '" + rest + "'");
    }
    return make_semigroup(rows);
  }

  Morphism parse_morphism(std::string_view text, Semigroup const& S) {
    std::istringstream                    in{std::string(text)};
    std::vector<std::pair<char, Element>> images;
    std::string                           line;
    std::size_t                           lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      if (line.size() < 3 || line[1] != '=') {
        parse_fail("line " + std::to_string(lineno)
                   + ": expected <letter>=<index>");
      }
      std::size_t used = 0;
      long long   v    = -1;
      try {
        v = std::stoll(line.substr(2), &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != line.size() - 2) {
        parse_fail("line " + std::to_string(lineno) + ": bad index");
      }
      if (v < 0 || static_cast<std::size_t>(v) >= S.size()) {
        throw Error(ErrorCode::index_out_of_range,
                    "line " + std::to_string(lineno) + ": " + std::to_string(v)
                        + " is not an element");
      }
      images.emplace_back(line[0], static_cast<Element>(v));
    }
    if (images.empty()) {
      parse_fail("the morphism has no letters");
    }
    return Morphism(images, S);
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      parse_fail("cannot read " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  std::string split_to_json(Split const& s) {
    return json{{"height", s.height()}, {"levels", s.levels}}.dump();
  }

  std::string tree_to_json(FactTree const& t) {
    return tree_json(t).dump();
  }

  FactTree tree_from_json(std::string_view text) {
    return tree_of(parse_json(text));
  }

  std::string compacted_to_json(CompactedWord const& c) {
    json bits = json::array();
    for (std::size_t x = 0; x < c.size(); ++x) {
      bits.push_back(to_hex(c.bits(x)));
    }
    return json{{"variant", std::string(to_string(c.variant()))},
                {"bit_width", c.bit_width()},
                {"bits", std::move(bits)},
                {"semigroup", c.semigroup().rows()}}
        .dump();
  }

  CompactedWord compacted_from_json(std::string_view text) {
    json const j = parse_json(text);
    try {
      auto const variant_name = j.at("variant").get<std::string>();
      Variant    variant;
      if (variant_name == "det") {
        variant = Variant::deterministic;
      } else if (variant_name == "complete") {
        variant = Variant::complete;
      } else {
        parse_fail("unknown variant '" + variant_name + "'");
      }
      auto const rows  = j.at("semigroup").get<std::vector<std::vector<Element>>>();
      Semigroup  S     = make_semigroup(rows);
      auto const width = j.at("bit_width").get<std::size_t>();
      std::vector<std::vector<bool>> bits;
      for (auto const& h : j.at("bits")) {
        bits.push_back(from_hex(h.get<std::string>(), width));
      }
      CompactedWord c(variant, std::move(S), std::move(bits));
      if (c.bit_width() != width) {
        parse_fail("bit_width does not match the semigroup");
      }
      return c;
    } catch (json::exception const& e) {
      parse_fail(e.what());
    }
  }

}  // namespace ffact
