#include "ffact/forest.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ffact/splits.hpp"

namespace ffact {

  FactTree FactTree::leaf(char letter) {
    FactTree t;
    t._letter = letter;
    return t;
  }

  FactTree FactTree::node(std::vector<FactTree> children) {
    if (children.size() < 2) {
      throw Error(ErrorCode::parse_error, "an inner node needs two children");
    }
    FactTree t;
    t._children = std::move(children);
    return t;
  }

  std::string FactTree::yield() const {
    if (is_leaf()) {
      return std::string(1, _letter);
    }
    std::string out;
    for (auto const& c : _children) {
      out += c.yield();
    }
    return out;
  }

  std::size_t FactTree::height() const {
    std::size_t h = 0;
    for (auto const& c : _children) {
      h = std::max(h, c.height() + 1);
    }
    return h;
  }

  std::string to_string(FactTree const& t) {
    if (t.is_leaf()) {
      return std::string(1, t.letter());
    }
    std::string out = "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += to_string(t.children()[i]);
    }
    return out + ")";
  }

  namespace {

    class TreeParser {
     public:
      explicit TreeParser(std::string_view text) : _text(text) {}

      FactTree parse() {
        FactTree t = parse_one();
        skip_space();
        if (_pos != _text.size()) {
          fail("trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorCode::parse_error,
                    what + " at offset " + std::to_string(_pos));
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      FactTree parse_one() {
        skip_space();
        if (_pos == _text.size()) {
          fail("unexpected end of input");
        }
        char const c = _text[_pos++];
        if (c == ')') {
          fail("unexpected ')'");
        }
        if (c != '(') {
          return FactTree::leaf(c);
        }
        std::vector<FactTree> children;
        for (;;) {
          skip_space();
          if (_pos == _text.size()) {
            fail("unclosed '('");
          }
          if (_text[_pos] == ')') {
            ++_pos;
            break;
          }
          children.push_back(parse_one());
        }
        if (children.size() < 2) {
          fail("an inner node needs two children");
        }
        return FactTree::node(std::move(children));
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // value of the subtree, or nullopt if some node below is not ramseyan
    std::optional<Element> ramseyan_value(FactTree const&  t,
                                          Morphism const&  phi,
                                          Semigroup const& S) {
      if (t.is_leaf()) {
        return phi.image(t.letter());
      }
      std::vector<Element> values;
      for (auto const& c : t.children()) {
        auto const v = ramseyan_value(c, phi, S);
        if (!v) {
          return std::nullopt;
        }
        values.push_back(*v);
      }
      if (values.size() > 2) {
        Element const e = values[0];
        if (!S.is_idempotent(e)
            || std::any_of(values.begin(), values.end(),
                           [e](Element v) { return v != e; })) {
          return std::nullopt;
        }
        return e;
      }
      return S.product(values[0], values[1]);
    }

    struct TreeBuilder {
      std::string_view                w;
      std::vector<std::size_t> const& level;  // level[c] of the interior cut c

      FactTree build(std::size_t lo, std::size_t hi, std::size_t k) const {
        if (hi - lo == 1) {
          return FactTree::leaf(w[lo]);
        }
        std::vector<std::size_t> cuts;
        for (std::size_t c = lo + 1; c < hi; ++c) {
          if (level[c] == k) {
            cuts.push_back(c);
          }
        }
        if (cuts.empty()) {
          return build(lo, hi, k + 1);
        }
        if (cuts.size() == 1) {
          return FactTree::node(
              {build(lo, cuts[0], k + 1), build(cuts[0], hi, k + 1)});
        }
        FactTree middle = cuts.size() == 2 ? build(cuts[0], cuts[1], k + 1)
                                           : idempotent_node(cuts, k);
        FactTree left
            = FactTree::node({build(lo, cuts.front(), k + 1), std::move(middle)});
        return FactTree::node(
            {std::move(left), build(cuts.back(), hi, k + 1)});
      }

      FactTree idempotent_node(std::vector<std::size_t> const& cuts,
                               std::size_t                     k) const {
        std::vector<FactTree> children;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
          children.push_back(build(cuts[i], cuts[i + 1], k + 1));
        }
        return FactTree::node(std::move(children));
      }
    };

    void collect_levels(FactTree const&           t,
                        std::size_t               depth,
                        std::size_t&              offset,
                        std::vector<std::size_t>& levels) {
      if (t.is_leaf()) {
        ++offset;
        return;
      }
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) {
          levels[offset - 1] = depth;
        }
        collect_levels(t.children()[i], depth + 1, offset, levels);
      }
    }

  }  // namespace

  FactTree parse_tree(std::string_view text) {
    return TreeParser(text).parse();
  }

  bool is_ramseyan_tree(FactTree const& t, Morphism const& phi, Semigroup const& S) {
    return ramseyan_value(t, phi, S).has_value();
  }

  FactTree split_to_tree(std::string_view w,
                         Morphism const&  phi,
                         Semigroup const& S,
                         Split const&     s) {
    if (w.empty()) {
      throw Error(ErrorCode::word_too_short, "the word must be nonempty");
    }
    if (s.size() != w.size() - 1) {
      throw Error(ErrorCode::invalid_positions,
                  "a word of length " + std::to_string(w.size()) + " has "
                      + std::to_string(w.size() - 1) + " interior cuts");
    }
    if (w.size() == 1) {
      return FactTree::leaf(w[0]);
    }
    if (!is_ramseyan(s, labelling_from_word(w, phi, S, Cuts::interior))) {
      throw Error(ErrorCode::split_not_ramseyan, "the split is not ramseyan");
    }
    // level[c] for the cut c, 1 <= c < |w|
    std::vector<std::size_t> level(w.size());
    for (std::size_t c = 1; c < w.size(); ++c) {
      level[c] = s.levels[c - 1];
    }
    return TreeBuilder{w, level}.build(0, w.size(), 1);
  }

  Split tree_to_split(FactTree const& t, Morphism const& phi, Semigroup const& S) {
    if (!is_ramseyan_tree(t, phi, S)) {
      throw Error(ErrorCode::tree_not_ramseyan, "the tree is not ramseyan");
    }
    std::vector<std::size_t> levels(t.yield().size() - 1);
    std::size_t              offset = 0;
    collect_levels(t, 1, offset, levels);
    return Split{std::move(levels)};
  }

  FactTree factorisation_tree(std::string_view w,
                              Morphism const&  phi,
                              Semigroup const& S) {
    if (w.size() == 1) {
      phi.image(w[0]);
      return FactTree::leaf(w[0]);
    }
    auto const sigma = labelling_from_word(w, phi, S, Cuts::interior);
    return split_to_tree(w, phi, S, ramseyan_split(sigma));
  }

}  // namespace ffact
