#include "ffact/rexp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <optional>

namespace ffact {

  namespace {
    constexpr std::string_view kPlusSign = "⁺";  // ⁺
    constexpr std::string_view kEmptySet = "∅";  // ∅
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ExprPool
  ////////////////////////////////////////////////////////////////////////

  std::size_t ExprPool::NodeHash::operator()(ExprNode const& n) const noexcept {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
    for (char c : n.letters) {
      h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    }
    for (ExprId id : n.children) {
      h = (h ^ id) * 0x100000001b3ULL;
    }
    return h;
  }

  ExprPool::ExprPool() {
    intern(ExprNode{ExprKind::empty, {}, {}});
  }

  ExprId ExprPool::intern(ExprNode node) {
    auto it = _index.find(node);
    if (it != _index.end()) {
      return it->second;
    }
    auto const id = static_cast<ExprId>(_nodes.size());
    _nodes.push_back(node);
    _index.emplace(std::move(node), id);
    return id;
  }

  ExprId ExprPool::atom(std::vector<char> letters) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.empty()) {
      return empty();
    }
    return intern(ExprNode{ExprKind::atom, std::move(letters), {}});
  }

  ExprId ExprPool::sum(std::vector<ExprId> terms) {
    std::vector<ExprId> flat;
    for (ExprId t : terms) {
      auto const& n = _nodes[t];
      if (n.kind == ExprKind::sum) {
        flat.insert(flat.end(), n.children.begin(), n.children.end());
      } else if (n.kind != ExprKind::empty) {
        flat.push_back(t);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) {
      return empty();
    }
    if (flat.size() == 1) {
      return flat[0];
    }
    return intern(ExprNode{ExprKind::sum, {}, std::move(flat)});
  }

  ExprId ExprPool::concat(ExprId left, ExprId right) {
    if (left == empty() || right == empty()) {
      return empty();
    }
    return intern(ExprNode{ExprKind::concat, {}, {left, right}});
  }

  ExprId ExprPool::star(ExprId child) {
    if (child == empty()) {
      return empty();
    }
    return intern(ExprNode{ExprKind::star, {}, {child}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  std::vector<RExpr> build_ramseyan_exprs(Morphism const& phi, Semigroup const& S) {
    auto                pool = std::make_shared<ExprPool>();
    std::size_t const   n    = S.size();
    std::vector<ExprId> E(n);
    for (Element x = 0; x < n; ++x) {
      E[x] = pool->atom(phi.preimage(x));
    }
    for (std::size_t k = 0; k < 3 * n; ++k) {
      std::vector<ExprId> next(n);
      for (Element x = 0; x < n; ++x) {
        std::vector<ExprId> terms{E[x]};
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            if (S.product(y, z) == x) {
              terms.push_back(pool->concat(E[y], E[z]));
            }
          }
        }
        if (S.is_idempotent(x)) {
          terms.push_back(pool->star(E[x]));
        }
        next[x] = pool->sum(std::move(terms));
      }
      if (next == E) {
        break;
      }
      E = std::move(next);
    }
    std::vector<RExpr> out;
    for (ExprId id : E) {
      out.push_back(RExpr{pool, id});
    }
    return out;
  }

  RExpr build_ramseyan_expr(Morphism const& phi, Semigroup const& S, Element x) {
    if (!S.contains(x)) {
      throw Error(ErrorCode::element_out_of_range,
                  std::to_string(x) + " is not an element");
    }
    return build_ramseyan_exprs(phi, S)[x];
  }

  ////////////////////////////////////////////////////////////////////////
  // Analysis
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // nodes reachable from the root, in increasing id order (children first)
    std::vector<ExprId> reachable(RExpr const& e) {
      std::vector<bool>   seen(e.id + 1, false);
      std::vector<ExprId> stack{e.id};
      seen[e.id] = true;
      while (!stack.empty()) {
        ExprId const id = stack.back();
        stack.pop_back();
        for (ExprId c : e.pool->node(id).children) {
          if (!seen[c]) {
            seen[c] = true;
            stack.push_back(c);
          }
        }
      }
      std::vector<ExprId> out;
      for (ExprId id = 0; id <= e.id; ++id) {
        if (seen[id]) {
          out.push_back(id);
        }
      }
      return out;
    }

    using ElementSet = std::vector<bool>;

    ElementSet product_set(Semigroup const& S, ElementSet const& A, ElementSet const& B) {
      ElementSet out(S.size(), false);
      for (Element a = 0; a < S.size(); ++a) {
        if (!A[a]) {
          continue;
        }
        for (Element b = 0; b < S.size(); ++b) {
          if (B[b]) {
            out[S.product(a, b)] = true;
          }
        }
      }
      return out;
    }

    std::vector<ElementSet> images(RExpr const&     e,
                                   Morphism const&  phi,
                                   Semigroup const& S) {
      std::vector<ElementSet> img(e.id + 1);
      for (ExprId id : reachable(e)) {
        auto const& n = e.pool->node(id);
        ElementSet  out(S.size(), false);
        switch (n.kind) {
          case ExprKind::empty:
            break;
          case ExprKind::atom:
            for (char c : n.letters) {
              out[phi.image(c)] = true;
            }
            break;
          case ExprKind::sum:
            for (ExprId c : n.children) {
              for (Element a = 0; a < S.size(); ++a) {
                out[a] = out[a] || img[c][a];
              }
            }
            break;
          case ExprKind::concat:
            out = product_set(S, img[n.children[0]], img[n.children[1]]);
            break;
          case ExprKind::star: {
            ElementSet const& base = img[n.children[0]];
            out                    = base;
            for (;;) {
              ElementSet grown = product_set(S, out, base);
              bool       more  = false;
              for (Element a = 0; a < S.size(); ++a) {
                if (grown[a] && !out[a]) {
                  out[a] = true;
                  more   = true;
                }
              }
              if (!more) {
                break;
              }
            }
            break;
          }
        }
        img[id] = std::move(out);
      }
      return img;
    }

  }  // namespace

  std::vector<bool> image(RExpr const& e, Morphism const& phi, Semigroup const& S) {
    return images(e, phi, S)[e.id];
  }

  bool is_phi_ramseyan(RExpr const& e, Morphism const& phi, Semigroup const& S) {
    auto const img = images(e, phi, S);
    for (ExprId id : reachable(e)) {
      auto const& n = e.pool->node(id);
      if (n.kind != ExprKind::star) {
        continue;
      }
      auto const& child = img[n.children[0]];
      auto const  count = std::count(child.begin(), child.end(), true);
      if (count != 1) {
        return false;
      }
      auto const f = static_cast<Element>(
          std::find(child.begin(), child.end(), true) - child.begin());
      if (!S.is_idempotent(f)) {
        return false;
      }
    }
    return true;
  }

  ExprStats expr_stats(RExpr const& e) {
    std::vector<std::size_t> height(e.id + 1, 0);
    ExprStats                out{0, 0, 0};
    for (ExprId id : reachable(e)) {
      auto const& n = e.pool->node(id);
      std::size_t h = 0;
      for (ExprId c : n.children) {
        h = std::max(h, height[c]);
      }
      switch (n.kind) {
        case ExprKind::empty:
          break;
        case ExprKind::sum:
          height[id] = h;
          break;
        default:
          height[id] = h + 1;
      }
      ++out.distinct_subexpressions;
      if (n.kind != ExprKind::sum) {
        ++out.distinct_non_union_rooted;
      }
    }
    out.weighted_height = height[e.id];
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matching
  ////////////////////////////////////////////////////////////////////////

  Matcher::Matcher(RExpr e) : _e(std::move(e)), _order(reachable(_e)) {
    _slot.assign(_e.id + 1, 0);
    for (std::size_t i = 0; i < _order.size(); ++i) {
      _slot[_order[i]] = i;
    }
    _cols.emplace_back(_order.size(), 0);  // column 0: no nonempty span
  }

  void Matcher::push(char c) {
    if (_word.size() >= 63) {
      throw Error(ErrorCode::too_large, "words are limited to 63 letters");
    }
    _word.push_back(c);
    std::size_t const          j = _word.size();
    std::vector<std::uint64_t> col(_order.size(), 0);
    for (std::size_t i = 0; i < _order.size(); ++i) {
      auto const&   n    = _e.pool->node(_order[i]);
      std::uint64_t bits = 0;
      switch (n.kind) {
        case ExprKind::empty:
          break;
        case ExprKind::atom:
          if (std::binary_search(n.letters.begin(), n.letters.end(), c)) {
            bits = std::uint64_t{1} << (j - 1);
          }
          break;
        case ExprKind::sum:
          for (ExprId ch : n.children) {
            bits |= col[_slot[ch]];
          }
          break;
        case ExprKind::concat: {
          std::uint64_t const right = col[_slot[n.children[1]]];
          std::size_t const   left  = _slot[n.children[0]];
          for (std::size_t m = 1; m < j; ++m) {
            if (right >> m & 1) {
              bits |= _cols[m][left];
            }
          }
          break;
        }
        case ExprKind::star: {
          std::uint64_t const last = col[_slot[n.children[0]]];
          bits                     = last;
          for (std::size_t m = 1; m < j; ++m) {
            if (last >> m & 1) {
              bits |= _cols[m][i];
            }
          }
          break;
        }
      }
      col[i] = bits;
    }
    _cols.push_back(std::move(col));
  }

  void Matcher::pop() {
    if (_word.empty()) {
      return;
    }
    _word.pop_back();
    _cols.pop_back();
  }

  bool Matcher::accepts() const {
    return !_word.empty() && (_cols.back()[_slot[_e.id]] & 1) != 0;
  }

  bool matches(RExpr const& e, std::string_view w) {
    if (w.empty()) {
      return false;
    }
    if (w.size() < 64) {
      Matcher m(e);
      for (char c : w) {
        m.push(c);
      }
      return m.accepts();
    }
    // span table for long words: in[id][i * (n + 1) + j] for w[i..j)
    auto const        order = reachable(e);
    std::size_t const n     = w.size();
    auto              at    = [n](std::size_t i, std::size_t j) {
      return i * (n + 1) + j;
    };
    std::vector<std::vector<char>> in(e.id + 1);
    for (ExprId id : order) {
      auto const&       node = e.pool->node(id);
      std::vector<char> t((n + 1) * (n + 1), 0);
      for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
          std::size_t const j = i + len;
          char              v = 0;
          switch (node.kind) {
            case ExprKind::empty:
              break;
            case ExprKind::atom:
              v = len == 1
                  && std::binary_search(node.letters.begin(),
                                        node.letters.end(), w[i]);
              break;
            case ExprKind::sum:
              for (ExprId c : node.children) {
                v = v || in[c][at(i, j)];
              }
              break;
            case ExprKind::concat:
              for (std::size_t m = i + 1; m < j && !v; ++m) {
                v = in[node.children[0]][at(i, m)]
                    && in[node.children[1]][at(m, j)];
              }
              break;
            case ExprKind::star:
              v = in[node.children[0]][at(i, j)];
              for (std::size_t m = i + 1; m < j && !v; ++m) {
                v = t[at(i, m)] && in[node.children[0]][at(m, j)];
              }
              break;
          }
          t[at(i, j)] = v;
        }
      }
      in[id] = std::move(t);
    }
    return in[e.id][at(0, n)] != 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // 0: anywhere, 1: operand of a product, 2: operand of ⁺
    int precedence(ExprNode const& n) {
      switch (n.kind) {
        case ExprKind::sum:
          return 0;
        case ExprKind::atom:
          return n.letters.size() > 1 ? 0 : 3;
        case ExprKind::concat:
          return 1;
        default:
          return 3;
      }
    }

    void print(ExprPool const& pool, ExprId id, int context, std::string& out) {
      auto const& n      = pool.node(id);
      bool const  parens = precedence(n) < context;
      if (parens) {
        out += '(';
      }
      switch (n.kind) {
        case ExprKind::empty:
          out += kEmptySet;
          break;
        case ExprKind::atom:
          for (std::size_t i = 0; i < n.letters.size(); ++i) {
            if (i > 0) {
              out += '+';
            }
            out += n.letters[i];
          }
          break;
        case ExprKind::sum:
          for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i > 0) {
              out += '+';
            }
            print(pool, n.children[i], 0, out);
          }
          break;
        case ExprKind::concat:
          print(pool, n.children[0], 1, out);
          print(pool, n.children[1], 1, out);
          break;
        case ExprKind::star:
          print(pool, n.children[0], 2, out);
          out += kPlusSign;
          break;
      }
      if (parens) {
        out += ')';
      }
    }

    std::size_t saturating_add(std::size_t a, std::size_t b) {
      return a > std::numeric_limits<std::size_t>::max() - b
                 ? std::numeric_limits<std::size_t>::max()
                 : a + b;
    }

  }  // namespace

  std::string to_string(RExpr const& e) {
    std::string out;
    print(*e.pool, e.id, 0, out);
    return out;
  }

  std::size_t printed_size(RExpr const& e) {
    // size[id][context]
    std::vector<std::array<std::size_t, 3>> size(e.id + 1);
    for (ExprId id : reachable(e)) {
      auto const& n = e.pool->node(id);
      std::size_t body = 0;
      switch (n.kind) {
        case ExprKind::empty:
          body = kEmptySet.size();
          break;
        case ExprKind::atom:
          body = 2 * n.letters.size() - 1;
          break;
        case ExprKind::sum:
          body = n.children.size() - 1;
          for (ExprId c : n.children) {
            body = saturating_add(body, size[c][0]);
          }
          break;
        case ExprKind::concat:
          body = saturating_add(size[n.children[0]][1], size[n.children[1]][1]);
          break;
        case ExprKind::star:
          body = saturating_add(size[n.children[0]][2], kPlusSign.size());
          break;
      }
      for (int context = 0; context < 3; ++context) {
        size[id][context]
            = precedence(n) < context ? saturating_add(body, 2) : body;
      }
    }
    return size[e.id][0];
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // the language minus the empty word, and whether the empty word was in it
    struct Parsed {
      ExprId nonempty;
      bool   nullable;
    };

    class ExprParser {
     public:
      ExprParser(std::string_view text, ExprPool& pool) : _text(text), _pool(pool) {}

      ExprId parse() {
        Parsed const p = parse_sum();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return p.nonempty;
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

      bool at_plus_sign() const {
        return _text.substr(_pos, kPlusSign.size()) == kPlusSign;
      }

      bool at_factor_start() {
        skip_space();
        if (_pos == _text.size() || at_plus_sign()) {
          return false;
        }
        char const c = _text[_pos];
        return c != '+' && c != ')' && c != '*';
      }

      Parsed parse_sum() {
        std::vector<ExprId> terms;
        bool                nullable = false;
        for (;;) {
          Parsed const t = parse_product();
          terms.push_back(t.nonempty);
          nullable = nullable || t.nullable;
          skip_space();
          if (_pos < _text.size() && _text[_pos] == '+') {
            ++_pos;
            continue;
          }
          break;
        }
        return {_pool.sum(std::move(terms)), nullable};
      }

      Parsed parse_product() {
        if (!at_factor_start()) {
          fail("expected an expression");
        }
        Parsed acc = parse_postfix();
        while (at_factor_start()) {
          Parsed const b = parse_postfix();
          // (A ∪ ε?)(B ∪ ε?) minus ε
          std::vector<ExprId> terms{_pool.concat(acc.nonempty, b.nonempty)};
          if (b.nullable) {
            terms.push_back(acc.nonempty);
          }
          if (acc.nullable) {
            terms.push_back(b.nonempty);
          }
          acc = {_pool.sum(std::move(terms)), acc.nullable && b.nullable};
        }
        return acc;
      }

      Parsed parse_postfix() {
        Parsed p = parse_atom();
        for (;;) {
          skip_space();
          if (_pos < _text.size() && _text[_pos] == '*') {
            ++_pos;
            p = {_pool.star(p.nonempty), true};
          } else if (at_plus_sign()) {
            _pos += kPlusSign.size();
            p = {_pool.star(p.nonempty), p.nullable};
          } else {
            return p;
          }
        }
      }

      Parsed parse_atom() {
        skip_space();
        char const c = _text[_pos];
        if (c == '(') {
          ++_pos;
          Parsed const p = parse_sum();
          skip_space();
          if (_pos == _text.size() || _text[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return p;
        }
        if (_text.substr(_pos, kEmptySet.size()) == kEmptySet) {
          _pos += kEmptySet.size();
          return {ExprPool::empty(), false};
        }
        ++_pos;
        return {_pool.atom({c}), false};
      }

      std::string_view _text;
      ExprPool&        _pool;
      std::size_t      _pos = 0;
    };

  }  // namespace

  RExpr parse_expr(std::string_view text) {
    auto         pool = std::make_shared<ExprPool>();
    ExprId const id   = ExprParser(text, *pool).parse();
    return RExpr{pool, id};
  }

}  // namespace ffact
