#include "ffact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ffact::oracle {

  Element sigma_fold(Semigroup const&         S,
                     std::span<Element const> gaps,
                     std::size_t              x,
                     std::size_t              y) {
    if (!(x < y && y <= gaps.size())) {
      throw Error(ErrorCode::invalid_positions, "sigma_fold needs x < y");
    }
    Element v = gaps[x];
    for (std::size_t i = x + 1; i < y; ++i) {
      v = S.product(v, gaps[i]);
    }
    return v;
  }

  namespace {

    bool neighbours(std::span<std::size_t const> levels, std::size_t x, std::size_t y) {
      if (x > y) {
        std::swap(x, y);
      }
      if (levels[x] != levels[y]) {
        return false;
      }
      for (std::size_t z = x + 1; z < y; ++z) {
        if (levels[z] < levels[x]) {
          return false;
        }
      }
      return true;
    }

    struct Span {
      std::size_t x, y;
    };

    // all x < y that are neighbours, grouped with their class representative
    std::vector<Span> neighbour_spans(std::span<std::size_t const> levels) {
      std::vector<Span> out;
      for (std::size_t x = 0; x < levels.size(); ++x) {
        for (std::size_t y = x + 1; y < levels.size(); ++y) {
          if (neighbours(levels, x, y)) {
            out.push_back({x, y});
          }
        }
      }
      return out;
    }

    void check_shapes(std::span<Element const>     gaps,
                      std::span<std::size_t const> levels) {
      if (levels.size() != gaps.size() + 1) {
        throw Error(ErrorCode::invalid_positions, "levels and gaps disagree");
      }
    }

  }  // namespace

  bool ramseyan_bruteforce(Semigroup const&             S,
                           std::span<Element const>     gaps,
                           std::span<std::size_t const> levels) {
    check_shapes(gaps, levels);
    auto const spans = neighbour_spans(levels);
    for (auto const& p : spans) {
      Element const v = sigma_fold(S, gaps, p.x, p.y);
      if (S.product(v, v) != v) {
        return false;
      }
      for (auto const& q : spans) {
        if ((p.x == q.x || neighbours(levels, p.x, q.x))
            && sigma_fold(S, gaps, q.x, q.y) != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool forward_ramseyan_bruteforce(Semigroup const&             S,
                                   std::span<Element const>     gaps,
                                   std::span<std::size_t const> levels) {
    check_shapes(gaps, levels);
    auto const spans = neighbour_spans(levels);
    for (auto const& p : spans) {
      Element const v = sigma_fold(S, gaps, p.x, p.y);
      for (auto const& q : spans) {
        if ((p.x == q.x || neighbours(levels, p.x, q.x))
            && S.product(v, sigma_fold(S, gaps, q.x, q.y)) != v) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    Partition classes_of(std::size_t n, std::function<bool(Element, Element)> equiv) {
      Partition p;
      p.class_of.assign(n, n);
      for (Element a = 0; a < n; ++a) {
        if (p.class_of[a] != n) {
          continue;
        }
        std::vector<Element> cls;
        for (Element b = a; b < n; ++b) {
          if (equiv(a, b)) {
            p.class_of[b] = p.classes.size();
            cls.push_back(b);
          }
        }
        p.classes.push_back(std::move(cls));
      }
      return p;
    }

  }  // namespace

  GreenData green_bruteforce(Semigroup const& S) {
    std::size_t const n = S.size();
    auto left_ideal = [&](Element a, Element b) {  // a ∈ S¹b
      if (a == b) {
        return true;
      }
      for (Element c = 0; c < n; ++c) {
        if (S.product(c, b) == a) {
          return true;
        }
      }
      return false;
    };
    auto right_ideal = [&](Element a, Element b) {  // a ∈ bS¹
      if (a == b) {
        return true;
      }
      for (Element c = 0; c < n; ++c) {
        if (S.product(b, c) == a) {
          return true;
        }
      }
      return false;
    };
    auto two_sided = [&](Element a, Element b) {  // a ∈ S¹bS¹
      if (left_ideal(a, b) || right_ideal(a, b)) {
        return true;
      }
      for (Element c = 0; c < n; ++c) {
        for (Element d = 0; d < n; ++d) {
          if (S.product(S.product(c, b), d) == a) {
            return true;
          }
        }
      }
      return false;
    };

    GreenData G;
    G.leq_L = Relation(n);
    G.leq_R = Relation(n);
    G.leq_J = Relation(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (left_ideal(a, b)) {
          G.leq_L.set(a, b);
        }
        if (right_ideal(a, b)) {
          G.leq_R.set(a, b);
        }
        if (two_sided(a, b)) {
          G.leq_J.set(a, b);
        }
      }
    }
    auto L = [&](Element a, Element b) { return G.leq_L(a, b) && G.leq_L(b, a); };
    auto R = [&](Element a, Element b) { return G.leq_R(a, b) && G.leq_R(b, a); };
    auto J = [&](Element a, Element b) { return G.leq_J(a, b) && G.leq_J(b, a); };
    G.L = classes_of(n, L);
    G.R = classes_of(n, R);
    G.H = classes_of(n, [&](Element a, Element b) { return L(a, b) && R(a, b); });
    G.D = classes_of(n, J);

    for (Element e = 0; e < n; ++e) {
      if (S.product(e, e) == e) {
        G.idempotents.push_back(e);
      }
    }
    for (auto const& cls : G.D.classes) {
      G.regular_D.push_back(std::any_of(cls.begin(), cls.end(), [&](Element a) {
        return S.product(a, a) == a;
      }));
    }
    for (std::size_t h = 0; h < G.H.count(); ++h) {
      bool closed = true;
      for (Element a : G.H.classes[h]) {
        for (Element b : G.H.classes[h]) {
          closed = closed && G.H.class_of[S.product(a, b)] == h;
        }
      }
      G.group_H.push_back(closed);
    }
    return G;
  }

  std::vector<Semigroup> enumerate_semigroups(std::size_t n) {
    if (n == 0 || n > 3) {
      throw Error(ErrorCode::too_large, "enumeration is limited to 1 <= n <= 3");
    }
    std::size_t const    cells = n * n;
    std::vector<Element> table(cells, 0);
    std::vector<Semigroup> out;
    for (;;) {
      bool associative = true;
      for (Element a = 0; a < n && associative; ++a) {
        for (Element b = 0; b < n && associative; ++b) {
          for (Element c = 0; c < n && associative; ++c) {
            associative = table[table[a * n + b] * n + c]
                          == table[a * n + table[b * n + c]];
          }
        }
      }
      if (associative) {
        std::vector<std::vector<Element>> rows(n);
        for (Element a = 0; a < n; ++a) {
          rows[a].assign(table.begin() + a * n, table.begin() + (a + 1) * n);
        }
        out.push_back(make_semigroup(rows));
      }
      // next table in lexicographic order, last cell fastest
      std::size_t i = cells;
      while (i > 0 && table[i - 1] == n - 1) {
        table[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++table[i - 1];
    }
    return out;
  }

  std::vector<std::string> words_upto(std::vector<char> const& alphabet,
                                      std::size_t              maxlen) {
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= maxlen; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  namespace {

    // the last position of a nonempty prefix of levels keeps the prefix
    // ramseyan, given that the shorter prefix is
    bool last_is_consistent(Semigroup const&             S,
                            std::span<Element const>     gaps,
                            std::span<std::size_t const> levels) {
      std::size_t const y = levels.size() - 1;
      std::size_t const k = levels[y];
      std::vector<std::size_t> members;  // earlier members of y's class
      for (std::size_t x = y; x-- > 0;) {
        if (levels[x] < k) {
          break;
        }
        if (levels[x] == k) {
          members.push_back(x);
        }
      }
      if (members.empty()) {
        return true;
      }
      std::optional<Element> e;
      if (members.size() >= 2) {
        e = sigma_fold(S, gaps, members[1], members[0]);
      }
      for (std::size_t x : members) {
        Element const v = sigma_fold(S, gaps, x, y);
        if (S.product(v, v) != v || (e && v != *e)) {
          return false;
        }
        e = v;
      }
      return true;
    }

    bool search(Semigroup const&          S,
                std::span<Element const>  gaps,
                std::size_t              N,
                std::vector<std::size_t>& levels) {
      if (levels.size() == gaps.size() + 1) {
        return true;
      }
      for (std::size_t k = 1; k <= N; ++k) {
        levels.push_back(k);
        if (last_is_consistent(S, gaps, levels) && search(S, gaps, N, levels)) {
          return true;
        }
        levels.pop_back();
      }
      return false;
    }

  }  // namespace

  std::optional<std::size_t> min_ramseyan_height(AdditiveLabelling const& sigma,
                                                 std::size_t              cap) {
    if (sigma.size() > 10 || cap > 4) {
      throw Error(ErrorCode::too_large,
                  "the search is limited to 10 positions and height 4");
    }
    for (std::size_t N = 1; N <= cap; ++N) {
      std::vector<std::size_t> levels;
      if (search(sigma.semigroup(), sigma.gaps(), N, levels)) {
        return N;
      }
    }
    return std::nullopt;
  }

  namespace {

    struct DeterministicGame {
      Semigroup const&         S;
      std::size_t              height;
      std::size_t              max_gaps;
      std::vector<Element>     gaps;
      std::vector<std::size_t> levels;

      // every continuation of the current path admits a level choice
      bool holds() {
        if (gaps.size() == max_gaps) {
          return true;
        }
        for (Element g = 0; g < S.size(); ++g) {
          gaps.push_back(g);
          bool found = false;
          for (std::size_t k = 1; k <= height && !found; ++k) {
            levels.push_back(k);
            found = last_is_consistent(S, gaps, levels) && holds();
            levels.pop_back();
          }
          gaps.pop_back();
          if (!found) {
            return false;
          }
        }
        return true;
      }
    };

  }  // namespace

  bool deterministic_ramseyan_exists(Semigroup const& S,
                                     std::size_t      height,
                                     std::size_t      max_gaps) {
    double const prefixes = std::pow(static_cast<double>(S.size() * height),
                                     static_cast<double>(max_gaps));
    if (prefixes > double(1 << 24)) {
      throw Error(ErrorCode::too_large, "the deterministic search is too large");
    }
    DeterministicGame game{S, height, max_gaps, {}, {}};
    for (std::size_t k = 1; k <= height; ++k) {
      game.levels = {k};
      if (game.holds()) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::string> language_upto(RExpr const&             e,
                                         std::vector<char> const& alphabet,
                                         std::size_t              maxlen) {
    if (maxlen > 10) {
      throw Error(ErrorCode::too_large, "enumeration is limited to length 10");
    }
    std::vector<std::string> out;
    Matcher                  m(e);
    std::string              w;
    std::function<void()>    dfs = [&] {
      if (w.size() == maxlen) {
        return;
      }
      for (char c : alphabet) {
        w.push_back(c);
        m.push(c);
        if (m.accepts()) {
          out.push_back(w);
        }
        dfs();
        m.pop();
        w.pop_back();
      }
    };
    dfs();
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    return out;
  }

  CompactionReport verify_compaction(AdditiveLabelling const& sigma, Variant v) {
    auto const&       S     = sigma.semigroup();
    auto const        c     = compact(sigma, v);
    auto const        gaps  = sigma.gaps();
    std::size_t const bound = v == Variant::deterministic
                                  ? det_width_bound(S.size())
                                  : complete_width_bound(S.size());
    CompactionReport report{0, 0, c.bit_width(), bound, std::nullopt};
    for (std::size_t x = 0; x < sigma.size(); ++x) {
      for (std::size_t y = x + 1; y < sigma.size(); ++y) {
        Element const expected = sigma_fold(S, gaps, x, y);
        Element const decoded  = decode(c, x, y);
        ++report.pairs;
        if (expected != decoded) {
          ++report.mismatches;
          if (!report.first_mismatch) {
            report.first_mismatch = Mismatch{x, y, expected, decoded};
          }
        }
      }
    }
    return report;
  }

}  // namespace ffact::oracle
