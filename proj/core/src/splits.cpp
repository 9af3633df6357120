#include "ffact/splits.hpp"

#include <algorithm>
#include <string>

#include "internal.hpp"

namespace ffact {

  namespace detail {

    std::vector<bool> values_of(Semigroup const& S, std::span<Element const> gaps) {
      std::size_t const n = S.size();
      std::vector<bool> all(n, false);
      std::vector<bool> ending(n, false);  // σ(x, y) for the current y
      std::vector<bool> next(n, false);
      for (Element g : gaps) {
        std::fill(next.begin(), next.end(), false);
        next[g] = true;
        for (Element t = 0; t < n; ++t) {
          if (ending[t]) {
            next[S.product(t, g)] = true;
          }
        }
        ending.swap(next);
        for (Element t = 0; t < n; ++t) {
          if (ending[t]) {
            all[t] = true;
          }
        }
      }
      return all;
    }

    GroupData group_data(Semigroup const& S, GreenData const& G, std::size_t h) {
      auto const& elems = G.H.classes[h];
      GroupData   out{G.group_identity(h),
                    std::vector<std::size_t>(S.size(), 0),
                    std::vector<Element>(S.size(), 0)};
      for (std::size_t i = 0; i < elems.size(); ++i) {
        out.rank[elems[i]] = i + 1;
      }
      for (Element a : elems) {
        for (Element b : elems) {
          if (S.product(a, b) == out.identity) {
            out.inverse[a] = b;
          }
        }
      }
      return out;
    }

    std::optional<std::size_t> minimal_d_class(GreenData const&         G,
                                               std::vector<bool> const& E) {
      for (std::size_t d = 0; d < E.size(); ++d) {
        if (!E[d]) {
          continue;
        }
        bool minimal = true;
        for (std::size_t d2 = 0; d2 < E.size() && minimal; ++d2) {
          if (d2 != d && E[d2] && G.d_leq(d2, d)) {
            minimal = false;
          }
        }
        if (minimal) {
          return d;
        }
      }
      return std::nullopt;
    }

    Closure min_closure(Semigroup const&         S,
                        GreenData const&         G,
                        std::span<Element const> gaps,
                        std::size_t              d) {
      Closure out{{0}, {}};
      Element p     = 0;
      bool    fresh = true;
      for (std::size_t y = 1; y <= gaps.size(); ++y) {
        p     = fresh ? gaps[y - 1] : S.product(p, gaps[y - 1]);
        fresh = false;
        if (G.D.class_of[p] == d) {
          out.members.push_back(y);
          out.gaps.push_back(p);
          fresh = true;
        }
      }
      return out;
    }

  }  // namespace detail

  namespace {

    std::size_t h_class_size(GreenData const& G, std::size_t d) {
      return G.H.classes[G.h_classes_in_d(d).front()].size();
    }

    std::size_t d_class_size(GreenData const& G, std::size_t d) {
      return G.D.classes[d].size();
    }

    std::vector<std::size_t> dclosed(Semigroup const&         S,
                                     GreenData const&         G,
                                     std::span<Element const> gaps) {
      std::vector<std::size_t> out(gaps.size(), 0);
      if (gaps.empty()) {
        return out;
      }
      std::vector<bool> const values = detail::values_of(S, gaps);
      std::vector<bool>       present(G.D.count(), false);
      for (Element a = 0; a < S.size(); ++a) {
        if (values[a]) {
          present[G.D.class_of[a]] = true;
        }
      }
      std::size_t const d     = *detail::minimal_d_class(G, present);
      auto const        gamma = detail::min_closure(S, G, gaps, d);

      std::size_t shift;
      if (G.regular_D[d]) {
        Split const s
            = split_regular_d(AdditiveLabelling(S, gamma.gaps), G);
        for (std::size_t i = 1; i < gamma.members.size(); ++i) {
          out[gamma.members[i] - 1] = s.levels[i];
        }
        shift = d_class_size(G, d);
      } else {
        // no product of two elements of a non-regular D-class stays in it
        for (std::size_t i = 1; i < gamma.members.size(); ++i) {
          out[gamma.members[i] - 1] = 1;
        }
        shift = 1;
      }

      std::size_t const m = gaps.size() + 1;
      for (std::size_t i = 0; i < gamma.members.size(); ++i) {
        std::size_t const lo = gamma.members[i];
        std::size_t const hi
            = i + 1 < gamma.members.size() ? gamma.members[i + 1] - 1 : m - 1;
        if (hi == lo) {
          continue;
        }
        auto const sub = dclosed(S, G, gaps.subspan(lo, hi - lo));
        for (std::size_t j = 0; j < sub.size(); ++j) {
          out[lo + j] = sub[j] + shift;
        }
      }
      return out;
    }

  }  // namespace

  Split split_group_h(AdditiveLabelling const& sigma,
                      GreenData const&         G,
                      std::size_t              anchor) {
    std::size_t const m = sigma.size();
    if (anchor >= m) {
      throw Error(ErrorCode::invalid_positions,
                  "anchor " + std::to_string(anchor) + " is not a position");
    }
    auto const  gaps = sigma.gaps();
    auto const& S    = sigma.semigroup();
    if (gaps.empty()) {
      return Split{{1}};
    }
    std::size_t const h = G.H.class_of[gaps[0]];
    for (Element g : gaps) {
      if (G.H.class_of[g] != h || !G.group_H[h]) {
        throw Error(ErrorCode::not_in_group_h_class,
                    "value " + std::to_string(g)
                        + " is not in the group H-class of the first value");
      }
    }
    auto const grp = detail::group_data(S, G, h);

    std::vector<std::size_t> levels(m);
    levels[anchor] = grp.rank[grp.identity];
    Element v      = grp.identity;
    for (std::size_t x = anchor + 1; x < m; ++x) {
      v         = S.product(v, gaps[x - 1]);
      levels[x] = grp.rank[v];
    }
    v = grp.identity;
    for (std::size_t x = anchor; x-- > 0;) {
      v         = S.product(gaps[x], v);
      levels[x] = grp.rank[grp.inverse[v]];
    }
    return Split{std::move(levels)};
  }

  Split split_regular_d(AdditiveLabelling const& sigma, GreenData const& G) {
    std::size_t const m    = sigma.size();
    auto const        gaps = sigma.gaps();
    auto const&       S    = sigma.semigroup();
    if (gaps.empty()) {
      return Split{{1}};
    }
    std::size_t const d = G.D.class_of[gaps[0]];
    if (!G.regular_D[d]) {
      throw Error(ErrorCode::not_regular_d_class,
                  "the D-class of " + std::to_string(gaps[0]) + " is not regular");
    }
    auto const values = detail::values_of(S, gaps);
    for (Element a = 0; a < S.size(); ++a) {
      if (values[a] && G.D.class_of[a] != d) {
        throw Error(ErrorCode::not_regular_d_class,
                    "value " + std::to_string(a) + " leaves the D-class");
      }
    }

    auto const        hs = G.h_classes_in_d(d);
    std::size_t const N  = h_class_size(G, d);
    auto l_of = [&](std::size_t h) { return G.L.class_of[G.H.classes[h][0]]; };
    auto r_of = [&](std::size_t h) { return G.R.class_of[G.H.classes[h][0]]; };

    // h(x) = l(x) ∩ r(x), as an index into hs
    std::vector<std::size_t> k_of(m);
    for (std::size_t x = 0; x < m; ++x) {
      std::optional<std::size_t> l, r;
      if (x > 0) {
        l = G.L.class_of[gaps[x - 1]];
      }
      if (x + 1 < m) {
        r = G.R.class_of[gaps[x]];
      }
      for (std::size_t k = 0; k < hs.size(); ++k) {
        std::size_t const h = hs[k];
        if ((!l || l_of(h) == *l) && (!r || r_of(h) == *r) && G.group_H[h]) {
          // hs is ordered by least element, so the first match is chosen
          k_of[x] = k;
          break;
        }
      }
    }

    std::vector<std::vector<std::size_t>> beta(hs.size());
    for (std::size_t x = 0; x < m; ++x) {
      beta[k_of[x]].push_back(x);
    }
    std::vector<std::size_t> levels(m);
    for (std::size_t k = 0; k < hs.size(); ++k) {
      if (beta[k].empty()) {
        continue;
      }
      Split const s = split_group_h(sigma.restrict(beta[k]), G, 0);
      for (std::size_t i = 0; i < beta[k].size(); ++i) {
        levels[beta[k][i]] = k * N + s.levels[i];
      }
    }
    return Split{std::move(levels)};
  }

  std::vector<bool> d_classes_of_values(AdditiveLabelling const& sigma,
                                        GreenData const&         G) {
    auto const        values = detail::values_of(sigma.semigroup(), sigma.gaps());
    std::vector<bool> out(G.D.count(), false);
    for (Element a = 0; a < values.size(); ++a) {
      if (values[a]) {
        out[G.D.class_of[a]] = true;
      }
    }
    return out;
  }

  Split split_dclosed(AdditiveLabelling const&    sigma,
                      GreenData const&            G,
                      std::vector<Element> const& E) {
    auto const&       S = sigma.semigroup();
    std::vector<bool> in_E(S.size(), false);
    for (Element a : E) {
      if (!S.contains(a)) {
        throw Error(ErrorCode::element_out_of_range,
                    std::to_string(a) + " is not an element");
      }
      in_E[a] = true;
    }
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b : G.D.classes[G.D.class_of[a]]) {
        if (in_E[a] != in_E[b]) {
          throw Error(ErrorCode::not_d_closed,
                      "E contains one of " + std::to_string(a) + ", "
                          + std::to_string(b) + " but not the other");
        }
      }
    }
    auto const values = detail::values_of(S, sigma.gaps());
    for (Element a = 0; a < S.size(); ++a) {
      if (values[a] && !in_E[a]) {
        throw Error(ErrorCode::not_d_closed,
                    "the value " + std::to_string(a) + " is not in E");
      }
    }
    return Split{dclosed(S, G, sigma.gaps())};
  }

  Split ramseyan_split(AdditiveLabelling const& sigma, GreenData const& G) {
    auto const prepended = sigma.prepend(0);
    return Split{dclosed(sigma.semigroup(), G, prepended.gaps())};
  }

  Split ramseyan_split(AdditiveLabelling const& sigma) {
    return ramseyan_split(sigma, green(sigma.semigroup()));
  }

}  // namespace ffact
