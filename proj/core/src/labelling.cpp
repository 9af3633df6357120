#include "ffact/labelling.hpp"

#include <algorithm>
#include <string>

namespace ffact {

  AdditiveLabelling::AdditiveLabelling(Semigroup const& S, std::vector<Element> gaps)
      : _S(&S), _gaps(std::move(gaps)) {
    for (Element g : _gaps) {
      if (!S.contains(g)) {
        throw Error(ErrorCode::invalid_element,
                    "labelling value " + std::to_string(g) + " is not an element");
      }
    }
  }

  Element AdditiveLabelling::sigma(std::size_t x, std::size_t y) const {
    if (!(x < y && y < size())) {
      throw Error(ErrorCode::invalid_positions,
                  "sigma(" + std::to_string(x) + ", " + std::to_string(y)
                      + ") needs x < y < " + std::to_string(size()));
    }
    Element v = _gaps[x];
    for (std::size_t i = x + 1; i < y; ++i) {
      v = _S->product(v, _gaps[i]);
    }
    return v;
  }

  AdditiveLabelling
  AdditiveLabelling::restrict(std::span<std::size_t const> positions) const {
    std::vector<Element> gaps;
    if (!positions.empty()) {
      gaps.reserve(positions.size() - 1);
    }
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
      gaps.push_back(sigma(positions[i], positions[i + 1]));
    }
    return AdditiveLabelling(*_S, std::move(gaps));
  }

  AdditiveLabelling AdditiveLabelling::prefix(std::size_t count) const {
    if (count == 0 || count > size()) {
      throw Error(ErrorCode::invalid_positions, "prefix length out of range");
    }
    return AdditiveLabelling(
        *_S, std::vector<Element>(_gaps.begin(), _gaps.begin() + (count - 1)));
  }

  AdditiveLabelling AdditiveLabelling::prepend(Element a) const {
    std::vector<Element> gaps;
    gaps.reserve(_gaps.size() + 1);
    gaps.push_back(a);
    gaps.insert(gaps.end(), _gaps.begin(), _gaps.end());
    return AdditiveLabelling(*_S, std::move(gaps));
  }

  AdditiveLabelling labelling_from_word(std::string_view w,
                                        Morphism const&  phi,
                                        Semigroup const& S,
                                        Cuts             mode) {
    if (w.empty()) {
      throw Error(ErrorCode::word_too_short, "the word must be nonempty");
    }
    if (mode == Cuts::interior && w.size() < 2) {
      throw Error(ErrorCode::word_too_short,
                  "interior cuts need a word of length at least 2");
    }
    std::vector<Element> gaps;
    for (char c : w) {
      gaps.push_back(phi.image(c));
    }
    if (mode == Cuts::interior) {
      // cuts 1..|w|-1 are separated by the letters w[1..|w|-2]
      gaps = std::vector<Element>(gaps.begin() + 1, gaps.end() - 1);
    }
    return AdditiveLabelling(S, std::move(gaps));
  }

  std::size_t Split::height() const noexcept {
    return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  }

  std::vector<std::vector<std::size_t>> k_neighbour_classes(Split const& s,
                                                            std::size_t  k) {
    std::vector<std::vector<std::size_t>> out;
    bool                                  open = false;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (s.levels[x] < k) {
        open = false;
      } else if (s.levels[x] == k) {
        if (!open) {
          out.emplace_back();
          open = true;
        }
        out.back().push_back(x);
      }
    }
    return out;
  }

  namespace {
    void check_sizes(Split const& s, AdditiveLabelling const& sigma) {
      if (s.size() != sigma.size()) {
        throw Error(ErrorCode::invalid_positions,
                    "split has " + std::to_string(s.size())
                        + " positions, labelling has "
                        + std::to_string(sigma.size()));
      }
    }

    // σ between consecutive members of a class
    std::vector<Element> consecutive_values(AdditiveLabelling const&        sigma,
                                            std::vector<std::size_t> const& cls) {
      std::vector<Element> out;
      for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        out.push_back(sigma.sigma(cls[i], cls[i + 1]));
      }
      return out;
    }
  }  // namespace

  SplitCheck is_ramseyan(Split const& s, AdditiveLabelling const& sigma) {
    check_sizes(s, sigma);
    auto const& S = sigma.semigroup();
    for (std::size_t k = 1; k <= s.height(); ++k) {
      for (auto const& cls : k_neighbour_classes(s, k)) {
        if (cls.size() < 2) {
          continue;
        }
        // by additivity, equal idempotent consecutive values give the same
        // idempotent on every pair
        auto const    values = consecutive_values(sigma, cls);
        Element const e      = values[0];
        if (!S.is_idempotent(e)) {
          return {false, SplitWitness{k, cls[0], cls[1], cls[0], cls[1]}};
        }
        for (std::size_t i = 1; i < values.size(); ++i) {
          if (values[i] != e) {
            return {false,
                    SplitWitness{k, cls[0], cls[1], cls[i], cls[i + 1]}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  SplitCheck is_forward_ramseyan(Split const& s, AdditiveLabelling const& sigma) {
    check_sizes(s, sigma);
    auto const& S = sigma.semigroup();
    struct Pair {
      std::size_t x, y;
    };
    for (std::size_t k = 1; k <= s.height(); ++k) {
      for (auto const& cls : k_neighbour_classes(s, k)) {
        if (cls.size() < 2) {
          continue;
        }
        auto const values = consecutive_values(sigma, cls);
        // first pair realising each value
        std::vector<std::optional<Pair>> seen(S.size());
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
          Element v = values[i];
          for (std::size_t j = i + 1; j < cls.size(); ++j) {
            if (j > i + 1) {
              v = S.product(v, values[j - 1]);
            }
            if (!seen[v]) {
              seen[v] = Pair{cls[i], cls[j]};
            }
          }
        }
        for (Element u = 0; u < S.size(); ++u) {
          for (Element v = 0; v < S.size(); ++v) {
            if (seen[u] && seen[v] && S.product(u, v) != u) {
              return {false,
                      SplitWitness{k, seen[u]->x, seen[u]->y, seen[v]->x,
                                   seen[v]->y}};
            }
          }
        }
      }
    }
    return {true, std::nullopt};
  }

}  // namespace ffact
