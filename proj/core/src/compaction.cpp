#include "ffact/compaction.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "ffact/det_splits.hpp"
#include "ffact/splits.hpp"

namespace ffact {

  std::string_view to_string(Variant v) noexcept {
    return v == Variant::deterministic ? "det" : "complete";
  }

  std::size_t field_width(std::size_t n) noexcept {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < n) {
      ++w;
    }
    return w;
  }

  std::size_t det_width_bound(std::size_t n) noexcept {
    return static_cast<std::size_t>(
        std::ceil((2.0 * n + 1) * std::log2(static_cast<double>(n))));
  }

  std::size_t complete_width_bound(std::size_t n) noexcept {
    return static_cast<std::size_t>(
        std::ceil((6.0 * n + 2) * std::log2(static_cast<double>(n))));
  }

  namespace {

    std::size_t field_count(Variant v, std::size_t n) {
      return v == Variant::deterministic ? n + 1 : 2 * n + 1;
    }

    void put(std::vector<bool>& bits, std::size_t i, std::size_t w, std::size_t v) {
      for (std::size_t b = 0; b < w; ++b) {
        bits[i * w + b] = (v >> b & 1) != 0;
      }
    }

  }  // namespace

  CompactedWord::CompactedWord(Variant                        variant,
                               Semigroup                      S,
                               std::vector<std::vector<bool>> bits)
      : _variant(variant),
        _S(std::move(S)),
        _field_width(::ffact::field_width(_S.size())),
        _bit_width(field_count(variant, _S.size()) * _field_width),
        _bits(std::move(bits)) {
    if (_bits.empty()) {
      throw Error(ErrorCode::parse_error, "a compacted word has a position");
    }
    for (std::size_t x = 0; x < _bits.size(); ++x) {
      if (_bits[x].size() != _bit_width) {
        throw Error(ErrorCode::parse_error,
                    "position " + std::to_string(x) + " has "
                        + std::to_string(_bits[x].size()) + " bits, expected "
                        + std::to_string(_bit_width));
      }
      if (field(x, 0) >= _S.size()) {
        throw Error(ErrorCode::parse_error,
                    "position " + std::to_string(x) + " has a level above |S|");
      }
      for (std::size_t i = 1; i < field_count(_variant, _S.size()); ++i) {
        if (field(x, i) >= _S.size()) {
          throw Error(ErrorCode::parse_error,
                      "position " + std::to_string(x) + " holds a non-element");
        }
      }
    }
  }

  std::size_t CompactedWord::field(std::size_t x, std::size_t i) const {
    auto const& bits = _bits.at(x);
    std::size_t v    = 0;
    for (std::size_t b = 0; b < _field_width; ++b) {
      if (bits[i * _field_width + b]) {
        v |= std::size_t{1} << b;
      }
    }
    return v;
  }

  Record CompactedWord::record(std::size_t x) const {
    std::size_t const n = _S.size();
    Record            r{field(x, 0) + 1, {}, {}};
    for (std::size_t k = 1; k <= n; ++k) {
      r.left.push_back(static_cast<Element>(field(x, k)));
    }
    if (_variant == Variant::complete) {
      for (std::size_t k = 1; k <= n; ++k) {
        r.right.push_back(static_cast<Element>(field(x, n + k)));
      }
    }
    return r;
  }

  namespace {

    // l_k(x) for all x, k (0-based k), with filler 0
    std::vector<std::vector<Element>> left_summaries(AdditiveLabelling const& sigma,
                                                     Split const&             s) {
      auto const&                         S    = sigma.semigroup();
      auto const                          gaps = sigma.gaps();
      std::size_t const                   n    = S.size();
      std::vector<std::optional<Element>> acc(n);  // σ(last level-k, x)
      std::vector<std::vector<Element>>   out(sigma.size());
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        for (std::size_t k = 0; k < n; ++k) {
          out[x].push_back(acc[k].value_or(0));
        }
        if (x + 1 == sigma.size()) {
          break;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (acc[k]) {
            acc[k] = S.product(*acc[k], gaps[x]);
          }
        }
        acc[s.levels[x] - 1] = gaps[x];
      }
      return out;
    }

    // r_k(x) for all x, k (0-based k), with filler 0
    std::vector<std::vector<Element>> right_summaries(AdditiveLabelling const& sigma,
                                                      Split const&             s) {
      auto const&                         S    = sigma.semigroup();
      auto const                          gaps = sigma.gaps();
      std::size_t const                   n    = S.size();
      std::vector<std::optional<Element>> acc(n);  // σ(x, next level-k)
      std::vector<std::vector<Element>>   out(sigma.size());
      for (std::size_t x = sigma.size(); x-- > 0;) {
        for (std::size_t k = 0; k < n; ++k) {
          out[x].push_back(acc[k].value_or(0));
        }
        if (x == 0) {
          break;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (acc[k]) {
            acc[k] = S.product(gaps[x - 1], *acc[k]);
          }
        }
        acc[s.levels[x] - 1] = gaps[x - 1];
      }
      return out;
    }

    CompactedWord pack(AdditiveLabelling const& sigma, Split const& s, Variant v) {
      auto const&       S = sigma.semigroup();
      std::size_t const n = S.size();
      std::size_t const w = field_width(n);
      auto const        l = left_summaries(sigma, s);
      std::vector<std::vector<Element>> r;
      if (v == Variant::complete) {
        r = right_summaries(sigma, s);
      }
      std::vector<std::vector<bool>> bits;
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        std::vector<bool> b(field_count(v, n) * w, false);
        std::size_t const level = s.levels[x];
        put(b, 0, w, level - 1);
        for (std::size_t k = 1; k <= n; ++k) {
          bool const used = v == Variant::deterministic || k <= level;
          put(b, k, w, used ? l[x][k - 1] : 0);
          if (v == Variant::complete) {
            put(b, n + k, w, used ? r[x][k - 1] : 0);
          }
        }
        bits.push_back(std::move(b));
      }
      return CompactedWord(v, S, std::move(bits));
    }

    void check_pair(CompactedWord const& c, std::size_t x, std::size_t y) {
      if (!(x < y && y < c.size())) {
        throw Error(ErrorCode::invalid_positions,
                    "decoding needs x < y < " + std::to_string(c.size()));
      }
    }

    struct DetDecoder {
      CompactedWord const&     c;
      Semigroup const&         monoid;
      Element                  one;
      std::vector<std::size_t> level;

      Element l(std::size_t n, std::size_t x) const {
        return static_cast<Element>(c.field(x, n));
      }

      // σ(x, y) for x <= y when every level in [x, y) is at least n
      Element labelling(std::size_t n, std::size_t x, std::size_t y) const {
        if (n == c.semigroup().size() + 1) {
          return one;
        }
        std::optional<std::size_t> z0, z1;
        for (std::size_t z = x; z < y && !z1; ++z) {
          if (level[z] == n) {
            (z0 ? z1 : z0) = z;
          }
        }
        if (!z0) {
          return labelling(n + 1, x, y);
        }
        Element const head = labelling(n + 1, x, *z0);
        if (!z1) {
          return monoid.product(head, l(n, y));
        }
        return monoid.product(monoid.product(head, l(n, *z1)), l(n, y));
      }
    };

    struct CompleteDecoder {
      CompactedWord const&     c;
      std::vector<std::size_t> level;

      Element l(std::size_t k, std::size_t x) const {
        return static_cast<Element>(c.field(x, k));
      }

      Element r(std::size_t k, std::size_t x) const {
        return static_cast<Element>(c.field(x, c.semigroup().size() + k));
      }

      Element asc(std::size_t x, std::size_t y) const {
        std::size_t const k = level[x];
        for (std::size_t z = y - 1; z > x; --z) {
          if (level[z] == k) {
            return c.semigroup().product(l(k, z), l(k, y));
          }
        }
        return l(k, y);
      }

      Element desc(std::size_t x, std::size_t y) const {
        std::size_t const k = level[y];
        for (std::size_t z = x + 1; z < y; ++z) {
          if (level[z] == k) {
            return c.semigroup().product(r(k, x), r(k, z));
          }
        }
        return r(k, x);
      }

      Element labelling(std::size_t x, std::size_t y) const {
        std::size_t low = x + 1;  // interior position of least level
        for (std::size_t z = x + 1; z < y; ++z) {
          if (level[z] < level[low]) {
            low = z;
          }
        }
        std::size_t const inner = low < y ? level[low] : std::numeric_limits<std::size_t>::max();
        if (level[x] <= level[y] && inner >= level[x]) {
          return asc(x, y);
        }
        if (level[x] > level[y] && inner >= level[y]) {
          return desc(x, y);
        }
        return c.semigroup().product(desc(x, low), asc(low, y));
      }
    };

    std::vector<std::size_t> levels_of(CompactedWord const& c) {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < c.size(); ++x) {
        out.push_back(c.field(x, 0) + 1);
      }
      return out;
    }

  }  // namespace

  CompactedWord compact_det(AdditiveLabelling const& sigma, GreenData const& G) {
    return pack(sigma, det_ramseyan_split(sigma, G), Variant::deterministic);
  }

  CompactedWord compact_det(AdditiveLabelling const& sigma) {
    return compact_det(sigma, green(sigma.semigroup()));
  }

  CompactedWord compact_complete(AdditiveLabelling const& sigma,
                                 GreenData const&         G) {
    return pack(sigma, ramseyan_split(sigma, G), Variant::complete);
  }

  CompactedWord compact_complete(AdditiveLabelling const& sigma) {
    return compact_complete(sigma, green(sigma.semigroup()));
  }

  CompactedWord compact(AdditiveLabelling const& sigma, Variant v) {
    return v == Variant::deterministic ? compact_det(sigma) : compact_complete(sigma);
  }

  Element decode_det(CompactedWord const& c, std::size_t x, std::size_t y) {
    if (c.variant() != Variant::deterministic) {
      throw Error(ErrorCode::invalid_positions, "not a deterministic compaction");
    }
    check_pair(c, x, y);
    auto const ext = monoid_extension(c.semigroup());
    return DetDecoder{c, ext.monoid, ext.identity, levels_of(c)}.labelling(1, x, y);
  }

  Element decode_complete(CompactedWord const& c, std::size_t x, std::size_t y) {
    if (c.variant() != Variant::complete) {
      throw Error(ErrorCode::invalid_positions, "not a complete compaction");
    }
    check_pair(c, x, y);
    return CompleteDecoder{c, levels_of(c)}.labelling(x, y);
  }

  Element decode(CompactedWord const& c, std::size_t x, std::size_t y) {
    return c.variant() == Variant::deterministic ? decode_det(c, x, y)
                                                 : decode_complete(c, x, y);
  }

  std::string to_hex(std::vector<bool> const& bits) {
    static constexpr char digits[] = "0123456789abcdef";
    std::size_t const     count    = (bits.size() + 3) / 4;
    std::string           out;
    for (std::size_t d = count; d-- > 0;) {
      unsigned v = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        std::size_t const i = 4 * d + b;
        if (i < bits.size() && bits[i]) {
          v |= 1U << b;
        }
      }
      out += digits[v];
    }
    return out;
  }

  std::vector<bool> from_hex(std::string_view hex, std::size_t width) {
    std::vector<bool> bits(width, false);
    std::size_t const count = hex.size();
    for (std::size_t d = 0; d < count; ++d) {
      char const c = hex[count - 1 - d];
      unsigned   v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        throw Error(ErrorCode::parse_error,
                    "'" + std::string(hex) + "' is not hexadecimal");
      }
      for (std::size_t b = 0; b < 4; ++b) {
        if (v >> b & 1) {
          std::size_t const i = 4 * d + b;
          if (i >= width) {
            throw Error(ErrorCode::parse_error,
                        "'" + std::string(hex) + "' exceeds "
                            + std::to_string(width) + " bits");
          }
          bits[i] = true;
        }
      }
    }
    return bits;
  }

}  // namespace ffact
