#include "ffact/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffact {

  Semigroup::Semigroup(std::size_t n, std::vector<Element> table)
      : _n(n), _table(std::move(table)), _identity() {
    for (Element e = 0; e < _n; ++e) {
      bool ok = true;
      for (Element a = 0; a < _n && ok; ++a) {
        ok = product(e, a) == a && product(a, e) == a;
      }
      if (ok) {
        _identity = e;
        break;
      }
    }
  }

  std::vector<std::vector<Element>> Semigroup::rows() const {
    std::vector<std::vector<Element>> out(_n);
    for (std::size_t a = 0; a < _n; ++a) {
      out[a].assign(_table.begin() + a * _n, _table.begin() + (a + 1) * _n);
    }
    return out;
  }

  Semigroup make_semigroup(std::vector<std::vector<Element>> const& table) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::index_out_of_range, "semigroup must be nonempty");
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::index_out_of_range,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(table[a].size()) + " entries, expected "
                        + std::to_string(n));
      }
      for (Element v : table[a]) {
        if (v >= n) {
          throw Error(ErrorCode::index_out_of_range,
                      "entry " + std::to_string(v) + " in row " + std::to_string(a)
                          + " is out of range");
        }
        flat.push_back(v);
      }
    }
    auto mul = [&](Element x, Element y) { return flat[x * n + y]; };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw NotAssociative({a, b, c});
          }
        }
      }
    }
    return Semigroup(n, std::move(flat));
  }

  MonoidExtension monoid_extension(Semigroup const& S) {
    if (auto id = S.identity()) {
      return {S, *id, false};
    }
    std::size_t const n   = S.size();
    Element const     one = static_cast<Element>(n);
    std::vector<std::vector<Element>> table(n + 1, std::vector<Element>(n + 1));
    for (Element a = 0; a <= n; ++a) {
      for (Element b = 0; b <= n; ++b) {
        if (a == one) {
          table[a][b] = b;
        } else if (b == one) {
          table[a][b] = a;
        } else {
          table[a][b] = S.product(a, b);
        }
      }
    }
    return {make_semigroup(table), one, true};
  }

  Morphism::Morphism(std::vector<std::pair<char, Element>> const& images,
                     Semigroup const&                            S) {
    for (auto const& [letter, value] : images) {
      if (contains(letter)) {
        throw Error(ErrorCode::parse_error,
                    std::string("letter '") + letter + "' is mapped twice");
      }
      if (!S.contains(value)) {
        throw Error(ErrorCode::index_out_of_range,
                    std::string("image of '") + letter + "' is out of range");
      }
      _alphabet.push_back(letter);
      _image.push_back(value);
    }
  }

  bool Morphism::contains(char letter) const noexcept {
    return std::find(_alphabet.begin(), _alphabet.end(), letter)
           != _alphabet.end();
  }

  Element Morphism::image(char letter) const {
    auto it = std::find(_alphabet.begin(), _alphabet.end(), letter);
    if (it == _alphabet.end()) {
      throw Error(ErrorCode::unknown_letter,
                  std::string("letter '") + letter + "' is not in the alphabet");
    }
    return _image[it - _alphabet.begin()];
  }

  std::vector<char> Morphism::preimage(Element a) const {
    std::vector<char> out;
    for (std::size_t i = 0; i < _alphabet.size(); ++i) {
      if (_image[i] == a) {
        out.push_back(_alphabet[i]);
      }
    }
    return out;
  }

  Element eval_word(Morphism const& phi, Semigroup const& S, std::string_view w) {
    if (w.empty()) {
      throw Error(ErrorCode::empty_word, "cannot evaluate the empty word");
    }
    Element v = phi.image(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      v = S.product(v, phi.image(w[i]));
    }
    return v;
  }

  std::vector<Element> idempotents(Semigroup const& S) {
    std::vector<Element> out;
    for (Element e = 0; e < S.size(); ++e) {
      if (S.is_idempotent(e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  Partition partition_of(Relation const& preorder) {
    std::size_t const n = preorder.size();
    Partition         p;
    p.class_of.assign(n, n);
    for (Element a = 0; a < n; ++a) {
      if (p.class_of[a] != n) {
        continue;
      }
      std::size_t const idx = p.classes.size();
      p.classes.emplace_back();
      for (Element b = a; b < n; ++b) {
        if (preorder(a, b) && preorder(b, a)) {
          p.class_of[b] = idx;
          p.classes.back().push_back(b);
        }
      }
    }
    return p;
  }

  namespace {
    // Membership of a in S¹ b (left), b S¹ (right), S¹ b S¹ (two-sided),
    // for every pair, over the monoid extension.
    void ideal_orders(Semigroup const& S,
                      Relation&        leq_L,
                      Relation&        leq_R,
                      Relation&        leq_J) {
      std::size_t const n   = S.size();
      auto const        ext = monoid_extension(S);
      auto const&       M   = ext.monoid;
      std::size_t const m   = M.size();
      std::vector<char> right(m);
      for (Element b = 0; b < n; ++b) {
        std::fill(right.begin(), right.end(), 0);
        for (Element c = 0; c < m; ++c) {
          Element const cb = M.product(c, b);
          Element const bc = M.product(b, c);
          if (cb < n) {
            leq_L.set(cb, b);
          }
          if (bc < n) {
            leq_R.set(bc, b);
          }
          right[bc] = 1;
        }
        for (Element x = 0; x < m; ++x) {
          if (!right[x]) {
            continue;
          }
          for (Element c = 0; c < m; ++c) {
            Element const cx = M.product(c, x);
            if (cx < n) {
              leq_J.set(cx, b);
            }
          }
        }
      }
    }
  }  // namespace

  GreenData green(Semigroup const& S) {
    std::size_t const n = S.size();
    GreenData         G;
    G.leq_L = Relation(n);
    G.leq_R = Relation(n);
    G.leq_J = Relation(n);
    ideal_orders(S, G.leq_L, G.leq_R, G.leq_J);
    G.L = partition_of(G.leq_L);
    G.R = partition_of(G.leq_R);
    G.D = partition_of(G.leq_J);

    Relation h(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (G.L.class_of[a] == G.L.class_of[b]
            && G.R.class_of[a] == G.R.class_of[b]) {
          h.set(a, b);
        }
      }
    }
    G.H = partition_of(h);

    G.idempotents = idempotents(S);
    G.regular_D.assign(G.D.count(), false);
    for (Element e : G.idempotents) {
      G.regular_D[G.D.class_of[e]] = true;
    }
    G.group_H.assign(G.H.count(), false);
    for (std::size_t i = 0; i < G.H.count(); ++i) {
      auto const& cls    = G.H.classes[i];
      bool        closed = true;
      for (Element a : cls) {
        for (Element b : cls) {
          closed = closed && G.H.class_of[S.product(a, b)] == i;
        }
      }
      G.group_H[i] = closed;
    }
    return G;
  }

  std::vector<std::size_t> GreenData::h_classes_in_l(std::size_t l) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < H.count(); ++h) {
      if (L.class_of[H.classes[h].front()] == l) {
        out.push_back(h);
      }
    }
    return out;
  }

  std::vector<std::size_t> GreenData::h_classes_in_d(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < H.count(); ++h) {
      if (D.class_of[H.classes[h].front()] == d) {
        out.push_back(h);
      }
    }
    return out;
  }

  std::vector<std::size_t> GreenData::l_classes_in_d(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < L.count(); ++l) {
      if (D.class_of[L.classes[l].front()] == d) {
        out.push_back(l);
      }
    }
    return out;
  }

  std::optional<std::size_t> GreenData::h_class_of(std::size_t l,
                                                   std::size_t r) const {
    for (Element a : L.classes[l]) {
      if (R.class_of[a] == r) {
        return H.class_of[a];
      }
    }
    return std::nullopt;
  }

  bool GreenData::d_leq(std::size_t d1, std::size_t d2) const {
    return leq_J(D.classes[d1].front(), D.classes[d2].front());
  }

  Element GreenData::group_identity(std::size_t h) const {
    for (Element a : H.classes[h]) {
      if (std::binary_search(idempotents.begin(), idempotents.end(), a)) {
        return a;
      }
    }
    throw std::logic_error("H-class " + std::to_string(h) + " is not a group");
  }

  GroupProjection lclass_to_group_projection(Semigroup const& S,
                                             GreenData const& G,
                                             std::size_t      l_class) {
    if (l_class >= G.L.count()) {
      throw Error(ErrorCode::index_out_of_range, "no such L-class");
    }
    std::size_t const d = G.D.class_of[G.L.classes[l_class].front()];
    if (!G.regular_D[d]) {
      throw Error(ErrorCode::not_regular,
                  "L-class " + std::to_string(l_class)
                      + " lies in a non-regular D-class");
    }
    auto const hs = G.h_classes_in_l(l_class);
    // classes are ordered by least element, so the first group H-class
    // holds the smallest index
    auto const target = *std::find_if(
        hs.begin(), hs.end(), [&G](std::size_t h) { return G.group_H[h]; });
    GroupProjection f{l_class, target, G.group_identity(target), {}};
    f.image.assign(S.size(), 0);
    for (std::size_t h : hs) {
      auto const& cls = G.H.classes[h];
      Element     t   = f.identity;
      if (!G.group_H[h]) {
        // a left translation carrying this H-class onto the target
        Element c = 0;
        while (c < S.size() && G.H.class_of[S.product(c, cls.front())] != target) {
          ++c;
        }
        if (c == S.size()) {
          throw std::logic_error("no left translation onto the group H-class");
        }
        t = c;
      }
      for (Element a : cls) {
        f.image[a] = S.product(t, a);
      }
    }
    return f;
  }

}  // namespace ffact
