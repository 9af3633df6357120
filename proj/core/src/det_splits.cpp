#include "ffact/det_splits.hpp"

#include <algorithm>
#include <string>

#include "internal.hpp"

namespace ffact {

  namespace {

    // per L-class data for the projection onto a group H-class
    struct LClassData {
      GroupProjection   f;
      detail::GroupData group;
      bool              has_non_group_h;
      std::size_t       size;
    };

    LClassData l_class_data(Semigroup const& S, GreenData const& G, std::size_t l) {
      auto f = lclass_to_group_projection(S, G, l);
      auto g = detail::group_data(S, G, f.h_class);
      bool non_group = false;
      for (std::size_t h : G.h_classes_in_l(l)) {
        non_group = non_group || !G.group_H[h];
      }
      return LClassData{std::move(f), std::move(g), non_group,
                        G.L.classes[l].size()};
    }

    std::size_t first_level(LClassData const& c) {
      return c.has_non_group_h ? 1 : c.group.rank[c.group.identity];
    }

    std::vector<std::size_t> lclass_levels(Semigroup const&         S,
                                           LClassData const&        c,
                                           std::span<Element const> gaps) {
      std::vector<std::size_t> out{first_level(c)};
      std::size_t const        shift = c.has_non_group_h ? 1 : 0;
      Element                  v     = c.group.identity;
      for (Element g : gaps) {
        v = S.product(v, c.f(g));
        out.push_back(c.group.rank[v] + shift);
      }
      return out;
    }

    std::vector<std::size_t> dclass_levels(Semigroup const&                S,
                                           GreenData const&                G,
                                           AdditiveLabelling const&        sigma,
                                           std::span<std::size_t const>    E) {
      std::size_t const L = E.front();
      auto const        c = l_class_data(S, G, L);
      if (E.size() == 1) {
        return lclass_levels(S, c, sigma.gaps());
      }
      std::vector<std::size_t> gamma{0};
      std::vector<std::size_t> rest;
      auto const               gaps = sigma.gaps();
      Element                  q    = 0;
      for (std::size_t x = 1; x < sigma.size(); ++x) {
        q = x == 1 ? gaps[0] : S.product(q, gaps[x - 1]);
        (G.L.class_of[q] == L ? rest : gamma).push_back(x);
      }
      std::vector<std::size_t> out(sigma.size());
      auto const sub = dclass_levels(S, G, sigma.restrict(gamma), E.subspan(1));
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        out[gamma[i]] = sub[i] + c.size;
      }
      if (!rest.empty()) {
        auto const low = lclass_levels(S, c, sigma.restrict(rest).gaps());
        for (std::size_t i = 0; i < rest.size(); ++i) {
          out[rest[i]] = low[i];
        }
      }
      return out;
    }

    // levels of positions 1..m of the ordering with the given gaps
    std::vector<std::size_t> det_dclosed(Semigroup const&         S,
                                         GreenData const&         G,
                                         std::span<Element const> gaps,
                                         std::vector<bool>        E) {
      std::vector<std::size_t> out(gaps.size(), 0);
      if (gaps.empty()) {
        return out;
      }
      auto const d = detail::minimal_d_class(G, E);
      if (!d) {
        throw Error(ErrorCode::not_d_closed, "a value lies outside E");
      }
      auto const  gamma = detail::min_closure(S, G, gaps, *d);
      std::size_t shift = 1;
      if (G.regular_D[*d]) {
        auto const ls = G.l_classes_in_d(*d);
        auto const s  = dclass_levels(S, G, AdditiveLabelling(S, gamma.gaps), ls);
        for (std::size_t i = 1; i < gamma.members.size(); ++i) {
          out[gamma.members[i] - 1] = s[i];
        }
        shift = G.D.classes[*d].size();
      } else {
        for (std::size_t i = 1; i < gamma.members.size(); ++i) {
          out[gamma.members[i] - 1] = 1;
        }
      }
      E[*d] = false;
      std::size_t const m = gaps.size() + 1;
      for (std::size_t i = 0; i < gamma.members.size(); ++i) {
        std::size_t const lo = gamma.members[i];
        std::size_t const hi
            = i + 1 < gamma.members.size() ? gamma.members[i + 1] - 1 : m - 1;
        if (hi == lo) {
          continue;
        }
        auto const sub = det_dclosed(S, G, gaps.subspan(lo, hi - lo), E);
        for (std::size_t j = 0; j < sub.size(); ++j) {
          out[lo + j] = sub[j] + shift;
        }
      }
      return out;
    }

  }  // namespace

  Split det_split_lclass(AdditiveLabelling const& sigma,
                         GreenData const&         G,
                         std::size_t              l_class) {
    auto const& S = sigma.semigroup();
    if (l_class >= G.L.count()) {
      throw Error(ErrorCode::not_single_l_class,
                  "no L-class with index " + std::to_string(l_class));
    }
    auto const values = detail::values_of(S, sigma.gaps());
    for (Element a = 0; a < S.size(); ++a) {
      if (values[a] && G.L.class_of[a] != l_class) {
        throw Error(ErrorCode::not_single_l_class,
                    "value " + std::to_string(a) + " is outside the L-class");
      }
    }
    return Split{lclass_levels(S, l_class_data(S, G, l_class), sigma.gaps())};
  }

  Split det_split_dclass(AdditiveLabelling const&        sigma,
                         GreenData const&                G,
                         std::vector<std::size_t> const& E) {
    auto const& S = sigma.semigroup();
    if (E.empty()) {
      throw Error(ErrorCode::not_l_closed, "E is empty");
    }
    std::vector<std::size_t> ls = E;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::vector<bool> in_E(G.L.count(), false);
    for (std::size_t l : ls) {
      if (l >= G.L.count()) {
        throw Error(ErrorCode::not_l_closed,
                    "no L-class with index " + std::to_string(l));
      }
      in_E[l] = true;
    }
    std::size_t const d = G.D.class_of[G.L.classes[ls[0]][0]];
    for (std::size_t l : ls) {
      if (G.D.class_of[G.L.classes[l][0]] != d) {
        throw Error(ErrorCode::not_l_closed,
                    "the L-classes of E lie in different D-classes");
      }
    }
    if (!G.regular_D[d]) {
      throw Error(ErrorCode::not_regular, "the D-class of E is not regular");
    }
    auto const values = detail::values_of(S, sigma.gaps());
    for (Element a = 0; a < S.size(); ++a) {
      if (values[a] && !in_E[G.L.class_of[a]]) {
        throw Error(ErrorCode::not_l_closed,
                    "the value " + std::to_string(a) + " is not in E");
      }
    }
    return Split{dclass_levels(S, G, sigma, ls)};
  }

  Split det_ramseyan_split(AdditiveLabelling const& sigma, GreenData const& G) {
    auto const prepended = sigma.prepend(0);
    return Split{det_dclosed(sigma.semigroup(), G, prepended.gaps(),
                             std::vector<bool>(G.D.count(), true))};
  }

  Split det_ramseyan_split(AdditiveLabelling const& sigma) {
    return det_ramseyan_split(sigma, green(sigma.semigroup()));
  }

  ////////////////////////////////////////////////////////////////////////
  // StreamingSplitBuilder
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Context {
      Semigroup const&                       S;
      GreenData const&                       G;
      std::vector<std::optional<LClassData>> l_data;

      Context(Semigroup const& S_, GreenData const& G_)
          : S(S_), G(G_), l_data(G_.L.count()) {
        for (std::size_t l = 0; l < G.L.count(); ++l) {
          if (G.regular_D[G.D.class_of[G.L.classes[l][0]]]) {
            l_data[l] = l_class_data(S, G, l);
          }
        }
      }
    };

  }  // namespace

  class StreamingSplitBuilder::Node {
   public:
    virtual ~Node() = default;
    virtual std::size_t feed(Element g) = 0;
  };

  namespace {

    class LClassNode {
     public:
      LClassNode(Context const& ctx, std::size_t l)
          : _ctx(ctx), _c(*ctx.l_data[l]), _v(_c.group.identity) {}

      std::size_t first_level() const {
        return ::ffact::first_level(_c);
      }

      std::size_t feed(Element g) {
        _v = _ctx.S.product(_v, _c.f(g));
        return _c.group.rank[_v] + (_c.has_non_group_h ? 1 : 0);
      }

     private:
      Context const&    _ctx;
      LClassData const& _c;
      Element           _v;
    };

    // levels of all positions of an ordering with values in the L-classes E
    class DClassNode {
     public:
      DClassNode(Context const& ctx, std::span<std::size_t const> E)
          : _ctx(ctx), _L(E.front()), _size(ctx.G.L.classes[_L].size()) {
        if (E.size() == 1) {
          _low = std::make_unique<LClassNode>(ctx, _L);
        } else {
          _gamma = std::make_unique<DClassNode>(ctx, E.subspan(1));
        }
      }

      std::size_t first_level() const {
        return _gamma ? _gamma->first_level() + _size : _low->first_level();
      }

      std::size_t feed(Element g) {
        if (!_gamma) {
          return _low->feed(g);
        }
        auto const& S = _ctx.S;
        _q            = _started ? S.product(_q, g) : g;
        _started      = true;
        _rg           = _rg_fresh ? g : S.product(_rg, g);
        _rg_fresh     = false;
        if (_low) {
          _rb       = _rb_fresh ? g : S.product(_rb, g);
          _rb_fresh = false;
        }
        if (_ctx.G.L.class_of[_q] != _L) {
          _rg_fresh = true;
          return _gamma->feed(_rg) + _size;
        }
        _rb_fresh = true;
        if (!_low) {
          _low = std::make_unique<LClassNode>(_ctx, _L);
          return _low->first_level();
        }
        return _low->feed(_rb);
      }

     private:
      Context const&              _ctx;
      std::size_t                 _L;
      std::size_t                 _size;
      std::unique_ptr<DClassNode> _gamma;
      std::unique_ptr<LClassNode> _low;
      Element                     _q        = 0;
      bool                        _started  = false;
      Element                     _rg       = 0;
      bool                        _rg_fresh = true;
      Element                     _rb       = 0;
      bool                        _rb_fresh = true;
    };

    // levels of positions after the first of an ordering with values in E
    class DClosedNode : public StreamingSplitBuilder::Node {
     public:
      DClosedNode(Context const& ctx, std::vector<bool> E)
          : _ctx(ctx), _E(std::move(E)) {
        auto const d = detail::minimal_d_class(ctx.G, _E);
        if (!d) {
          return;
        }
        _d       = *d;
        _regular = ctx.G.regular_D[_d];
        _E[_d]   = false;
        if (_regular) {
          _ls    = ctx.G.l_classes_in_d(_d);
          _gamma = std::make_unique<DClassNode>(ctx, _ls);
          _shift = ctx.G.D.classes[_d].size();
        }
      }

      std::size_t feed(Element g) override {
        auto const& G = _ctx.G;
        if (_d == npos) {
          throw Error(ErrorCode::not_d_closed, "a value lies outside E");
        }
        _p     = _fresh ? g : _ctx.S.product(_p, g);
        _fresh = false;
        if (G.D.class_of[_p] == _d) {
          _fresh = true;
          _eta.reset();
          return _regular ? _gamma->feed(_p) : 1;
        }
        if (!_eta) {
          _eta = std::make_unique<DClosedNode>(_ctx, _E);
        }
        return _eta->feed(g) + _shift;
      }

     private:
      static constexpr std::size_t npos = static_cast<std::size_t>(-1);

      Context const&               _ctx;
      std::vector<bool>            _E;  // without the chosen D-class
      std::size_t                  _d       = npos;
      bool                         _regular = false;
      std::size_t                  _shift   = 1;
      std::vector<std::size_t>     _ls;
      std::unique_ptr<DClassNode>  _gamma;
      std::unique_ptr<DClosedNode> _eta;
      Element                      _p     = 0;
      bool                         _fresh = true;
    };

    class RootNode : public StreamingSplitBuilder::Node {
     public:
      RootNode(Semigroup const& S, GreenData const& G)
          : _ctx(S, G), _top(_ctx, std::vector<bool>(G.D.count(), true)) {}

      std::size_t feed(Element g) override {
        return _top.feed(g);
      }

     private:
      Context     _ctx;
      DClosedNode _top;
    };

  }  // namespace

  StreamingSplitBuilder::StreamingSplitBuilder(Semigroup const& S)
      : StreamingSplitBuilder(S, green(S)) {}

  StreamingSplitBuilder::StreamingSplitBuilder(Semigroup const& S, GreenData G)
      : _S(&S), _G(std::make_unique<GreenData>(std::move(G))) {
    _root = std::make_unique<RootNode>(S, *_G);
    // the fresh minimum of the prepend construction, with gap 0
    _levels.push_back(_root->feed(0));
  }

  StreamingSplitBuilder::~StreamingSplitBuilder() = default;
  StreamingSplitBuilder::StreamingSplitBuilder(StreamingSplitBuilder&&) noexcept
      = default;
  StreamingSplitBuilder&
  StreamingSplitBuilder::operator=(StreamingSplitBuilder&&) noexcept = default;

  std::size_t StreamingSplitBuilder::extend(Element value) {
    if (!_S->contains(value)) {
      throw Error(ErrorCode::invalid_element,
                  std::to_string(value) + " is not an element");
    }
    _levels.push_back(_root->feed(value));
    return _levels.back();
  }

}  // namespace ffact
