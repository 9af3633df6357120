#ifndef FFACT_REXP_HPP_
#define FFACT_REXP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ffact/semigroup.hpp"

namespace ffact {

  using ExprId = std::uint32_t;

  enum class ExprKind { empty, atom, sum, concat, star };

  //! A node of an expression DAG. Children always have smaller ids than
  //! their parent.
  struct ExprNode {
    ExprKind            kind;
    std::vector<char>   letters;   // atom: sorted, nonempty
    std::vector<ExprId> children;  // sum: >= 2, concat: 2, star: 1

    bool operator==(ExprNode const&) const = default;
  };

  //! Hash-consing table: structurally equal expressions get the same id.
  //! Sums are flattened, sorted by id and deduplicated, and the empty
  //! expression is absorbed by sums and annihilates products. Star denotes
  //! iteration at least once, so every expression denotes a language of
  //! nonempty words.
  //!
  //! A pool is not safe for concurrent interning.
  class ExprPool {
   public:
    ExprPool();

    static constexpr ExprId empty() noexcept {
      return 0;
    }

    ExprId atom(std::vector<char> letters);
    ExprId sum(std::vector<ExprId> terms);
    ExprId concat(ExprId left, ExprId right);
    ExprId star(ExprId child);

    ExprNode const& node(ExprId id) const {
      return _nodes[id];
    }

    std::size_t size() const noexcept {
      return _nodes.size();
    }

   private:
    struct NodeHash {
      std::size_t operator()(ExprNode const& n) const noexcept;
    };

    ExprId intern(ExprNode node);

    std::vector<ExprNode>                            _nodes;
    std::unordered_map<ExprNode, ExprId, NodeHash>   _index;
  };

  //! An expression: a root in a shared pool.
  struct RExpr {
    std::shared_ptr<ExprPool const> pool;
    ExprId                          id;

    ExprNode const& node() const {
      return pool->node(id);
    }

    bool is_empty() const {
      return id == ExprPool::empty();
    }
  };

  //! E_x, an expression for φ⁻¹(x) built by iterating
  //!   E⁰_x = the letters mapped to x,
  //!   Eᵏ⁺¹_x = Eᵏ_x + Σ_{yz=x} Eᵏ_y Eᵏ_z + (Eᵏ_x)⁺ if x is idempotent,
  //! 3|S| times, or until all Eᵏ stop changing.
  //!
  //! Throws Error(element_out_of_range).
  RExpr build_ramseyan_expr(Morphism const& phi, Semigroup const& S, Element x);

  //! E_x for every x, sharing one pool.
  std::vector<RExpr> build_ramseyan_exprs(Morphism const& phi, Semigroup const& S);

  //! {φ(w) : w in the language of e} as a membership vector indexed by
  //! element. Throws Error(unknown_letter).
  std::vector<bool> image(RExpr const& e, Morphism const& phi, Semigroup const& S);

  //! Every starred subexpression has image {f} for an idempotent f.
  bool is_phi_ramseyan(RExpr const& e, Morphism const& phi, Semigroup const& S);

  //! Membership of a nonempty word.
  bool matches(RExpr const& e, std::string_view w);

  //! Incremental membership: push and pop letters of a word of length at
  //! most 63, and ask whether the current word is in the language.
  class Matcher {
   public:
    explicit Matcher(RExpr e);

    void push(char c);
    void pop();
    bool accepts() const;

    std::size_t length() const noexcept {
      return _word.size();
    }

   private:
    RExpr                 _e;
    std::vector<ExprId>   _order;  // reachable nodes, children first
    std::vector<std::size_t> _slot;  // node id -> index in _order
    std::string           _word;
    // _cols[j][i]: bit s set iff w[s..j) is in the language of _order[i]
    std::vector<std::vector<std::uint64_t>> _cols;
  };

  struct ExprStats {
    std::size_t weighted_height;
    std::size_t distinct_subexpressions;
    std::size_t distinct_non_union_rooted;

    bool operator==(ExprStats const&) const = default;
  };

  //! Counts over the nodes reachable from e. The weighted height counts 0
  //! for sums and 1 for products, stars and atoms.
  ExprStats expr_stats(RExpr const& e);

  //! Text form with `+`, juxtaposition, postfix `⁺` for iteration at least
  //! once and `∅` for the empty expression.
  std::string to_string(RExpr const& e);

  //! Number of characters to_string would produce, without building it.
  std::size_t printed_size(RExpr const& e);

  //! Parses `+`, juxtaposition, parentheses, postfix `*` (zero or more) and
  //! `⁺` (one or more) over single-character letters. The empty word is
  //! dropped from the language, so "0*" parses to 0⁺.
  //!
  //! Throws Error(parse_error).
  RExpr parse_expr(std::string_view text);

}  // namespace ffact

#endif  // FFACT_REXP_HPP_
