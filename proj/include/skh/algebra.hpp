// skh - finite skew lattice and skew Heyting algebra workbench
//
// Finite algebras (S; meet, join [, arrow] [, top] [, bottom]) given by their
// operation tables, together with the structure derived from the tables:
// natural order and preorder, Green's relations, quotients, duals, products
// and isomorphisms.
//
// Operation tables are the only authoritative data. Every order or relation
// is recomputed from them on demand.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skh/table.hpp"

namespace skh {

  struct Constants {
    std::optional<Elem> top;
    std::optional<Elem> bottom;

    bool operator==(Constants const&) const = default;
  };

  class Algebra {
   public:
    std::size_t size() const noexcept {
      return _meet.size();
    }

    Elem meet(Elem x, Elem y) const noexcept {
      return _meet(x, y);
    }
    Elem join(Elem x, Elem y) const noexcept {
      return _join(x, y);
    }
    // Precondition: has_arrow().
    Elem arrow(Elem x, Elem y) const noexcept {
      return (*_arrow)(x, y);
    }

    Table const& meet_table() const noexcept {
      return _meet;
    }
    Table const& join_table() const noexcept {
      return _join;
    }
    bool has_arrow() const noexcept {
      return _arrow.has_value();
    }
    Table const& arrow_table() const;

    std::optional<Elem> top() const noexcept {
      return _constants.top;
    }
    std::optional<Elem> bottom() const noexcept {
      return _constants.bottom;
    }
    Constants const& constants() const noexcept {
      return _constants;
    }

    std::string const& name(Elem x) const {
      return _names[x];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Elem> find(std::string_view name) const;

    //! Same algebra with the given arrow table installed (validated).
    Algebra with_arrow(Table arrow) const;
    Algebra without_arrow() const;
    Algebra with_names(std::vector<std::string> names) const;

    bool operator==(Algebra const&) const = default;

   private:
    friend Algebra make_algebra(std::vector<std::string>,
                                Table,
                                Table,
                                Constants,
                                std::optional<Table>);

    Algebra() = default;

    Table                    _meet;
    Table                    _join;
    std::optional<Table>     _arrow;
    Constants                _constants;
    std::vector<std::string> _names;
  };

  //! Validates shape and constant laws only. Algebraic laws are left to
  //! classify(), so that non-examples can be represented.
  //!
  //! Throws MalformedTable or BadConstant.
  Algebra make_algebra(std::vector<std::string> carrier,
                       Table                    meet,
                       Table                    join,
                       Constants                constants = {},
                       std::optional<Table>     arrow     = std::nullopt);

  //! As above with element names "0", ..., "n-1".
  Algebra make_algebra(std::size_t          n,
                       Table                meet,
                       Table                join,
                       Constants            constants = {},
                       std::optional<Table> arrow     = std::nullopt);

  //! An element t with x v t = t = t v x for all x, if any.
  std::optional<Elem> find_top(Algebra const& a);
  std::optional<Elem> find_bottom(Algebra const& a);

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  //! Equivalence partition of {0, ..., n-1}. Blocks are sorted by their least
  //! member and members within a block are increasing.
  class Partition {
   public:
    Partition() = default;

    //! Throws PreconditionFailed if rel is not an equivalence.
    static Partition from_equivalence(Relation const& rel);
    //! Blocks are the fibres of the labelling.
    static Partition from_labels(std::span<std::size_t const> labels);
    static Partition discrete(std::size_t n);
    static Partition total(std::size_t n);

    std::size_t size() const noexcept {
      return _blocks.size();
    }
    std::size_t carrier_size() const noexcept {
      return _block_of.size();
    }
    std::vector<std::vector<Elem>> const& blocks() const noexcept {
      return _blocks;
    }
    std::vector<Elem> const& block(std::size_t i) const {
      return _blocks[i];
    }
    std::size_t block_of(Elem x) const {
      return _block_of[x];
    }
    bool related(Elem x, Elem y) const {
      return _block_of[x] == _block_of[y];
    }
    bool     is_discrete() const noexcept {
      return _blocks.size() == _block_of.size();
    }
    Relation relation() const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<std::vector<Elem>> _blocks;
    std::vector<std::size_t>       _block_of;
  };

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct HomMap {
    Algebra           source;
    Algebra           target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const {
      return map[x];
    }
  };

  //! Checks preservation of meet, join, arrow (when both sides carry one) and
  //! of the constants declared on both sides. Throws NotAHomomorphism.
  HomMap make_hom(Algebra source, Algebra target, std::vector<Elem> map);

  //! Human readable reason why map fails to be a homomorphism, if it does.
  std::optional<std::string> hom_violation(Algebra const&           source,
                                           Algebra const&           target,
                                           std::span<Elem const> map);

  ////////////////////////////////////////////////////////////////////////
  // Orders and Green's relations
  ////////////////////////////////////////////////////////////////////////

  //! x <= y iff x v y = y = y v x. Defined pointwise on any algebra.
  Relation natural_order(Algebra const& a);
  //! x <~ y iff y v x v y = y. Defined pointwise on any algebra.
  Relation natural_preorder(Algebra const& a);

  struct NaturalOrders {
    Relation leq;
    Relation preceq;
  };

  //! Both natural relations, after confirming that every characterisation of
  //! each of them agrees on a. Throws CostaMismatch otherwise.
  NaturalOrders natural_orders(Algebra const& a);

  struct Greens {
    Partition D;
    Partition L;
    Partition R;
  };

  //! Relations computed pointwise from the tables (no validation).
  Relation green_d_relation(Algebra const& a);
  Relation green_l_relation(Algebra const& a);
  Relation green_r_relation(Algebra const& a);

  //! Throws NotComposable unless D, L, R are equivalences with
  //! L;R = R;L = D.
  Greens greens(Algebra const& a);

  ////////////////////////////////////////////////////////////////////////
  // Congruences and quotients
  ////////////////////////////////////////////////////////////////////////

  struct CongruenceWitness {
    std::string op;  // "meet", "join" or "arrow"
    Elem        a, b, c, d;
  };

  //! Least (op, a, b, c, d) with a ~ c, b ~ d and op(a, b) !~ op(c, d),
  //! ops in the order meet, join, arrow. Empty iff p is a congruence.
  std::optional<CongruenceWitness> congruence_witness(Algebra const&   a,
                                                      Partition const& p);

  inline bool is_congruence(Algebra const& a, Partition const& p) {
    return !congruence_witness(a, p).has_value();
  }

  struct Quotient {
    Algebra algebra;
    HomMap  projection;
  };

  //! The quotient algebra, with one element per block (in block order) named
  //! "[x]" after the block's least member x. Throws NotACongruence. If p is
  //! Green's D the result is checked to be commutative.
  Quotient quotient(Algebra const& a, Partition const& p);

  struct PullbackResult {
    bool              holds = false;
    std::string       reason;
    std::vector<Elem> witness;  // colliding pair, or (R-block, L-block)
  };

  //! Whether a -> a/R x_{a/D} a/L is a bijective homomorphism.
  PullbackResult pullback_check(Algebra const& a);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  //! Swaps meet and join, and top and bottom; drops the arrow.
  Algebra vertical_dual(Algebra const& a);

  //! Componentwise operations on pairs, indexed x * |b| + y. Constants and
  //! the arrow are present iff present on both factors.
  Algebra direct_product(Algebra const& a, Algebra const& b);

  //! Renames element x to perm[x]. perm must be a permutation.
  Algebra relabel(Algebra const& a, std::span<Elem const> perm);

  //! Subalgebra on the given members (in the given order). Throws
  //! PreconditionFailed if not closed under the tables present.
  Algebra subalgebra(Algebra const& a, std::span<Elem const> members);

  //! a with a fresh element that is its top (resp. bottom). Any arrow is
  //! dropped.
  Algebra adjoin_top(Algebra const& a, std::string name = "1");
  Algebra adjoin_bottom(Algebra const& a, std::string name = "0");

  bool is_commutative(Algebra const& a);

  //! Backtracking search for an isomorphism a -> b respecting every table and
  //! constant present on both. Throws TooLarge when |a| > bound.
  std::optional<HomMap> find_isomorphism(Algebra const& a,
                                         Algebra const& b,
                                         std::size_t    bound = 12);

}  // namespace skh
