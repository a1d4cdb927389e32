// skh - finite skew lattice and skew Heyting algebra workbench
//
// The implication on a co-strongly distributive skew lattice with top:
//
//   x -> y  =  (y v x v y) ->_y y
//
// where ->_y is the Heyting implication of the commutative lattice y-up. The
// functions below derive it, and check the identities and structural results
// that characterise it on concrete instances.

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/heyting.hpp"
#include "skh/property_report.hpp"

namespace skh {

  //! u-up = {u v x v u : x} = {x : u <= x} as a commutative lattice with
  //! bottom u and top the top of the base.
  class Upset {
   public:
    //! Throws PreconditionFailed if the two descriptions of u-up differ or
    //! the induced operations are not those of a commutative lattice.
    Upset(Algebra const& base, Elem u);

    Elem base_point() const noexcept {
      return _u;
    }
    //! Members in increasing base order.
    std::vector<Elem> const& members() const noexcept {
      return _members;
    }
    bool contains(Elem x) const noexcept {
      return _local[x] != kAbsent;
    }
    //! Position of x among the members. Precondition: contains(x).
    Elem local(Elem x) const noexcept {
      return _local[x];
    }
    Elem global(Elem i) const noexcept {
      return _members[i];
    }
    CommutativeLattice const& lattice() const noexcept {
      return *_lattice;
    }

   private:
    static constexpr Elem kAbsent = static_cast<Elem>(-1);

    Elem                                _u;
    std::vector<Elem>                   _members;
    std::vector<Elem>                   _local;
    std::shared_ptr<CommutativeLattice> _lattice;
  };

  struct DerivedArrow {
    std::optional<ArrowTable> arrow;
    // when absent: a base point whose upset is not a Heyting algebra
    std::optional<Elem> failing_upset;

    bool exists() const noexcept {
      return arrow.has_value();
    }
  };

  //! Derives x -> y through the upset at y for every pair, then confirms
  //! coherence: x -> y agrees with ->_u inside every u-up containing x and y.
  //!
  //! Throws NotCoStronglyDistributive (also for non skew lattices), NoTop,
  //! or CoherenceFailure.
  DerivedArrow derive_arrow(Algebra const& a);

  //! SH0-SH4, and SH4' as a separate entry.
  PropertyReport check_sh_axioms(Algebra const& a, ArrowTable const& arrow);

  //! SHA, "x -> y = 1 iff x <~ y", "y <= x -> y", and the sufficiency
  //! statement: when the reduct is co-strongly distributive with top and the
  //! previous conditions hold, the arrow equals derive_arrow(a).
  PropertyReport check_sha(Algebra const& a, ArrowTable const& arrow);

  //! (x v y v x) -> z = (x -> z) ^ (y -> z) ^ (x -> z).
  PropertyReport check_imp_or(Algebra const& a, ArrowTable const& arrow);

  //! derive_arrow(a) exists iff generalized_heyting_arrow(a / D) exists, and
  //! the projection restricts to isomorphisms u-up = D_u-up (of Heyting
  //! algebras, when the arrows exist). Throws InconsistencyDetected if the
  //! biconditional fails.
  PropertyReport check_lifting(Algebra const& a);

  //! D, L and R are congruences including the arrow; each quotient's induced
  //! arrow is its derived arrow; a, a/L, a/R are simultaneously arrow
  //! derivable.
  PropertyReport check_arrow_congruences(Algebra const& a,
                                         ArrowTable const& arrow);

  //! Closed forms of the arrow for skew chains and for dual skew Boolean
  //! algebras, compared with derive_arrow(a). Inapplicable cases are skipped.
  PropertyReport special_case_arrows(Algebra const& a);

  //! Everything above plus the L/R pullback, using a's own arrow table if it
  //! has one and the derived arrow otherwise.
  PropertyReport verify_suite(Algebra const& a);

}  // namespace skh
