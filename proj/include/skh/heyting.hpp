// skh - finite skew lattice and skew Heyting algebra workbench
//
// Heyting structure on finite commutative lattices. The arrow is found by
// brute force: y -> z is the maximum of {x : x ^ y <= z}, when that set has
// one. Every other arrow computation in the library is tested against this.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/property_report.hpp"

namespace skh {

  using ArrowTable = Table;

  //! An Algebra whose meet and join satisfy the lattice axioms and commute.
  class CommutativeLattice {
   public:
    //! Throws PreconditionFailed if a is not a commutative lattice.
    explicit CommutativeLattice(Algebra a);

    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    std::size_t size() const noexcept {
      return _algebra.size();
    }
    Elem meet(Elem x, Elem y) const noexcept {
      return _algebra.meet(x, y);
    }
    Elem join(Elem x, Elem y) const noexcept {
      return _algebra.join(x, y);
    }
    bool leq(Elem x, Elem y) const noexcept {
      return _algebra.meet(x, y) == x;
    }
    //! Declared top, or the greatest element if there is one.
    std::optional<Elem> top() const noexcept {
      return _top;
    }
    std::optional<Elem> bottom() const noexcept {
      return _bottom;
    }

   private:
    Algebra             _algebra;
    std::optional<Elem> _top;
    std::optional<Elem> _bottom;
  };

  struct ArrowOutcome {
    std::optional<ArrowTable> arrow;
    // when absent: the first (y, z) whose candidate set has no maximum, and
    // that set's maximal elements
    std::optional<std::pair<Elem, Elem>> offending;
    std::vector<Elem>                    maximal;
    // generalized_heyting_arrow only: an upset that is not Heyting
    std::optional<Elem> failing_upset;

    bool exists() const noexcept {
      return arrow.has_value();
    }
  };

  //! Brute-force relative pseudocomplement. Throws NoTop if l has no top.
  ArrowOutcome heyting_arrow(CommutativeLattice const& l);

  //! As heyting_arrow (no bottom needed), and additionally checks that each
  //! principal upset u-up is a Heyting algebra whose arrow is the restriction
  //! of the global one.
  ArrowOutcome generalized_heyting_arrow(CommutativeLattice const& l);

  //! The principal upset {x : u <= x} with induced operations, u as bottom
  //! and the lattice top (if any) as top. Members are in increasing order.
  std::pair<CommutativeLattice, std::vector<Elem>>
  principal_upset(CommutativeLattice const& l, Elem u);

  //! Verdicts for H1-H4, HA and x -> y = (x v y) -> y.
  PropertyReport check_heyting_axioms(CommutativeLattice const& l,
                                      ArrowTable const&         arrow);

  //! The table y \\ x with (y v x) v (y \\ x) = 1 and (y v x) ^ (y \\ x) = y,
  //! indexed (y, x). Empty if some pair has no solution; throws AmbiguousDiff
  //! if some pair has two.
  std::optional<Table> dual_gb_diff(CommutativeLattice const& l);

}  // namespace skh
