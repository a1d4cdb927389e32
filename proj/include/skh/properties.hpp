// skh - finite skew lattice and skew Heyting algebra workbench
//
// Classification of a finite algebra against the identities of skew lattice
// theory. Every check is exhaustive over its tuple space, and every failure
// carries the lexicographically least violating tuple.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/property_report.hpp"

namespace skh {

  // Names of the entries produced by classify(), in report order.
  inline constexpr std::string_view kIdempotent         = "idempotent";
  inline constexpr std::string_view kAssociative        = "associative";
  inline constexpr std::string_view kAbsorption         = "absorption";
  inline constexpr std::string_view kSkewLattice        = "skew-lattice";
  inline constexpr std::string_view kAbsorptionEquiv    = "absorption-equivalences";
  inline constexpr std::string_view kRegular            = "regular";
  inline constexpr std::string_view kCommutative        = "commutative";
  inline constexpr std::string_view kRectangular        = "rectangular";
  inline constexpr std::string_view kStronglyDist       = "strongly-distributive";
  inline constexpr std::string_view kCoStronglyDist     = "co-strongly-distributive";
  inline constexpr std::string_view kDistributive       = "distributive";
  inline constexpr std::string_view kSymmetric          = "symmetric";
  inline constexpr std::string_view kConormal           = "conormal";
  inline constexpr std::string_view kNormal             = "normal";
  inline constexpr std::string_view kQuasiDistributive  = "quasi-distributive";
  inline constexpr std::string_view kHasTop             = "has-top";
  inline constexpr std::string_view kHasBottom          = "has-bottom";

  //! All names classify() reports, in order.
  std::vector<std::string_view> const& property_names();

  PropertyReport classify(Algebra const& a);

  // Individual checks, as used by classify().
  PropertyEntry check_skew_lattice(Algebra const& a);
  PropertyEntry check_rectangular(Algebra const& a);
  PropertyEntry check_strongly_distributive(Algebra const& a);
  PropertyEntry check_co_strongly_distributive(Algebra const& a);
  PropertyEntry check_distributive(Algebra const& a);
  PropertyEntry check_symmetric(Algebra const& a);
  PropertyEntry check_conormal(Algebra const& a);
  //! Conormality of the vertical dual.
  PropertyEntry check_normal(Algebra const& a);
  PropertyEntry check_quasi_distributive(Algebra const& a);

  //! co-strongly distributive <=> quasi-distributive, symmetric and conormal,
  //! both sides evaluated independently. Skipped on non skew lattices.
  //! Throws InconsistencyDetected if the two sides disagree.
  PropertyEntry check_costrong_equivalence(Algebra const& a);

  //! The unique a in class_block with b <= a, found as b v x v b for any x
  //! in the block. Precondition: a is conormal and class_block is a D-class
  //! lying above the D-class of b.
  //!
  //! Throws PreconditionFailed or NotUnique.
  Elem cover_in_class(Algebra const& a, Elem b, std::span<Elem const> class_block);

  struct BinormalFactors {
    Algebra lattice;      // a / D
    Algebra rectangular;  // one D-class under the induced operations
    HomMap  iso;          // a -> lattice x rectangular
  };

  //! Present iff a is strongly and co-strongly distributive. Throws
  //! FactorizationNotFound if a is binormal but no isomorphism onto the
  //! product exists.
  std::optional<BinormalFactors>
  binormal_factorization(Algebra const& a, std::size_t bound = 12);

  //! Defining conditions of a skew Boolean algebra (a; meet, join, diff, 0),
  //! with diff(x, y) read as x \ y, plus Booleanness of every principal
  //! downset.
  PropertyReport check_skew_boolean(Algebra const& a, Table const& diff);

  //! Defining conditions of a dual skew Boolean algebra (a; meet, join,
  //! ddiff, 1), with ddiff(y, x) read as y \\ x.
  PropertyReport check_dual_skew_boolean(Algebra const& a, Table const& ddiff);

  //! Solves the dual skew Boolean identities for y \\ x at every pair.
  //! Empty if some pair has no solution; throws AmbiguousDiff if some pair
  //! has two.
  std::optional<Table> solve_dual_skew_diff(Algebra const& a);

}  // namespace skh
