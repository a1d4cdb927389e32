// skh - finite skew lattice and skew Heyting algebra workbench
//
// Concrete families of algebras: partial maps, sections of finite
// surjections, upset lattices of finite posets, sections over upsets, duals
// of skew Boolean algebras, small lattices, and exhaustive enumeration of
// tiny skew lattices.
//
// Partial maps and sections share one set of operations:
//
//   f ^ g   = f u g|(dom g - dom f)
//   f v g   = g|(dom g n dom f)
//   f -> g  = g|(dom g - dom f)
//   1       = the empty map

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/heyting.hpp"

namespace skh {

  inline constexpr std::size_t kDefaultModelBound = 10000;

  ////////////////////////////////////////////////////////////////////////
  // Partial maps
  ////////////////////////////////////////////////////////////////////////

  //! A partial map from {0, ..., points-1}; values[i] is set iff i is in
  //! the domain.
  struct PartialMap {
    std::vector<std::optional<std::size_t>> values;

    bool defined(std::size_t i) const {
      return values[i].has_value();
    }
    std::uint64_t domain_mask() const;
    //! This map restricted to the points in mask.
    PartialMap restrict_to(std::uint64_t mask) const;

    bool operator==(PartialMap const&) const = default;
  };

  PartialMap partial_meet(PartialMap const& f, PartialMap const& g);
  PartialMap partial_join(PartialMap const& f, PartialMap const& g);
  PartialMap partial_arrow(PartialMap const& f, PartialMap const& g);

  //! Default names for the points of a domain: p, q, r, s, t, u, v, w, then
  //! x8, x9, ...
  std::vector<std::string> point_names(std::size_t count);

  //! All partial maps X -> Y with |X| = x and |Y| = y, as an algebra with
  //! the arrow installed and the empty map as top. Values are named "0",
  //! "1", ...; elements are named like "{}" and "{p:0,q:1}". Element 0 is
  //! the empty map.
  //!
  //! Throws TooLarge when (y + 1)^x > bound, PreconditionFailed for x or y
  //! zero.
  Algebra partial_function_algebra(std::size_t x,
                                   std::size_t y,
                                   std::size_t bound = kDefaultModelBound);

  ////////////////////////////////////////////////////////////////////////
  // Surjections and sections
  ////////////////////////////////////////////////////////////////////////

  //! A surjection proj: total -> base between finite named sets.
  struct SurjectionModel {
    std::vector<std::string> base_names;
    std::vector<std::string> total_names;
    std::vector<std::size_t> proj;

    //! Base points named by base_names (point_names() when empty); the
    //! fibre over point b has elements named b0, b1, ...
    static SurjectionModel
    from_fibre_sizes(std::vector<std::size_t> const& sizes,
                     std::vector<std::string>        base_names = {});

    //! Throws PreconditionFailed unless proj is a total surjection.
    void validate() const;
    std::vector<std::size_t> fibre(std::size_t b) const;
  };

  //! X x Y -> X with points named as point_names(x) and pairs "(p,0)".
  SurjectionModel coordinate_projection(std::size_t x, std::size_t y);

  //! All sections of the model over all subsets of the base, with the
  //! partial map operations. Element 0 is the empty section.
  //!
  //! Throws TooLarge or PreconditionFailed as partial_function_algebra.
  Algebra sections_algebra(SurjectionModel const& model,
                           std::size_t bound = kDefaultModelBound);

  ////////////////////////////////////////////////////////////////////////
  // Finite posets
  ////////////////////////////////////////////////////////////////////////

  class Poset {
   public:
    using Mask = std::uint64_t;

    //! Throws InvalidPoset unless leq is a partial order on names.size()
    //! points, or if there are more than 64 points.
    Poset(std::vector<std::string> names, Relation leq);

    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(std::size_t i) const {
      return _names[i];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    bool leq(std::size_t i, std::size_t j) const {
      return _leq(static_cast<Elem>(i), static_cast<Elem>(j));
    }
    Relation const& relation() const noexcept {
      return _leq;
    }

    Mask full() const noexcept;
    Mask up(Mask m) const;
    Mask down(Mask m) const;
    bool is_upset(Mask m) const {
      return up(m) == m;
    }
    //! Every upset, in increasing order of mask.
    std::vector<Mask> upsets() const;
    //! "{a,c}" style rendering of a subset.
    std::string subset_name(Mask m) const;

    bool operator==(Poset const&) const = default;

   private:
    std::vector<std::string> _names;
    Relation                 _leq;
    std::vector<Mask>        _up;    // principal upsets
    std::vector<Mask>        _down;  // principal downsets
  };

  //! One representative of each isomorphism class of posets on n points,
  //! points named a, b, c, ... Throws TooLarge for n > 6.
  std::vector<Poset> all_posets(std::size_t n);

  //! X - down(U - V) on upsets of p.
  Poset::Mask esakia_implication(Poset const& p, Poset::Mask u, Poset::Mask v);

  //! The upsets of p ordered by inclusion, element i being p.upsets()[i],
  //! with the Esakia implication as its arrow. The arrow is compared with
  //! heyting_arrow on every entry.
  //!
  //! Throws TooLarge for more than 12 points, EsakiaFormulaMismatch if the
  //! comparison fails.
  CommutativeLattice upset_heyting(Poset const& p);

  //! Agreement of one closed-form candidate for the implication with the
  //! derived arrow.
  struct FormulaAgreement {
    std::string name;
    // candidate produced a section over an upset at every pair
    bool defined_everywhere = true;
    bool matches            = true;
    // first pair (r, s) where the candidate is undefined or differs
    std::optional<std::pair<Elem, Elem>> first_mismatch;
  };

  //! Whether the operations, in a given assignment to meet and join, make
  //! the sections a skew Heyting algebra.
  struct OrientationOutcome {
    std::string name;
    bool        skew_heyting = false;
    std::string note;
  };

  struct PosetSections {
    // sections over upsets, with the derived arrow when it exists
    Algebra                         algebra;
    std::vector<PartialMap>         sections;
    std::vector<FormulaAgreement>   formulas;
    std::vector<OrientationOutcome> orientations;
  };

  //! Sections of model over the upsets of base. The base of the model and
  //! the poset must have the same points. Formula candidates:
  //!
  //!   "r|up(dom s - dom r)"   restriction of the first argument
  //!   "s|up(dom s - dom r)"   restriction of the second argument
  //!   "s|(dom s - dom r)"     plain relative complement
  //!
  //! Orientations: "meet-override" (meet keeps the first argument's values,
  //! join restricts the second) and "join-override" (the two exchanged).
  //!
  //! Throws TooLarge, PreconditionFailed.
  PosetSections poset_sections_algebra(Poset const&           base,
                                       SurjectionModel const& model,
                                       std::size_t bound = kDefaultModelBound);

  ////////////////////////////////////////////////////////////////////////
  // Skew Boolean algebras
  ////////////////////////////////////////////////////////////////////////

  struct SkewBoolean {
    Algebra algebra;
    Table   diff;  // diff(x, y) = x \ y
  };

  //! The vertical dual of the partial map algebra, with x \ y the
  //! restriction of x to dom x - dom y and the empty map as bottom.
  SkewBoolean partial_function_skew_boolean(
      std::size_t x, std::size_t y, std::size_t bound = kDefaultModelBound);

  //! The vertical dual of s with x -> y = y \ x and the old bottom as top.
  //! The result is compared with check_sh_axioms and derive_arrow.
  //!
  //! Throws PreconditionFailed if s fails check_skew_boolean,
  //! InconsistencyDetected if the comparison fails.
  Algebra from_skew_boolean(SkewBoolean const& s);

  ////////////////////////////////////////////////////////////////////////
  // Small lattices and rectangular bands
  ////////////////////////////////////////////////////////////////////////

  //! Meet and join as greatest lower and least upper bounds. Throws
  //! PreconditionFailed if leq is not a lattice order.
  Algebra lattice_from_order(std::vector<std::string> names, Relation const& leq);

  //! 0 < 1 < ... < n-1.
  Algebra chain_lattice(std::size_t n);
  //! Subsets of a k-element set, named like "{a,b}".
  Algebra boolean_lattice(std::size_t k);
  //! 0 < a < b < 1 and 0 < c < 1.
  Algebra n5();

  //! x ^ y = x, x v y = y.
  Algebra left_rectangular(std::size_t n);
  //! x ^ y = y, x v y = x.
  Algebra right_rectangular(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Every skew lattice on {0, ..., n-1} up to isomorphism, each in its
  //! canonical labelling (least meet-then-join table over all relabellings),
  //! sorted by that labelling. Throws TooLarge for n > 3.
  std::vector<Algebra> enumerate_skew_lattices(std::size_t n);

}  // namespace skh
