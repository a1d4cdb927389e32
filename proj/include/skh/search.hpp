// skh - finite skew lattice and skew Heyting algebra workbench
//
// Counterexample search: stream the members of a model family in a fixed
// order and stop at the first one on which a named property has the
// requested verdict.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/property_report.hpp"

namespace skh {

  struct Instance {
    std::string label;
    Algebra     algebra;
  };

  //! "pfn", "sections", "enum", "poset-sections".
  std::vector<std::string_view> const& family_names();

  //! Calls visit on every member of the family with at most max_size
  //! elements, smallest first, until visit returns false. Sizes are also
  //! capped by bound.
  //!
  //!   pfn             partial maps X -> Y
  //!   sections        sections of surjections, by fibre sizes
  //!   enum            all skew lattices on at most 3 elements
  //!   poset-sections  sections over upsets of posets with at most 3
  //!                   points and fibres of size at most 2
  //!
  //! Throws Usage for an unknown family.
  void for_each_instance(std::string_view                      family,
                         std::size_t                           max_size,
                         std::size_t                           bound,
                         std::function<bool(Instance const&)> visit);

  //! Names accepted by evaluate_property: the classify() entries,
  //! "costrong-equivalence", the verify_suite() entries, and "skew-heyting"
  //! (the whole verify suite).
  std::vector<std::string> const& searchable_properties();

  //! The verdict of one property on a. Verify-suite entries that the suite
  //! did not reach are reported as skipped. Throws Usage for an unknown
  //! name.
  PropertyEntry evaluate_property(Algebra const& a, std::string_view property);

  struct SearchOutcome {
    std::optional<Instance> found;
    PropertyEntry           entry;  // the property's verdict on found
    std::size_t             examined = 0;
  };

  //! First instance on which the property holds, or with negate the first
  //! on which it fails.
  SearchOutcome search(std::string_view family,
                       std::size_t      max_size,
                       std::string_view property,
                       bool             negate,
                       std::size_t      bound);

}  // namespace skh
