// skh - finite skew lattice and skew Heyting algebra workbench
//
// Text formats.
//
// Algebra file, sections in this order (arrow, top and bottom optional):
//
//   # comment
//   elements: 0 1
//   meet:
//   0 0
//   0 1
//   join:
//   0 1
//   1 1
//   top: 1
//   bottom: 0
//
// Poset file:
//
//   points: a b
//   leq:
//   1 1
//   0 1
//
// Blank lines and lines whose first non-blank character is '#' are ignored.

#pragma once

#include <string>
#include <string_view>

#include "skh/algebra.hpp"
#include "skh/models.hpp"

namespace skh {

  //! Throws ParseError (with 1-based line and column) for syntax errors and
  //! unknown names; errors of make_algebra propagate unchanged.
  Algebra parse_algebra_file(std::string_view text);

  //! Renders a in the format read by parse_algebra_file, with optional
  //! leading comment lines. Tables are column aligned.
  std::string emit_algebra_file(Algebra const& a, std::string_view comment = {});

  //! Throws ParseError for syntax errors and InvalidPoset if the relation
  //! is not a partial order.
  Poset parse_poset_file(std::string_view text);

  std::string emit_poset_file(Poset const& p);

  //! Reads a whole file; throws Usage if it cannot be opened.
  std::string read_file(std::string const& path);

  //! "fnv1a64:" followed by 16 hex digits.
  std::string digest(std::string_view bytes);

}  // namespace skh
