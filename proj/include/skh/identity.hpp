// skh - finite skew lattice and skew Heyting algebra workbench
//
// Helpers that turn an identity (or a family of identities sharing the same
// variables) into an exhaustively checked PropertyEntry.

#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "skh/property_report.hpp"
#include "skh/scan.hpp"

namespace skh {

  //! One side-by-side equation t -> (lhs(t), rhs(t)).
  template <typename L, typename R>
  struct Equation {
    L lhs;
    R rhs;
  };

  template <typename L, typename R>
  Equation(L, R) -> Equation<L, R>;

  //! Checks every equation at every tuple of [0, n)^Arity. Equations are
  //! tried in order at each tuple; the entry's note names the failing one
  //! (1-based) when there are several.
  template <std::size_t Arity, typename... Eqs>
  PropertyEntry check_equations(std::string name, std::size_t n, Eqs... eqs) {
    auto ok = [&](Tuple<Arity> const& t) {
      return ((eqs.lhs(t) == eqs.rhs(t)) && ...);
    };
    auto          res = scan<Arity>(n, ok);
    PropertyEntry e;
    e.name           = std::move(name);
    e.tuples_checked = res.checked;
    e.tuple_space    = tuple_space(n, Arity);
    if (res.witness) {
      Tuple<Arity> const& t = *res.witness;
      e.verdict             = Verdict::Fails;
      e.witness.assign(t.begin(), t.end());
      std::size_t part  = 0;
      bool        found = false;
      auto        probe = [&](auto const& eq) {
        ++part;
        if (!found && eq.lhs(t) != eq.rhs(t)) {
          found = true;
          e.lhs = eq.lhs(t);
          e.rhs = eq.rhs(t);
          if (sizeof...(Eqs) > 1) {
            e.note = "identity " + std::to_string(part) + " of "
                     + std::to_string(sizeof...(Eqs));
          }
        }
      };
      (probe(eqs), ...);
    }
    return e;
  }

  //! Checks a boolean condition at every tuple.
  template <std::size_t Arity, typename Pred>
  PropertyEntry check_condition(std::string name, std::size_t n, Pred pred) {
    auto          res = scan<Arity>(n, pred);
    PropertyEntry e;
    e.name           = std::move(name);
    e.tuples_checked = res.checked;
    e.tuple_space    = tuple_space(n, Arity);
    if (res.witness) {
      e.verdict = Verdict::Fails;
      e.witness.assign(res.witness->begin(), res.witness->end());
    }
    return e;
  }

}  // namespace skh
