// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/heyting.hpp"

#include <algorithm>

#include "skh/error.hpp"
#include "skh/identity.hpp"

namespace skh {

  CommutativeLattice::CommutativeLattice(Algebra a) : _algebra(std::move(a)) {
    std::size_t const n = _algebra.size();
    auto const&       A = _algebra;
    for (Elem x = 0; x < n; ++x) {
      if (A.meet(x, x) != x || A.join(x, x) != x) {
        throw Error(ErrorKind::PreconditionFailed,
                    "not a lattice: idempotency fails at " + A.name(x));
      }
      for (Elem y = 0; y < n; ++y) {
        if (A.meet(x, y) != A.meet(y, x) || A.join(x, y) != A.join(y, x)) {
          throw Error(ErrorKind::PreconditionFailed,
                      "not a commutative lattice: " + A.name(x) + ", "
                          + A.name(y) + " do not commute");
        }
        if (A.meet(x, A.join(x, y)) != x || A.join(x, A.meet(x, y)) != x) {
          throw Error(ErrorKind::PreconditionFailed,
                      "not a lattice: absorption fails at " + A.name(x) + ", "
                          + A.name(y));
        }
        for (Elem z = 0; z < n; ++z) {
          if (A.meet(A.meet(x, y), z) != A.meet(x, A.meet(y, z))
              || A.join(A.join(x, y), z) != A.join(x, A.join(y, z))) {
            throw Error(ErrorKind::PreconditionFailed,
                        "not a lattice: associativity fails");
          }
        }
      }
    }
    _top    = find_top(_algebra);
    _bottom = find_bottom(_algebra);
  }

  ArrowOutcome heyting_arrow(CommutativeLattice const& l) {
    if (!l.top()) {
      throw Error(ErrorKind::NoTop, "lattice has no top");
    }
    std::size_t const n = l.size();
    ArrowOutcome      out;
    Table             arrow(n);
    std::vector<Elem> candidates;
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        candidates.clear();
        for (Elem x = 0; x < n; ++x) {
          if (l.leq(l.meet(x, y), z)) {
            candidates.push_back(x);
          }
        }
        std::vector<Elem> maximal;
        for (Elem c : candidates) {
          bool dominated = false;
          for (Elem d : candidates) {
            if (d != c && l.leq(c, d)) {
              dominated = true;
              break;
            }
          }
          if (!dominated) {
            maximal.push_back(c);
          }
        }
        if (maximal.size() != 1) {
          out.offending = {y, z};
          out.maximal   = std::move(maximal);
          return out;
        }
        arrow.set(y, z, maximal.front());
      }
    }
    out.arrow = std::move(arrow);
    return out;
  }

  std::pair<CommutativeLattice, std::vector<Elem>>
  principal_upset(CommutativeLattice const& l, Elem u) {
    std::vector<Elem> members;
    for (Elem x = 0; x < l.size(); ++x) {
      if (l.leq(u, x)) {
        members.push_back(x);
      }
    }
    Algebra sub = subalgebra(l.algebra().without_arrow(), members);
    Constants c;
    if (l.top()) {
      c.top = static_cast<Elem>(
          std::find(members.begin(), members.end(), *l.top())
          - members.begin());
    }
    c.bottom = static_cast<Elem>(
        std::find(members.begin(), members.end(), u) - members.begin());
    sub = make_algebra(sub.names(), sub.meet_table(), sub.join_table(), c);
    return {CommutativeLattice(std::move(sub)), std::move(members)};
  }

  ArrowOutcome generalized_heyting_arrow(CommutativeLattice const& l) {
    ArrowOutcome out = heyting_arrow(l);
    if (!out.exists()) {
      return out;
    }
    for (Elem u = 0; u < l.size(); ++u) {
      auto [up, members] = principal_upset(l, u);
      ArrowOutcome local = heyting_arrow(up);
      bool         agree = local.exists();
      for (Elem i = 0; agree && i < members.size(); ++i) {
        for (Elem j = 0; agree && j < members.size(); ++j) {
          agree = members[(*local.arrow)(i, j)]
                  == (*out.arrow)(members[i], members[j]);
        }
      }
      if (!agree) {
        out.arrow.reset();
        out.failing_upset = u;
        return out;
      }
    }
    return out;
  }

  PropertyReport check_heyting_axioms(CommutativeLattice const& l,
                                      ArrowTable const&         arrow) {
    if (!l.top()) {
      throw Error(ErrorKind::NoTop, "lattice has no top");
    }
    if (arrow.size() != l.size()) {
      throw Error(ErrorKind::MalformedTable, "arrow table has wrong size");
    }
    std::size_t const n   = l.size();
    Elem const        one = *l.top();
    Table const&      M   = l.algebra().meet_table();
    Table const&      J   = l.algebra().join_table();
    Table const&      I   = arrow;
    PropertyReport    r;
    r.add(check_equations<1>(
        "H1",
        n,
        Equation{[&](Tuple<1> const& t) { return I(t[0], t[0]); },
                 [&](Tuple<1> const&) { return one; }}));
    r.add(check_equations<2>(
        "H2",
        n,
        Equation{[&](Tuple<2> const& t) { return M(t[0], I(t[0], t[1])); },
                 [&](Tuple<2> const& t) { return M(t[0], t[1]); }}));
    r.add(check_equations<2>(
        "H3",
        n,
        Equation{[&](Tuple<2> const& t) { return M(t[1], I(t[0], t[1])); },
                 [&](Tuple<2> const& t) { return t[1]; }}));
    r.add(check_equations<3>(
        "H4",
        n,
        Equation{[&](Tuple<3> const& t) { return I(t[0], M(t[1], t[2])); },
                 [&](Tuple<3> const& t) {
                   return M(I(t[0], t[1]), I(t[0], t[2]));
                 }}));
    // (x, y, z): x ^ y <= z  iff  x <= y -> z
    r.add(check_condition<3>("HA", n, [&](Tuple<3> const& t) {
      return (M(M(t[0], t[1]), t[2]) == M(t[0], t[1]))
             == (M(t[0], I(t[1], t[2])) == t[0]);
    }));
    r.add(check_equations<2>(
        "join-lemma",
        n,
        Equation{[&](Tuple<2> const& t) { return I(t[0], t[1]); },
                 [&](Tuple<2> const& t) { return I(J(t[0], t[1]), t[1]); }}));
    return r;
  }

  std::optional<Table> dual_gb_diff(CommutativeLattice const& l) {
    if (!l.top()) {
      return std::nullopt;
    }
    std::size_t const n   = l.size();
    Elem const        one = *l.top();
    Table             out(n);
    for (Elem y = 0; y < n; ++y) {
      for (Elem x = 0; x < n; ++x) {
        Elem const          w = l.join(y, x);
        std::optional<Elem> found;
        for (Elem c = 0; c < n; ++c) {
          if (l.join(w, c) == one && l.meet(w, c) == y) {
            if (found) {
              throw Error(ErrorKind::AmbiguousDiff,
                          l.algebra().name(*found) + " and "
                              + l.algebra().name(c) + " both solve "
                              + l.algebra().name(y) + " \\\\ "
                              + l.algebra().name(x));
            }
            found = c;
          }
        }
        if (!found) {
          return std::nullopt;
        }
        out.set(y, x, *found);
      }
    }
    return out;
  }

}  // namespace skh
