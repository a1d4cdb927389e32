// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/skew_heyting.hpp"

#include <algorithm>
#include <set>

#include "skh/error.hpp"
#include "skh/identity.hpp"
#include "skh/properties.hpp"

namespace skh {

  namespace {

    // Throws unless a is a co-strongly distributive skew lattice with top;
    // returns the top.
    Elem require_reduct(Algebra const& a) {
      PropertyEntry const sl = check_skew_lattice(a);
      if (!sl.holds()) {
        throw Error(ErrorKind::NotCoStronglyDistributive,
                    "not a skew lattice (" + sl.note + ")");
      }
      PropertyEntry const csd = check_co_strongly_distributive(a);
      if (!csd.holds()) {
        std::string w;
        for (Elem x : csd.witness) {
          w += (w.empty() ? "" : ", ") + a.name(x);
        }
        throw Error(ErrorKind::NotCoStronglyDistributive,
                    "co-strong distributivity fails at (" + w + ")");
      }
      auto const top = find_top(a);
      if (!top) {
        throw Error(ErrorKind::NoTop, "the skew lattice has no top");
      }
      return *top;
    }

    // First pair where two tables differ, if any.
    std::optional<std::pair<Elem, Elem>> first_difference(Table const& s,
                                                          Table const& t) {
      for (Elem x = 0; x < s.size(); ++x) {
        for (Elem y = 0; y < s.size(); ++y) {
          if (s(x, y) != t(x, y)) {
            return std::pair{x, y};
          }
        }
      }
      return std::nullopt;
    }

    PropertyEntry table_agreement(std::string       name,
                                  Table const&      expected,
                                  Table const&      actual,
                                  std::string const& note = {}) {
      PropertyEntry e;
      e.name        = std::move(name);
      e.tuple_space = tuple_space(expected.size(), 2);
      if (auto d = first_difference(expected, actual)) {
        e.verdict        = Verdict::Fails;
        e.witness        = {d->first, d->second};
        e.lhs            = actual(d->first, d->second);
        e.rhs            = expected(d->first, d->second);
        e.tuples_checked = d->first * expected.size() + d->second + 1;
        e.note           = note;
      } else {
        e.tuples_checked = e.tuple_space;
      }
      return e;
    }

  }  // namespace

  Upset::Upset(Algebra const& base, Elem u) : _u(u) {
    std::size_t const n = base.size();
    std::set<Elem>    via_join;
    for (Elem x = 0; x < n; ++x) {
      via_join.insert(base.join(base.join(u, x), u));
      if (base.join(u, x) == x && base.join(x, u) == x) {
        _members.push_back(x);
      }
    }
    if (!std::equal(
            via_join.begin(), via_join.end(), _members.begin(), _members.end())) {
      throw Error(ErrorKind::PreconditionFailed,
                  "{u v x v u} and {x : u <= x} differ for u = "
                      + base.name(u));
    }
    _local.assign(n, kAbsent);
    for (Elem i = 0; i < _members.size(); ++i) {
      _local[_members[i]] = i;
    }
    Algebra   sub = subalgebra(base.without_arrow(), _members);
    Constants c;
    c.bottom = _local[u];
    if (auto top = find_top(base); top && contains(*top)) {
      c.top = _local[*top];
    }
    _lattice = std::make_shared<CommutativeLattice>(
        make_algebra(sub.names(), sub.meet_table(), sub.join_table(), c));
  }

  DerivedArrow derive_arrow(Algebra const& a) {
    require_reduct(a);
    Algebra const      plain = a.without_arrow();
    std::size_t const  n     = a.size();
    std::vector<Upset> upsets;
    std::vector<Table> local_arrows;
    upsets.reserve(n);
    local_arrows.reserve(n);
    for (Elem u = 0; u < n; ++u) {
      try {
        upsets.emplace_back(plain, u);
      } catch (Error const& e) {
        throw Error(ErrorKind::InconsistencyDetected,
                    "upset of a co-strongly distributive skew lattice is not "
                    "a commutative lattice: "
                        + std::string(e.what()));
      }
      ArrowOutcome local = heyting_arrow(upsets.back().lattice());
      if (!local.exists()) {
        return DerivedArrow{std::nullopt, u};
      }
      local_arrows.push_back(std::move(*local.arrow));
    }

    Table arrow(n);
    for (Elem y = 0; y < n; ++y) {
      Upset const& up = upsets[y];
      Table const& ar = local_arrows[y];
      for (Elem x = 0; x < n; ++x) {
        Elem const w = a.join(a.join(y, x), y);
        arrow.set(x, y, up.global(ar(up.local(w), up.local(y))));
      }
    }

    for (Elem u = 0; u < n; ++u) {
      Upset const& up = upsets[u];
      Table const& ar = local_arrows[u];
      for (Elem x : up.members()) {
        for (Elem y : up.members()) {
          if (arrow(x, y) != up.global(ar(up.local(x), up.local(y)))) {
            throw Error(ErrorKind::CoherenceFailure,
                        a.name(x) + " -> " + a.name(y)
                            + " differs from the implication inside the "
                              "upset of "
                            + a.name(u));
          }
        }
      }
    }
    return DerivedArrow{std::move(arrow), std::nullopt};
  }

  PropertyReport check_sh_axioms(Algebra const& a, ArrowTable const& arrow) {
    auto const top = find_top(a);
    if (!top) {
      throw Error(ErrorKind::NoTop, "SH1 needs a top");
    }
    if (arrow.size() != a.size()) {
      throw Error(ErrorKind::MalformedTable, "arrow table has wrong size");
    }
    std::size_t const n   = a.size();
    Elem const        one = *top;
    Table const&      M   = a.meet_table();
    Table const&      J   = a.join_table();
    Table const&      I   = arrow;
    // u v w v u
    Table const UJ = Table::from_function(
        n, [&](Elem u, Elem w) { return J(J(u, w), u); });

    PropertyReport r;
    r.add(check_equations<2>(
        "SH0",
        n,
        Equation{[&](Tuple<2> const& t) { return I(t[0], t[1]); },
                 [&](Tuple<2> const& t) {
                   return I(UJ(t[1], t[0]), t[1]);
                 }}));
    r.add(check_equations<1>(
        "SH1",
        n,
        Equation{[&](Tuple<1> const& t) { return I(t[0], t[0]); },
                 [&](Tuple<1> const&) { return one; }}));
    r.add(check_equations<2>(
        "SH2",
        n,
        Equation{[&](Tuple<2> const& t) {
                   return M(M(t[0], I(t[0], t[1])), t[0]);
                 },
                 [&](Tuple<2> const& t) { return M(M(t[0], t[1]), t[0]); }}));
    r.add(check_equations<2>(
        "SH3",
        n,
        Equation{[&](Tuple<2> const& t) { return M(t[1], I(t[0], t[1])); },
                 [&](Tuple<2> const& t) { return t[1]; }},
        Equation{[&](Tuple<2> const& t) { return M(I(t[0], t[1]), t[1]); },
                 [&](Tuple<2> const& t) { return t[1]; }}));
    // tuples are (x, u, y, z)
    r.add(check_equations<4>(
        "SH4",
        n,
        Equation{[&](Tuple<4> const& t) {
                   return I(t[0], UJ(t[1], M(t[2], t[3])));
                 },
                 [&](Tuple<4> const& t) {
                   return M(I(t[0], UJ(t[1], t[2])), I(t[0], UJ(t[1], t[3])));
                 }}));
    r.add(check_equations<4>(
        "SH4'",
        n,
        Equation{[&](Tuple<4> const& t) {
                   return I(UJ(t[1], t[0]), UJ(t[1], M(t[2], t[3])));
                 },
                 [&](Tuple<4> const& t) {
                   Elem const ux = UJ(t[1], t[0]);
                   return M(I(ux, UJ(t[1], t[2])), I(ux, UJ(t[1], t[3])));
                 }}));
    return r;
  }

  PropertyReport check_sha(Algebra const& a, ArrowTable const& arrow) {
    std::size_t const n   = a.size();
    Table const&      M   = a.meet_table();
    Table const&      J   = a.join_table();
    Table const&      I   = arrow;
    Relation const    pre = natural_preorder(a);
    auto const        leq = [&](Elem x, Elem y) {
      return J(x, y) == y && J(y, x) == y;
    };

    PropertyReport r;
    PropertyEntry  sha
        = check_condition<3>("SHA", n, [&](Tuple<3> const& t) {
            return pre(t[0], I(t[1], t[2])) == pre(M(t[0], t[1]), t[2]);
          });
    r.add(sha);
    auto const top = find_top(a);
    if (top) {
      r.add(check_condition<2>(
          "arrow-top-iff-preceq", n, [&](Tuple<2> const& t) {
            return (I(t[0], t[1]) == *top) == pre(t[0], t[1]);
          }));
    } else {
      r.add(skipped("arrow-top-iff-preceq", "no top"));
    }
    PropertyEntry y_below
        = check_condition<2>("y-leq-arrow", n, [&](Tuple<2> const& t) {
            return leq(t[1], I(t[0], t[1]));
          });
    r.add(y_below);

    std::string const name = "sha-sufficiency";
    if (!top || !check_skew_lattice(a).holds()
        || !check_co_strongly_distributive(a).holds()) {
      r.add(skipped(name, "reduct is not a co-strongly distributive skew "
                          "lattice with top"));
    } else if (!sha.holds() || !y_below.holds()) {
      r.add(skipped(name, "SHA or y <= x -> y fails"));
    } else {
      DerivedArrow const derived = derive_arrow(a);
      if (!derived.exists()) {
        r.add(failing(name,
                      "conditions hold but no arrow derives",
                      {*derived.failing_upset}));
      } else {
        r.add(table_agreement(name,
                              *derived.arrow,
                              arrow,
                              "supplied arrow (lhs) differs from the derived "
                              "arrow (rhs)"));
      }
    }
    return r;
  }

  PropertyReport check_imp_or(Algebra const& a, ArrowTable const& arrow) {
    Table const&   M = a.meet_table();
    Table const&   J = a.join_table();
    Table const&   I = arrow;
    PropertyReport r;
    r.add(check_equations<3>(
        "imp-or",
        a.size(),
        Equation{[&](Tuple<3> const& t) {
                   return I(J(J(t[0], t[1]), t[0]), t[2]);
                 },
                 [&](Tuple<3> const& t) {
                   Elem const xz = I(t[0], t[2]);
                   return M(M(xz, I(t[1], t[2])), xz);
                 }}));
    return r;
  }

  PropertyReport check_lifting(Algebra const& a) {
    require_reduct(a);
    Algebra const      plain   = a.without_arrow();
    DerivedArrow const derived = derive_arrow(plain);
    Greens const       g       = greens(plain);
    Quotient const     q       = quotient(plain, g.D);
    CommutativeLattice ql(q.algebra);
    ArrowOutcome const gen = generalized_heyting_arrow(ql);

    if (derived.exists() != gen.exists()) {
      throw Error(ErrorKind::InconsistencyDetected,
                  std::string("arrow on a ")
                      + (derived.exists() ? "exists" : "does not exist")
                      + " but the generalized Heyting arrow on a/D "
                      + (gen.exists() ? "exists" : "does not exist"));
    }
    PropertyReport r;
    r.add(holding("lifting-biconditional",
                  derived.exists() ? "both arrows exist"
                                   : "neither arrow exists"));

    std::string const name = "upset-isomorphism";
    std::size_t const n    = a.size();
    for (Elem u = 0; u < n; ++u) {
      Upset const up(plain, u);
      auto const [qup, qmembers]
          = principal_upset(ql, static_cast<Elem>(g.D.block_of(u)));
      std::vector<Elem> image;
      for (Elem x : up.members()) {
        image.push_back(static_cast<Elem>(g.D.block_of(x)));
      }
      std::vector<Elem> sorted = image;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != qmembers) {
        r.add(failing(name, "projection is not a bijection onto D_u-up", {u}));
        return r;
      }
      for (Elem x : up.members()) {
        for (Elem y : up.members()) {
          Elem const px = g.D.block_of(x), py = g.D.block_of(y);
          if (g.D.block_of(a.meet(x, y)) != q.algebra.meet(px, py)
              || g.D.block_of(a.join(x, y)) != q.algebra.join(px, py)) {
            r.add(failing(name, "lattice operations not preserved", {u, x, y}));
            return r;
          }
          if (derived.exists()
              && g.D.block_of((*derived.arrow)(x, y)) != (*gen.arrow)(px, py)) {
            r.add(failing(name, "implication not preserved", {u, x, y}));
            return r;
          }
        }
      }
    }
    PropertyEntry ok  = holding(name);
    ok.tuples_checked = ok.tuple_space = n;
    r.add(ok);
    return r;
  }

  PropertyReport check_arrow_congruences(Algebra const&    a,
                                         ArrowTable const& arrow) {
    Algebra const  plain = a.without_arrow();
    Algebra const  full  = plain.with_arrow(arrow);
    Greens const   g     = greens(plain);
    PropertyReport r;

    struct Rel {
      char const*      name;
      Partition const* p;
    };
    bool lr_congruent = true;
    for (Rel rel : {Rel{"D", &g.D}, Rel{"L", &g.L}, Rel{"R", &g.R}}) {
      std::string const cname = std::string(rel.name) + "-congruence";
      if (auto w = congruence_witness(full, *rel.p)) {
        r.add(failing(cname, "fails for " + w->op, {w->a, w->b, w->c, w->d}));
        r.add(skipped(std::string(rel.name) + "-quotient-arrow",
                      "not a congruence"));
        lr_congruent = lr_congruent && rel.p == &g.D;
        continue;
      }
      PropertyEntry ok  = holding(cname);
      ok.tuples_checked = ok.tuple_space = tuple_space(a.size(), 2);
      r.add(ok);

      Quotient const     q = quotient(full, *rel.p);
      DerivedArrow const d = derive_arrow(q.algebra.without_arrow());
      std::string const  qname = std::string(rel.name) + "-quotient-arrow";
      if (!d.exists()) {
        r.add(failing(qname, "quotient has no derived arrow"));
      } else {
        PropertyEntry e = table_agreement(
            qname,
            *d.arrow,
            q.algebra.arrow_table(),
            "induced arrow (lhs) differs from the quotient's derived arrow "
            "(rhs); elements are representatives");
        for (auto& w : e.witness) {
          w = rel.p->block(w)[0];
        }
        if (e.fails()) {
          e.lhs = rel.p->block(*e.lhs)[0];
          e.rhs = rel.p->block(*e.rhs)[0];
        }
        r.add(e);
      }
    }

    std::string const name = "three-way-equivalence";
    if (!lr_congruent) {
      r.add(skipped(name, "L or R is not a congruence"));
    } else {
      bool const on_a = derive_arrow(plain).exists();
      bool const on_l
          = derive_arrow(quotient(plain, g.L).algebra).exists();
      bool const on_r
          = derive_arrow(quotient(plain, g.R).algebra).exists();
      if (on_a == on_l && on_l == on_r) {
        r.add(holding(name, on_a ? "all three derivable"
                                 : "none of the three derivable"));
      } else {
        r.add(failing(name, "a, a/L, a/R disagree on derivability"));
      }
    }
    return r;
  }

  PropertyReport special_case_arrows(Algebra const& a) {
    Elem const         one     = require_reduct(a);
    Algebra const      plain   = a.without_arrow();
    DerivedArrow const derived = derive_arrow(plain);
    PropertyReport     r;
    if (!derived.exists()) {
      r.add(skipped("case2-skew-chain", "no derived arrow"));
      r.add(skipped("case3-dual-skew-boolean", "no derived arrow"));
      return r;
    }
    Table const&      I   = *derived.arrow;
    Table const&      J   = a.join_table();
    std::size_t const n   = a.size();
    Relation const    pre = natural_preorder(plain);

    bool total = true;
    for (Elem x = 0; x < n && total; ++x) {
      for (Elem y = 0; y < n && total; ++y) {
        total = pre(x, y) || pre(y, x);
      }
    }
    if (!total) {
      r.add(skipped("case2-skew-chain", "a/D is not a chain"));
    } else {
      // x -> y = 1 if x <~ y, y otherwise
      r.add(check_equations<2>(
          "case2-skew-chain",
          n,
          Equation{[&](Tuple<2> const& t) { return I(t[0], t[1]); },
                   [&](Tuple<2> const& t) {
                     return pre(t[0], t[1]) ? one : t[1];
                   }}));
    }

    std::string const    name = "case3-dual-skew-boolean";
    std::optional<Table> ddiff;
    try {
      ddiff = solve_dual_skew_diff(plain);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::AmbiguousDiff) {
        throw;
      }
      r.add(failing(name, e.what()));
      return r;
    }
    if (!ddiff) {
      r.add(skipped(name, "no dual skew Boolean difference"));
    } else if (!check_dual_skew_boolean(plain, *ddiff).all_hold()) {
      r.add(skipped(name, "difference does not satisfy the dual skew Boolean "
                          "identities"));
    } else {
      Table const& D = *ddiff;
      // x -> y = y \\ (y v x v y), and = y \\ x
      r.add(check_equations<2>(
          name,
          n,
          Equation{[&](Tuple<2> const& t) { return I(t[0], t[1]); },
                   [&](Tuple<2> const& t) {
                     return D(t[1], J(J(t[1], t[0]), t[1]));
                   }},
          Equation{[&](Tuple<2> const& t) { return I(t[0], t[1]); },
                   [&](Tuple<2> const& t) { return D(t[1], t[0]); }}));
    }
    return r;
  }

  PropertyReport verify_suite(Algebra const& a) {
    PropertyReport r;
    Algebra const  plain = a.without_arrow();
    PropertyEntry  sl    = check_skew_lattice(plain);
    PropertyEntry  csd   = check_co_strongly_distributive(plain);
    auto const     top   = find_top(plain);
    r.add(sl);
    r.add(csd);
    r.add(top ? holding(std::string(kHasTop))
              : failing(std::string(kHasTop), "no top element"));
    if (!sl.holds() || !csd.holds() || !top) {
      return r;
    }

    DerivedArrow const derived = derive_arrow(plain);
    if (!derived.exists()) {
      r.add(failing("arrow-derivable",
                    "some upset is not a Heyting algebra",
                    {*derived.failing_upset}));
      return r;
    }
    r.add(holding("arrow-derivable"));
    Table arrow = *derived.arrow;
    if (a.has_arrow()) {
      r.add(table_agreement("arrow-matches-derived",
                            *derived.arrow,
                            a.arrow_table(),
                            "supplied arrow (lhs) differs from the derived "
                            "arrow (rhs)"));
      arrow = a.arrow_table();
    }
    r.append(check_sh_axioms(plain, arrow));
    r.append(check_sha(plain, arrow));
    r.append(check_imp_or(plain, arrow));
    r.append(check_lifting(plain));
    r.append(check_arrow_congruences(plain, arrow));
    r.append(special_case_arrows(plain));
    PullbackResult const pb = pullback_check(plain);
    if (pb.holds) {
      r.add(holding("pullback"));
    } else {
      r.add(failing("pullback", pb.reason, pb.witness));
    }
    return r;
  }

}  // namespace skh
