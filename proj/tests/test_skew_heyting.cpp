// skh - finite skew lattice and skew Heyting algebra workbench

#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "skh/error.hpp"
#include "skh/heyting.hpp"
#include "skh/models.hpp"
#include "skh/properties.hpp"
#include "skh/scan.hpp"
#include "skh/skew_heyting.hpp"

using namespace skh;

namespace {

  Elem at(Algebra const& a, std::string const& name) {
    auto e = a.find(name);
    REQUIRE(e.has_value());
    return *e;
  }

  Algebra rect2() {
    return make_algebra(
        {"a", "b"}, Table{{0, 0}, {1, 1}}, Table{{0, 1}, {0, 1}});
  }

  ErrorKind kind_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Usage;
  }

  // Co-strongly distributive skew lattices with top, from every model
  // family plus the small enumerated ones.
  std::vector<Algebra> instances() {
    std::vector<Algebra> out;
    out.push_back(chain_lattice(2));
    out.push_back(chain_lattice(3));
    out.push_back(boolean_lattice(2));
    out.push_back(adjoin_top(rect2(), "T"));
    out.push_back(adjoin_top(right_rectangular(3), "T"));
    out.push_back(partial_function_algebra(1, 2));
    out.push_back(partial_function_algebra(2, 2));
    out.push_back(partial_function_algebra(1, 3));
    out.push_back(partial_function_algebra(3, 1));
    out.push_back(partial_function_algebra(2, 3));
    out.push_back(sections_algebra(SurjectionModel::from_fibre_sizes({2, 1})));
    out.push_back(sections_algebra(SurjectionModel::from_fibre_sizes({3, 2})));
    out.push_back(direct_product(partial_function_algebra(1, 2), chain_lattice(2)));
    out.push_back(poset_sections_algebra(Poset::chain(2),
                                         SurjectionModel::from_fibre_sizes({2, 1}, {"a", "b"}))
                      .algebra);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (Algebra const& a : enumerate_skew_lattices(n)) {
        if (oracle::co_strongly_distributive(a) && oracle::top(a)) {
          out.push_back(a);
        }
      }
    }
    return out;
  }

  std::vector<Algebra> const& shared_instances() {
    static std::vector<Algebra> const v = instances();
    return v;
  }

  // The axioms at one tuple, for re-evaluating witnesses.
  bool sh_holds_at(std::string const& name,
                   Algebra const&     a,
                   Table const&       I,
                   std::vector<Elem> const& t) {
    Elem const one = *oracle::top(a);
    auto       uj  = [&](Elem u, Elem w) { return a.join(a.join(u, w), u); };
    if (name == "SH0") {
      return I(t[0], t[1]) == I(uj(t[1], t[0]), t[1]);
    }
    if (name == "SH1") {
      return I(t[0], t[0]) == one;
    }
    if (name == "SH2") {
      return a.meet(a.meet(t[0], I(t[0], t[1])), t[0])
             == a.meet(a.meet(t[0], t[1]), t[0]);
    }
    if (name == "SH3") {
      return a.meet(t[1], I(t[0], t[1])) == t[1]
             && a.meet(I(t[0], t[1]), t[1]) == t[1];
    }
    if (name == "SH4") {
      Elem x = t[0], u = t[1], y = t[2], z = t[3];
      return I(x, uj(u, a.meet(y, z))) == a.meet(I(x, uj(u, y)), I(x, uj(u, z)));
    }
    if (name == "SHA") {
      Elem x = t[0], y = t[1], z = t[2];
      return oracle::preceq(a, x, I(y, z)) == oracle::preceq(a, a.meet(x, y), z);
    }
    FAIL("no oracle for " << name);
    return false;
  }

}  // namespace

TEST_CASE("derive_arrow equals the brute-force arrow on every instance") {
  for (Algebra const& a : shared_instances()) {
    CAPTURE(a.size());
    DerivedArrow const d = derive_arrow(a);
    REQUIRE(d.exists());
    auto const expect = oracle::derived_arrow(a);
    REQUIRE(expect.has_value());
    CHECK(*d.arrow == *expect);
    Elem const one = *oracle::top(a);
    for (Elem x = 0; x < a.size(); ++x) {
      CHECK((*d.arrow)(x, x) == one);
      for (Elem y = 0; y < a.size(); ++y) {
        CHECK(oracle::leq(a, y, (*d.arrow)(x, y)));
      }
    }
  }
}

TEST_CASE("derive_arrow on partial maps is g restricted to dom g - dom f") {
  for (auto [x, y] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    Algebra const      pf = partial_function_algebra(x, y);
    DerivedArrow const d  = derive_arrow(pf);
    REQUIRE(d.exists());
    auto const maps = oracle::all_partial_maps(x, y);
    REQUIRE(maps.size() == pf.size());
    for (auto const& f : maps) {
      for (auto const& g : maps) {
        Elem const fe = at(pf, oracle::pmap_name(f));
        Elem const ge = at(pf, oracle::pmap_name(g));
        CHECK(pf.name((*d.arrow)(fe, ge)) == oracle::pmap_name(oracle::pf_arrow(f, g)));
        CHECK(pf.arrow(fe, ge) == (*d.arrow)(fe, ge));
      }
    }
  }
  Algebra const pf12 = partial_function_algebra(1, 2);
  Table const   ar   = *derive_arrow(pf12).arrow;
  CHECK(ar(at(pf12, "{p:0}"), at(pf12, "{p:1}")) == at(pf12, "{}"));
  Algebra const pf22 = partial_function_algebra(2, 2);
  CHECK(pf22.arrow(at(pf22, "{p:0}"), at(pf22, "{p:1,q:0}")) == at(pf22, "{q:0}"));
}

TEST_CASE("derive_arrow rejects reducts outside its domain") {
  CHECK(kind_of([] { derive_arrow(n5()); }) == ErrorKind::NotCoStronglyDistributive);
  REQUIRE(oracle::co_strongly_distributive(rect2()));
  CHECK(kind_of([] { derive_arrow(rect2()); }) == ErrorKind::NoTop);
  Algebra const not_skew
      = make_algebra(2, Table{{0, 0}, {1, 1}}, Table{{0, 1}, {1, 1}});
  CHECK(kind_of([&] { derive_arrow(not_skew); })
        == ErrorKind::NotCoStronglyDistributive);
}

TEST_CASE("upsets") {
  Algebra const pf = partial_function_algebra(2, 2);
  for (Elem u = 0; u < pf.size(); ++u) {
    Upset const       up(pf, u);
    std::vector<Elem> expect;
    for (Elem x = 0; x < pf.size(); ++x) {
      if (oracle::leq(pf, u, x)) {
        expect.push_back(x);
      }
    }
    CHECK(up.members() == expect);
    CHECK(up.base_point() == u);
    CHECK(up.global(*up.lattice().bottom()) == u);
    CHECK(up.global(*up.lattice().top()) == at(pf, "{}"));
    for (Elem x = 0; x < pf.size(); ++x) {
      CHECK(up.contains(x) == oracle::leq(pf, u, x));
    }
  }
  // the upset of a total map on {p, q} is the Boolean lattice of its
  // restrictions
  Upset const full(pf, at(pf, "{p:1,q:0}"));
  CHECK(full.members().size() == 4);
  CHECK(oracle::isomorphic(full.lattice().algebra(), boolean_lattice(2)));
}

TEST_CASE("derived arrow restricted to an upset is the upset's Heyting arrow") {
  for (Algebra const& a : shared_instances()) {
    Table const ar = *derive_arrow(a).arrow;
    for (Elem u = 0; u < a.size(); ++u) {
      Upset const  up(a, u);
      auto const   local = heyting_arrow(up.lattice());
      REQUIRE(local.exists());
      for (Elem i = 0; i < up.members().size(); ++i) {
        for (Elem j = 0; j < up.members().size(); ++j) {
          CHECK(ar(up.global(i), up.global(j)) == up.global((*local.arrow)(i, j)));
        }
      }
    }
  }
}

TEST_CASE("SH axioms, SHA, imp-or, lifting and congruences on every instance") {
  for (Algebra const& a : shared_instances()) {
    CAPTURE(a.size());
    Table const ar = *derive_arrow(a).arrow;
    PropertyReport all = check_sh_axioms(a, ar);
    all.append(check_sha(a, ar));
    all.append(check_imp_or(a, ar));
    all.append(check_lifting(a));
    all.append(check_arrow_congruences(a, ar));
    for (auto const& e : all.entries()) {
      CHECK_MESSAGE(e.holds(), e.name << " " << e.note);
      if (e.holds() && e.tuple_space > 0) {
        CHECK(e.tuples_checked == e.tuple_space);
      }
    }
    CHECK(all.at("SH4").tuple_space == tuple_space(a.size(), 4));

    // D-related inputs give D-related outputs, by brute force
    auto d = [&](Elem x, Elem y) {
      return oracle::preceq(a, x, y) && oracle::preceq(a, y, x);
    };
    for (Elem p = 0; p < a.size(); ++p) {
      for (Elem q = 0; q < a.size(); ++q) {
        for (Elem r = 0; r < a.size(); ++r) {
          if (!d(p, r)) {
            continue;
          }
          for (Elem s = 0; s < a.size(); ++s) {
            if (d(q, s)) {
              CHECK(d(ar(p, q), ar(r, s)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("classical arrow on CHAIN2 satisfies the SH axioms") {
  Algebra const c = chain_lattice(2);
  Table const   classical{{1, 1}, {0, 1}};
  CHECK(check_sh_axioms(c, classical).all_hold());
  CHECK(check_sha(c, classical).all_hold());
  // (x v y) -> z = (x -> z) ^ (y -> z)
  PropertyReport const r = check_imp_or(c, classical);
  CHECK(r.all_hold());
  for (Elem x = 0; x < 2; ++x) {
    for (Elem y = 0; y < 2; ++y) {
      for (Elem z = 0; z < 2; ++z) {
        CHECK(classical(c.join(x, y), z) == c.meet(classical(x, z), classical(y, z)));
      }
    }
  }
}

TEST_CASE("SHA on PF12: arrow is top exactly on preceq pairs") {
  Algebra const pf = partial_function_algebra(1, 2);
  Table const   ar = *derive_arrow(pf).arrow;
  Elem const    p0 = at(pf, "{p:0}"), p1 = at(pf, "{p:1}");
  CHECK(ar(p0, p1) == at(pf, "{}"));
  CHECK(oracle::preceq(pf, p0, p1));
  CHECK(check_sha(pf, ar).all_hold());
}

TEST_CASE("single-entry arrow mutations are caught by SH0-SH4 or SHA") {
  std::mt19937 rng(7);
  for (Algebra const& a : shared_instances()) {
    if (a.size() < 2) {
      continue;
    }
    CAPTURE(a.size());
    Table const                        good = *derive_arrow(a).arrow;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(a.size() - 1));
    std::size_t const                  wanted
        = std::min<std::size_t>(40, a.size() * a.size() * (a.size() - 1));
    for (std::size_t k = 0; k < wanted; ++k) {
      Elem const x = pick(rng), y = pick(rng);
      Elem       v = pick(rng);
      if (v == good(x, y)) {
        v = (v + 1) % a.size();
      }
      Table bad = good;
      bad.set(x, y, v);
      PropertyReport r = check_sh_axioms(a, bad);
      r.append(check_sha(a, bad));
      bool caught = false;
      for (auto const* name : {"SH0", "SH1", "SH2", "SH3", "SH4", "SHA"}) {
        PropertyEntry const& e = r.at(name);
        if (e.fails()) {
          caught = true;
          CHECK_FALSE(sh_holds_at(name, a, bad, e.witness));
        }
      }
      CHECK(caught);
    }
  }
}

TEST_CASE("every mutation of the PF22 arrow is caught") {
  Algebra const pf   = partial_function_algebra(2, 2);
  Table const   good = pf.arrow_table();
  std::size_t   caught = 0, total = 0;
  for (Elem x = 0; x < 9; ++x) {
    for (Elem y = 0; y < 9; ++y) {
      for (Elem v = 0; v < 9; ++v) {
        if (v == good(x, y)) {
          continue;
        }
        Table bad = good;
        bad.set(x, y, v);
        PropertyReport r = check_sh_axioms(pf, bad);
        r.append(check_sha(pf, bad));
        ++total;
        caught += !r.at("SH0").holds() || !r.at("SH1").holds()
                  || !r.at("SH2").holds() || !r.at("SH3").holds()
                  || !r.at("SH4").holds() || !r.at("SHA").holds();
      }
    }
  }
  CHECK(total == 648);
  CHECK(caught == total);
}

TEST_CASE("sha-sufficiency compares a supplied arrow with the derived one") {
  Algebra const pf = partial_function_algebra(2, 2);
  CHECK(check_sha(pf, pf.arrow_table()).at("sha-sufficiency").holds());
  CHECK(check_sha(rect2(), Table(2)).at("sha-sufficiency").verdict
        == Verdict::Skipped);
}

TEST_CASE("lifting on the named examples") {
  for (Algebra const& a :
       {partial_function_algebra(2, 2), adjoin_top(rect2(), "T"), chain_lattice(2)}) {
    PropertyReport const r = check_lifting(a);
    CHECK(r.at("lifting-biconditional").note == "both arrows exist");
    CHECK(r.at("upset-isomorphism").holds());
  }
}

TEST_CASE("arrow congruences on PF22") {
  Algebra const        pf = partial_function_algebra(2, 2);
  PropertyReport const r  = check_arrow_congruences(pf, pf.arrow_table());
  for (auto const* name : {"D-congruence", "L-congruence", "R-congruence",
                           "D-quotient-arrow", "L-quotient-arrow",
                           "R-quotient-arrow", "three-way-equivalence"}) {
    CHECK_MESSAGE(r.holds(name), name);
  }
  Algebra const pl = quotient(pf, greens(pf).L).algebra;
  CHECK(derive_arrow(pl).exists());
  CHECK(check_arrow_congruences(chain_lattice(2), Table{{1, 1}, {0, 1}}).all_hold());
}

TEST_CASE("special-case formulas") {
  SUBCASE("T3: rectangular pair under a top is a skew chain") {
    Algebra const        t3 = adjoin_top(rect2(), "T");
    PropertyReport const r  = special_case_arrows(t3);
    CHECK(r.holds("case2-skew-chain"));
    Table const ar = *derive_arrow(t3).arrow;
    Elem const  T  = at(t3, "T");
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        CHECK(ar(x, y) == (oracle::preceq(t3, x, y) ? T : y));
      }
    }
  }
  SUBCASE("PF22: not a skew chain, Case 3 applies") {
    PropertyReport const r = special_case_arrows(partial_function_algebra(2, 2));
    CHECK(r.at("case2-skew-chain").verdict == Verdict::Skipped);
    CHECK(r.holds("case3-dual-skew-boolean"));
  }
  SUBCASE("CHAIN2: both apply") {
    PropertyReport const r = special_case_arrows(chain_lattice(2));
    CHECK(r.holds("case2-skew-chain"));
    CHECK(r.holds("case3-dual-skew-boolean"));
  }
  SUBCASE("3-chain: only Case 2") {
    PropertyReport const r = special_case_arrows(chain_lattice(3));
    CHECK(r.holds("case2-skew-chain"));
    CHECK(r.at("case3-dual-skew-boolean").verdict == Verdict::Skipped);
  }
}

TEST_CASE("verify_suite") {
  Algebra const        pf = partial_function_algebra(2, 2);
  PropertyReport const r  = verify_suite(pf);
  CHECK(r.contains("arrow-matches-derived"));
  for (auto const& e : r.entries()) {
    CHECK_MESSAGE(e.verdict != Verdict::Fails, e.name);
  }

  Table bad = pf.arrow_table();
  bad.set(1, 2, bad(1, 2) == 0 ? 1 : 0);
  PropertyReport const rb = verify_suite(pf.with_arrow(bad));
  CHECK(rb.at("arrow-matches-derived").fails());
  CHECK(rb.at("arrow-matches-derived").witness == std::vector<Elem>{1, 2});

  PropertyReport const rn = verify_suite(n5());
  CHECK(rn.at("co-strongly-distributive").fails());
  CHECK_FALSE(rn.contains("SH0"));

  PropertyReport const rr = verify_suite(rect2());
  CHECK(rr.at("has-top").fails());
}
