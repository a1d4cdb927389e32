// skh - finite skew lattice and skew Heyting algebra workbench

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "skh/error.hpp"
#include "skh/heyting.hpp"
#include "skh/models.hpp"
#include "skh/properties.hpp"
#include "skh/skew_heyting.hpp"

using namespace skh;

namespace {

  Elem at(Algebra const& a, std::string const& name) {
    auto e = a.find(name);
    REQUIRE(e.has_value());
    return *e;
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

  PartialMap to_partial(oracle::PMap const& f, std::size_t points) {
    PartialMap p;
    p.values.resize(points);
    for (auto [k, v] : f) {
      p.values[k] = static_cast<std::size_t>(v);
    }
    return p;
  }

  // Partial orders on n labelled points, by brute force over relations,
  // counted up to isomorphism.
  std::size_t count_posets(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          off.emplace_back(i, j);
        }
      }
    }
    std::vector<std::size_t> perm(n);
    std::set<std::vector<bool>> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << off.size()); ++code) {
      std::vector<bool> r(n * n, false);
      for (std::size_t i = 0; i < n; ++i) {
        r[i * n + i] = true;
      }
      for (std::size_t k = 0; k < off.size(); ++k) {
        if (code >> k & 1) {
          r[off[k].first * n + off[k].second] = true;
        }
      }
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (i != j && r[i * n + j] && r[j * n + i]) {
            ok = false;
          }
          for (std::size_t k = 0; k < n && ok; ++k) {
            ok = !(r[i * n + j] && r[j * n + k]) || r[i * n + k];
          }
        }
      }
      if (!ok) {
        continue;
      }
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<bool> best;
      do {
        std::vector<bool> s(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            s[perm[i] * n + perm[j]] = r[i * n + j];
          }
        }
        if (best.empty() || s < best) {
          best = s;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    return classes.size();
  }

  Poset two_chain() {
    return Poset::chain(2);
  }

}  // namespace

TEST_CASE("partial map operations follow the closed forms") {
  auto const maps = oracle::all_partial_maps(3, 2);
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      PartialMap const pf = to_partial(f, 3), pg = to_partial(g, 3);
      CHECK(partial_meet(pf, pg) == to_partial(oracle::pf_meet(f, g), 3));
      CHECK(partial_join(pf, pg) == to_partial(oracle::pf_join(f, g), 3));
      CHECK(partial_arrow(pf, pg) == to_partial(oracle::pf_arrow(f, g), 3));
    }
  }
  PartialMap const f = to_partial({{0, 1}, {2, 0}}, 3);
  CHECK(f.domain_mask() == 0b101);
  CHECK(f.restrict_to(0b100) == to_partial({{2, 0}}, 3));
}

TEST_CASE("point names") {
  auto const n = point_names(10);
  CHECK(n[0] == "p");
  CHECK(n[1] == "q");
  CHECK(n.size() == 10);
  CHECK(std::set<std::string>(n.begin(), n.end()).size() == 10);
}

TEST_CASE("partial function algebras") {
  SUBCASE("PF12") {
    Algebra const pf = partial_function_algebra(1, 2);
    CHECK(pf.names() == std::vector<std::string>{"{}", "{p:0}", "{p:1}"});
    CHECK(pf.meet(at(pf, "{p:0}"), at(pf, "{p:1}")) == at(pf, "{p:0}"));
    CHECK(pf.top() == at(pf, "{}"));
  }
  SUBCASE("PF22 element order and operations") {
    Algebra const pf = partial_function_algebra(2, 2);
    CHECK(pf.names()
          == std::vector<std::string>{"{}", "{p:0}", "{p:1}", "{q:0}",
                                      "{p:0,q:0}", "{p:1,q:0}", "{q:1}",
                                      "{p:0,q:1}", "{p:1,q:1}"});
    auto const maps = oracle::all_partial_maps(2, 2);
    for (auto const& f : maps) {
      for (auto const& g : maps) {
        Elem const x = at(pf, oracle::pmap_name(f)), y = at(pf, oracle::pmap_name(g));
        CHECK(pf.name(pf.meet(x, y)) == oracle::pmap_name(oracle::pf_meet(f, g)));
        CHECK(pf.name(pf.join(x, y)) == oracle::pmap_name(oracle::pf_join(f, g)));
        CHECK(pf.name(pf.arrow(x, y)) == oracle::pmap_name(oracle::pf_arrow(f, g)));
      }
    }
  }
  SUBCASE("sizes and classification over a range of shapes") {
    for (std::size_t x = 1; x <= 3; ++x) {
      for (std::size_t y = 1; y <= 3; ++y) {
        Algebra const pf = partial_function_algebra(x, y);
        std::size_t   expect = 1;
        for (std::size_t i = 0; i < x; ++i) {
          expect *= y + 1;
        }
        CHECK(pf.size() == expect);
        if (pf.size() > 27) {
          continue;
        }
        PropertyReport const r = classify(pf);
        for (auto const* p : {"skew-lattice", "co-strongly-distributive",
                              "symmetric", "conormal", "quasi-distributive",
                              "has-top"}) {
          CHECK_MESSAGE(r.holds(p), p << " on PF" << x << y);
        }
        CHECK(pf.arrow_table() == *derive_arrow(pf).arrow);
      }
    }
  }
  SUBCASE("handedness is computed, and comes out left") {
    for (auto [x, y] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
      Algebra const pf = partial_function_algebra(x, y);
      Greens const  g  = greens(pf);
      // f L g iff f ^ g = f and g ^ f = g, which for same-domain maps is
      // immediate from the meet keeping its first argument's values
      CHECK(g.L == g.D);
      CHECK(g.R.is_discrete());
      CHECK_FALSE(g.D.is_discrete());
    }
  }
  SUBCASE("bounds and bad shapes") {
    CHECK(kind_of([] { partial_function_algebra(4, 9, 1000); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { partial_function_algebra(0, 2); })
          == ErrorKind::PreconditionFailed);
    CHECK(partial_function_algebra(1, 99).size() == 100);
  }
}

TEST_CASE("section algebras") {
  SUBCASE("coordinate projection recovers partial maps") {
    for (auto [x, y] : {std::pair{1, 2}, {2, 2}, {2, 1}, {1, 3}}) {
      Algebra const s  = sections_algebra(coordinate_projection(x, y));
      Algebra const pf = partial_function_algebra(x, y);
      CHECK(find_isomorphism(s, pf).has_value());
    }
    SurjectionModel const m = coordinate_projection(2, 2);
    CHECK(m.total_names.front() == "(p,0)");
    CHECK(m.fibre(1).size() == 2);
  }
  SUBCASE("one point with a two-element fibre is PF12") {
    Algebra const s = sections_algebra(SurjectionModel::from_fibre_sizes({2}));
    CHECK(s.size() == 3);
    CHECK(oracle::isomorphic(s, partial_function_algebra(1, 2)));
  }
  SUBCASE("identity surjection gives a commutative algebra") {
    Algebra const s
        = sections_algebra(SurjectionModel::from_fibre_sizes({1, 1, 1}));
    CHECK(s.size() == 8);
    CHECK(classify(s).holds("commutative"));
    CHECK(oracle::isomorphic(s, boolean_lattice(3)));
  }
  SUBCASE("invalid surjections") {
    SurjectionModel m = SurjectionModel::from_fibre_sizes({1, 2});
    m.proj.back()     = 7;
    CHECK(kind_of([&] { m.validate(); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of([] { SurjectionModel::from_fibre_sizes({1, 0}); })
          == ErrorKind::PreconditionFailed);
    CHECK(kind_of([] { SurjectionModel::from_fibre_sizes({1}, {"a", "b"}); })
          == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("posets") {
  SUBCASE("the chain a < b") {
    Poset const p = two_chain();
    CHECK(p.names() == std::vector<std::string>{"a", "b"});
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
    std::vector<std::string> ups;
    for (Poset::Mask m : p.upsets()) {
      ups.push_back(p.subset_name(m));
    }
    CHECK(ups == std::vector<std::string>{"{}", "{b}", "{a,b}"});
    CHECK(p.up(0b01) == 0b11);
    CHECK(p.down(0b10) == 0b11);
    CHECK_FALSE(p.is_upset(0b01));
  }
  SUBCASE("invalid relations") {
    Relation cyc(2);
    cyc.set(0, 0, true);
    cyc.set(1, 1, true);
    cyc.set(0, 1, true);
    cyc.set(1, 0, true);
    CHECK(kind_of([&] { Poset({"a", "b"}, cyc); }) == ErrorKind::InvalidPoset);
    Relation nonrefl(2);
    CHECK(kind_of([&] { Poset({"a", "b"}, nonrefl); }) == ErrorKind::InvalidPoset);
    Relation r3 = Relation::from_function(3, [](Elem x, Elem y) {
      return x == y || (x == 0 && y == 1) || (x == 1 && y == 2);
    });
    CHECK(kind_of([&] { Poset({"a", "b", "c"}, r3); }) == ErrorKind::InvalidPoset);
  }
  SUBCASE("all posets up to isomorphism, checked by brute force") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(all_posets(n).size() == count_posets(n));
    }
    CHECK(all_posets(4).size() == 16);
    CHECK(all_posets(5).size() == 63);
    CHECK(kind_of([] { all_posets(7); }) == ErrorKind::TooLarge);
  }
}

TEST_CASE("Esakia implication equals the maximum on every poset up to 5 points") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Poset const& p : all_posets(n)) {
      CommutativeLattice const l = upset_heyting(p);
      auto const               ups = p.upsets();
      REQUIRE(l.size() == ups.size());
      for (Elem i = 0; i < ups.size(); ++i) {
        for (Elem j = 0; j < ups.size(); ++j) {
          // largest upset W with W n U contained in V
          Poset::Mask best  = 0;
          std::size_t found = 0;
          for (Poset::Mask w : ups) {
            if ((w & ups[i] & ~ups[j]) == 0) {
              bool maximal = true;
              for (Poset::Mask w2 : ups) {
                if (w2 != w && (w2 & w) == w && (w2 & ups[i] & ~ups[j]) == 0) {
                  maximal = false;
                }
              }
              if (maximal) {
                best = w;
                ++found;
              }
            }
          }
          REQUIRE(found == 1);
          CHECK(esakia_implication(p, ups[i], ups[j]) == best);
          auto const pos = std::find(ups.begin(), ups.end(), best) - ups.begin();
          CHECK(l.algebra().arrow(i, j) == static_cast<Elem>(pos));
        }
      }
    }
  }
}

TEST_CASE("upset lattices") {
  SUBCASE("a < b") {
    CommutativeLattice const l = upset_heyting(two_chain());
    Algebra const&           a = l.algebra();
    CHECK(a.names() == std::vector<std::string>{"{}", "{b}", "{a,b}"});
    CHECK(a.arrow(at(a, "{a,b}"), at(a, "{b}")) == at(a, "{b}"));
    CHECK(a.arrow(at(a, "{b}"), at(a, "{}")) == at(a, "{}"));
  }
  SUBCASE("antichain of two is the four-element Boolean lattice") {
    CommutativeLattice const l = upset_heyting(Poset::antichain(2));
    CHECK(oracle::isomorphic(l.algebra(), boolean_lattice(2)));
    CHECK(l.algebra().arrow_table() == *heyting_arrow(l).arrow);
  }
  SUBCASE("one point is CHAIN2") {
    CommutativeLattice const l = upset_heyting(Poset::chain(1));
    CHECK(oracle::isomorphic(l.algebra(), chain_lattice(2)));
  }
  SUBCASE("size bound") {
    CHECK(kind_of([] { upset_heyting(Poset::antichain(13)); }) == ErrorKind::TooLarge);
  }
}

TEST_CASE("sections over the upsets of a poset") {
  SUBCASE("one point, fibre of two is PF12") {
    PosetSections const ps = poset_sections_algebra(
        Poset::chain(1), SurjectionModel::from_fibre_sizes({2}, {"a"}));
    CHECK(oracle::isomorphic(ps.algebra, partial_function_algebra(1, 2)));
  }
  SUBCASE("a < b with singleton fibres is the upset lattice") {
    PosetSections const ps = poset_sections_algebra(
        two_chain(), SurjectionModel::from_fibre_sizes({1, 1}, {"a", "b"}));
    CHECK(classify(ps.algebra).holds("commutative"));
    CHECK(oracle::isomorphic(ps.algebra, upset_heyting(two_chain()).algebra()));
  }
  SUBCASE("which implication formula matches the derived arrow") {
    PosetSections const ps = poset_sections_algebra(
        two_chain(), SurjectionModel::from_fibre_sizes({2, 1}, {"a", "b"}));
    CHECK(ps.algebra.size() == 4);
    REQUIRE(ps.formulas.size() == 3);
    CHECK(ps.formulas[0].name == "r|up(dom s - dom r)");
    CHECK_FALSE(ps.formulas[0].matches);
    CHECK(ps.formulas[1].name == "s|up(dom s - dom r)");
    CHECK(ps.formulas[1].matches);
    CHECK(ps.formulas[2].name == "s|(dom s - dom r)");
    CHECK_FALSE(ps.formulas[2].matches);
    // the algebra carries the derived arrow
    CHECK(ps.algebra.arrow_table() == *derive_arrow(ps.algebra).arrow);
    CHECK(ps.algebra.arrow_table() == *oracle::derived_arrow(ps.algebra));
    REQUIRE(ps.orientations.size() == 2);
    CHECK(ps.orientations[0].name == "meet-override");
    CHECK(ps.orientations[0].skew_heyting);
    CHECK(ps.orientations[1].name == "join-override");
    CHECK_FALSE(ps.orientations[1].skew_heyting);
  }
  SUBCASE("the printed formula gives top on the diagonal") {
    // r -> r restricts to the upset of the empty set
    PosetSections const ps = poset_sections_algebra(
        two_chain(), SurjectionModel::from_fibre_sizes({2, 2}, {"a", "b"}));
    for (Elem r = 0; r < ps.algebra.size(); ++r) {
      CHECK(ps.algebra.arrow(r, r) == *ps.algebra.top());
    }
  }
  SUBCASE("every base of up to 3 points with fibres up to 2") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (Poset const& p : all_posets(n)) {
        std::vector<std::size_t> sizes(n, 1);
        for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
          for (std::size_t b = 0; b < n; ++b) {
            sizes[b] = 1 + (code >> b & 1);
          }
          PosetSections const ps = poset_sections_algebra(
              p, SurjectionModel::from_fibre_sizes(sizes, p.names()));
          DerivedArrow const d = derive_arrow(ps.algebra);
          REQUIRE(d.exists());
          CHECK(check_sh_axioms(ps.algebra, *d.arrow).all_hold());
          CHECK(ps.formulas[1].matches);
          CHECK(ps.orientations[0].skew_heyting);
        }
      }
    }
  }
}

TEST_CASE("skew Boolean algebras and their duals") {
  SUBCASE("round trip through the dual of PF22") {
    SkewBoolean const sb = partial_function_skew_boolean(2, 2);
    Algebra const     pf = partial_function_algebra(2, 2);
    CHECK(check_skew_boolean(sb.algebra, sb.diff).all_hold());
    Algebra const back = from_skew_boolean(sb);
    CHECK(back.meet_table() == pf.meet_table());
    CHECK(back.join_table() == pf.join_table());
    CHECK(back.arrow_table() == pf.arrow_table());
    CHECK(back.top() == pf.top());
  }
  SUBCASE("Boolean lattices") {
    for (std::size_t k = 1; k <= 2; ++k) {
      Algebra const b = boolean_lattice(k);
      Elem const    zero = *find_bottom(b), one = *find_top(b);
      auto const    neg = [&](Elem x) {
        for (Elem c = 0; c < b.size(); ++c) {
          if (b.meet(x, c) == zero && b.join(x, c) == one) {
            return c;
          }
        }
        FAIL("no complement");
        return zero;
      };
      Table diff = Table::from_function(
          b.size(), [&](Elem x, Elem y) { return b.meet(x, neg(y)); });
      Algebra const d = from_skew_boolean(SkewBoolean{b, diff});
      CHECK(d.top() == zero);
      for (Elem x = 0; x < b.size(); ++x) {
        for (Elem y = 0; y < b.size(); ++y) {
          // not x or y, read in the dual order: y ^ not x in the original
          CHECK(d.arrow(x, y) == b.meet(y, neg(x)));
        }
      }
      if (k == 1) {
        CHECK(oracle::isomorphic(d, chain_lattice(2)));
        CHECK(d.arrow(zero, one) == one);
        CHECK(d.arrow(one, zero) == zero);
      }
    }
  }
  SUBCASE("a table that is not a difference is rejected") {
    SkewBoolean sb = partial_function_skew_boolean(1, 2);
    sb.diff.set(1, 1, 1);
    CHECK(kind_of([&] { from_skew_boolean(sb); }) == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("small lattices and rectangular algebras") {
  CHECK(chain_lattice(3).names() == std::vector<std::string>{"0", "1", "2"});
  CHECK(boolean_lattice(3).size() == 8);
  Algebra const n = n5();
  CHECK(n.names() == std::vector<std::string>{"0", "a", "b", "c", "1"});
  CHECK(oracle::leq(n, at(n, "a"), at(n, "b")));
  CHECK_FALSE(oracle::leq(n, at(n, "a"), at(n, "c")));
  CHECK(n.join(at(n, "a"), at(n, "c")) == at(n, "1"));
  CHECK(n.meet(at(n, "b"), at(n, "c")) == at(n, "0"));

  Algebra const l = left_rectangular(3), r = right_rectangular(3);
  CHECK(greens(l).L.size() == 1);
  CHECK(greens(l).R.is_discrete());
  CHECK(greens(r).R.size() == 1);
  CHECK(greens(r).L.is_discrete());
  CHECK(classify(l).holds("rectangular"));

  Relation bad(2);
  CHECK(kind_of([&] { lattice_from_order({"x", "y"}, bad); })
        == ErrorKind::PreconditionFailed);
}

TEST_CASE("enumeration of small skew lattices") {
  CHECK(enumerate_skew_lattices(1).size() == 1);
  auto const two = enumerate_skew_lattices(2);
  CHECK(two.size() == 3);
  CHECK(std::any_of(two.begin(), two.end(),
                    [](Algebra const& a) { return oracle::isomorphic(a, chain_lattice(2)); }));
  CHECK(std::any_of(two.begin(), two.end(), [](Algebra const& a) {
    return oracle::isomorphic(a, left_rectangular(2));
  }));
  CHECK(std::any_of(two.begin(), two.end(), [](Algebra const& a) {
    return oracle::isomorphic(a, right_rectangular(2));
  }));

  for (std::size_t n = 1; n <= 3; ++n) {
    auto const got    = enumerate_skew_lattices(n);
    auto const expect = oracle::skew_lattice_classes(n);
    CHECK(got.size() == expect.size());
    for (auto const& e : expect) {
      CHECK(std::count_if(got.begin(), got.end(), [&](Algebra const& g) {
              return oracle::isomorphic(g, e);
            }) == 1);
    }
    for (auto const& g : got) {
      CHECK(oracle::skew_lattice(g));
    }
  }
  CHECK(kind_of([] { enumerate_skew_lattices(4); }) == ErrorKind::TooLarge);
}
