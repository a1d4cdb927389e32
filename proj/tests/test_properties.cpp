// skh - finite skew lattice and skew Heyting algebra workbench

#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "oracles.hpp"
#include "skh/error.hpp"
#include "skh/io.hpp"
#include "skh/models.hpp"
#include "skh/properties.hpp"
#include "skh/scan.hpp"

using namespace skh;

namespace {

  Algebra chain2() {
    return chain_lattice(2);
  }

  Algebra rect2() {
    return make_algebra(
        {"a", "b"}, Table{{0, 0}, {1, 1}}, Table{{0, 1}, {0, 1}});
  }

  Elem at(Algebra const& a, std::string const& name) {
    auto e = a.find(name);
    REQUIRE(e.has_value());
    return *e;
  }

  Algebra load(std::string const& file) {
    return parse_algebra_file(read_file(std::string(SKH_DATA_DIR) + "/" + file));
  }

  // Per-tuple predicates written out from the identities, one per named
  // equational property. A property holds iff its predicate holds on every
  // tuple of its arity.
  struct TupleOracle {
    std::size_t                                                    arity;
    std::function<bool(Algebra const&, std::vector<Elem> const&)> ok;
  };

  std::map<std::string, TupleOracle> const& tuple_oracles() {
    using V = std::vector<Elem>;
    static std::map<std::string, TupleOracle> const m{
        {"idempotent",
         {1,
          [](Algebra const& a, V const& t) {
            return a.meet(t[0], t[0]) == t[0] && a.join(t[0], t[0]) == t[0];
          }}},
        {"associative",
         {3,
          [](Algebra const& a, V const& t) {
            auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
            return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z))
                   && a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
          }}},
        {"absorption",
         {2,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1];
            return a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x
                   && a.join(a.meet(x, y), y) == y
                   && a.meet(a.join(x, y), y) == y;
          }}},
        {"absorption-equivalences",
         {2,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1];
            return (a.meet(x, y) == x) == (a.join(x, y) == y)
                   && (a.meet(x, y) == y) == (a.join(x, y) == x);
          }}},
        {"regular",
         {3,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], u = t[1], v = t[2];
            auto M = [&](auto... e) {
              Elem r = x;
              ((r = a.meet(r, e)), ...);
              return r;
            };
            auto J = [&](auto... e) {
              Elem r = x;
              ((r = a.join(r, e)), ...);
              return r;
            };
            return M(u, x, v, x) == M(u, v, x) && J(u, x, v, x) == J(u, v, x);
          }}},
        {"commutative",
         {2,
          [](Algebra const& a, V const& t) {
            return a.meet(t[0], t[1]) == a.meet(t[1], t[0])
                   && a.join(t[0], t[1]) == a.join(t[1], t[0]);
          }}},
        {"rectangular",
         {3,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1], z = t[2];
            return a.meet(a.meet(x, y), z) == a.meet(x, z)
                   && a.join(a.join(x, y), z) == a.join(x, z);
          }}},
        {"strongly-distributive",
         {3,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1], z = t[2];
            return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z))
                   && a.meet(a.join(x, y), z)
                          == a.join(a.meet(x, z), a.meet(y, z));
          }}},
        {"co-strongly-distributive",
         {3,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1], z = t[2];
            return a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z))
                   && a.join(a.meet(x, y), z)
                          == a.meet(a.join(x, z), a.join(y, z));
          }}},
        {"distributive",
         {3,
          [](Algebra const& a, V const& t) {
            Elem x  = t[0], y = t[1], z = t[2];
            auto xm = [&](Elem e) { return a.meet(a.meet(x, e), x); };
            auto xj = [&](Elem e) { return a.join(a.join(x, e), x); };
            return xm(a.join(y, z)) == a.join(xm(y), xm(z))
                   && xj(a.meet(y, z)) == a.meet(xj(y), xj(z));
          }}},
        {"symmetric",
         {2,
          [](Algebra const& a, V const& t) {
            Elem x = t[0], y = t[1];
            return (a.meet(x, y) == a.meet(y, x))
                   == (a.join(x, y) == a.join(y, x));
          }}},
        {"conormal",
         {4,
          [](Algebra const& a, V const& t) {
            auto J = [&](Elem p, Elem q, Elem r, Elem s) {
              return a.join(a.join(a.join(p, q), r), s);
            };
            return J(t[0], t[1], t[2], t[3]) == J(t[0], t[2], t[1], t[3]);
          }}},
        {"normal",
         {4,
          [](Algebra const& a, V const& t) {
            auto M = [&](Elem p, Elem q, Elem r, Elem s) {
              return a.meet(a.meet(a.meet(p, q), r), s);
            };
            return M(t[0], t[1], t[2], t[3]) == M(t[0], t[2], t[1], t[3]);
          }}},
    };
    return m;
  }

  // First failing tuple in lexicographic order, if any.
  std::optional<std::vector<Elem>> first_failure(Algebra const&     a,
                                                 TupleOracle const& o) {
    std::size_t const n = a.size();
    std::vector<Elem> t(o.arity, 0);
    for (std::uint64_t k = 0, total = tuple_space(n, o.arity); k < total; ++k) {
      std::uint64_t c = k;
      for (std::size_t i = o.arity; i-- > 0;) {
        t[i] = static_cast<Elem>(c % n);
        c /= n;
      }
      if (!o.ok(a, t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  std::optional<Elem> oracle_bottom(Algebra const& a) {
    for (Elem b = 0; b < a.size(); ++b) {
      bool ok = true;
      for (Elem x = 0; x < a.size() && ok; ++x) {
        ok = oracle::leq(a, b, x);
      }
      if (ok) {
        return b;
      }
    }
    return std::nullopt;
  }

  // D from the preorder, congruence by brute force, then distributivity of
  // the quotient computed on representatives.
  bool oracle_quasi_distributive(Algebra const& a) {
    std::size_t const n = a.size();
    auto d = [&](Elem x, Elem y) {
      return oracle::preceq(a, x, y) && oracle::preceq(a, y, x);
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (!d(x, x) || (d(x, y) != d(y, x)) || (d(x, y) && d(y, z) && !d(x, z))) {
            return false;
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem u = 0; u < n; ++u) {
          for (Elem v = 0; v < n; ++v) {
            if (d(x, u) && d(y, v)
                && (!d(a.meet(x, y), a.meet(u, v))
                    || !d(a.join(x, y), a.join(u, v)))) {
              return false;
            }
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!d(a.meet(x, y), a.meet(y, x)) || !d(a.join(x, y), a.join(y, x))) {
          return false;
        }
        for (Elem z = 0; z < n; ++z) {
          if (!d(a.meet(x, a.join(y, z)), a.join(a.meet(x, y), a.meet(x, z)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<Algebra> corpus() {
    std::vector<Algebra> out;
    for (std::size_t n = 1; n <= 2; ++n) {
      auto const b = oracle::bands(n);
      for (auto const& m : b) {
        for (auto const& j : b) {
          out.push_back(make_algebra(n, m, j));
        }
      }
    }
    for (auto const& a : oracle::skew_lattice_classes(3)) {
      out.push_back(a);
    }
    out.push_back(partial_function_algebra(1, 2));
    out.push_back(partial_function_algebra(2, 2));
    out.push_back(partial_function_algebra(1, 3));
    out.push_back(vertical_dual(partial_function_algebra(2, 2)));
    out.push_back(sections_algebra(SurjectionModel::from_fibre_sizes({2, 1})));
    out.push_back(n5());
    out.push_back(boolean_lattice(2));
    out.push_back(direct_product(chain2(), rect2()));
    out.push_back(direct_product(chain2(), right_rectangular(2)));
    out.push_back(adjoin_top(rect2()));
    out.push_back(adjoin_bottom(right_rectangular(2), "z"));
    out.push_back(load("nonconormal.alg"));
    return out;
  }

  std::vector<Algebra> const& shared_corpus() {
    static std::vector<Algebra> const c = corpus();
    return c;
  }

}  // namespace

TEST_CASE("classify agrees with the identity oracles, witnesses included") {
  for (Algebra const& a : shared_corpus()) {
    PropertyReport const r = classify(a);
    for (auto const& [name, o] : tuple_oracles()) {
      CAPTURE(name);
      CAPTURE(a.size());
      PropertyEntry const& e      = r.at(name);
      auto const           expect = first_failure(a, o);
      REQUIRE(e.verdict != Verdict::Skipped);
      CHECK(e.holds() == !expect.has_value());
      if (e.holds()) {
        CHECK(e.witness.empty());
        CHECK(e.tuples_checked == tuple_space(a.size(), o.arity));
      } else {
        CHECK(e.witness == *expect);
        CHECK_FALSE(o.ok(a, e.witness));
      }
    }
    CHECK(r.holds("skew-lattice") == oracle::skew_lattice(a));
    if (oracle::skew_lattice(a)) {
      CHECK(r.holds("has-top") == oracle::top(a).has_value());
      CHECK(r.holds("has-bottom") == oracle_bottom(a).has_value());
    }
    CHECK(r.holds("quasi-distributive") == oracle_quasi_distributive(a));
  }
}

TEST_CASE("classify lists every property once") {
  PropertyReport const r = classify(chain2());
  CHECK(r.entries().size() == property_names().size());
  for (auto name : property_names()) {
    CHECK(r.contains(name));
  }
}

TEST_CASE("classify on the named examples") {
  SUBCASE("PF22") {
    PropertyReport const r = classify(partial_function_algebra(2, 2));
    for (auto p : {"skew-lattice", "co-strongly-distributive", "symmetric",
                   "conormal", "quasi-distributive", "has-top"}) {
      CHECK_MESSAGE(r.holds(p), p);
    }
    CHECK(r.at("rectangular").fails());
    CHECK(r.at("strongly-distributive").fails());
    CHECK_FALSE(r.at("strongly-distributive").witness.empty());
    CHECK(r.at("has-bottom").fails());
  }
  SUBCASE("RECT2") {
    PropertyReport const r = classify(rect2());
    CHECK(r.holds("skew-lattice"));
    CHECK(r.holds("rectangular"));
    CHECK(r.at("commutative").fails());
    CHECK(r.at("has-top").fails());
  }
  SUBCASE("CHAIN2") {
    PropertyReport const r = classify(chain2());
    for (auto const& e : r.entries()) {
      CHECK_MESSAGE(e.holds() == (e.name != "rectangular"), e.name);
    }
  }
  SUBCASE("N5 is a lattice but not distributive") {
    PropertyReport const r = classify(n5());
    CHECK(r.holds("commutative"));
    CHECK(r.at("distributive").fails());
    CHECK(r.at("co-strongly-distributive").fails());
  }
  SUBCASE("non-conormal table") {
    Algebra const        a = load("nonconormal.alg");
    PropertyReport const r = classify(a);
    PropertyEntry const& e = r.at("conormal");
    REQUIRE(e.fails());
    std::vector<Elem> const expect = {
        at(a, "{}"), at(a, "{p:0}"), at(a, "{p:1}"), at(a, "{}")};
    CHECK(e.witness == expect);
  }
}

TEST_CASE("classify is stable under relabelling") {
  std::mt19937 rng(20261016);
  for (Algebra const& a : shared_corpus()) {
    std::vector<Elem> perm(a.size());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    PropertyReport const r1 = classify(a);
    PropertyReport const r2 = classify(relabel(a, perm));
    for (auto name : property_names()) {
      CHECK(r1.at(name).verdict == r2.at(name).verdict);
    }
  }
}

TEST_CASE("either strong distributivity implies distributivity") {
  for (Algebra const& a : shared_corpus()) {
    PropertyReport const r = classify(a);
    if (!r.holds("skew-lattice")) {
      continue;
    }
    if (r.holds("strongly-distributive") || r.holds("co-strongly-distributive")) {
      CHECK(r.holds("distributive"));
    }
  }
}

TEST_CASE("upsets of conormal skew lattices are commutative sublattices") {
  for (Algebra const& a : shared_corpus()) {
    if (!oracle::skew_lattice(a) || !classify(a).holds("conormal")) {
      continue;
    }
    for (Elem u = 0; u < a.size(); ++u) {
      std::vector<Elem> up;
      for (Elem x = 0; x < a.size(); ++x) {
        if (oracle::leq(a, u, x)) {
          up.push_back(x);
        }
      }
      for (Elem x : up) {
        for (Elem y : up) {
          CHECK(oracle::leq(a, u, a.meet(x, y)));
          CHECK(oracle::leq(a, u, a.join(x, y)));
          CHECK(a.meet(x, y) == a.meet(y, x));
          CHECK(a.join(x, y) == a.join(y, x));
        }
      }
    }
  }
}

TEST_CASE("vertical duality exchanges the two strong distributivities") {
  for (Algebra const& a : shared_corpus()) {
    Algebra const d = vertical_dual(a);
    CHECK(check_strongly_distributive(a).holds()
          == check_co_strongly_distributive(d).holds());
    CHECK(check_co_strongly_distributive(a).holds()
          == check_strongly_distributive(d).holds());
    CHECK(find_top(a).has_value() == find_bottom(d).has_value());
    CHECK(find_bottom(a).has_value() == find_top(d).has_value());
    CHECK(vertical_dual(d) == a.without_arrow());
  }
  // strongly distributive after the swap
  Algebra const pf = partial_function_algebra(1, 2);
  Algebra const d  = vertical_dual(pf);
  CHECK(d.bottom() == at(pf, "{}"));
  CHECK(check_strongly_distributive(d).holds());
}

TEST_CASE("co-strong distributivity equivalence") {
  CHECK(check_costrong_equivalence(partial_function_algebra(2, 2)).holds());
  CHECK(check_costrong_equivalence(vertical_dual(partial_function_algebra(2, 2)))
            .holds());
  CHECK(check_costrong_equivalence(chain2()).holds());
  CHECK(check_costrong_equivalence(chain2()).note == "both sides hold");
  CHECK(check_costrong_equivalence(n5()).note == "both sides fail");
  CHECK(check_costrong_equivalence(make_algebra(
                                       2, Table{{0, 1}, {1, 1}}, Table{{0, 0}, {0, 1}}))
            .holds());
  for (Algebra const& a : shared_corpus()) {
    PropertyEntry const e = check_costrong_equivalence(a);
    CHECK(e.verdict == (oracle::skew_lattice(a) ? Verdict::Holds : Verdict::Skipped));
  }
}

TEST_CASE("cover_in_class") {
  Algebra const            pf = partial_function_algebra(2, 2);
  Greens const             g  = greens(pf);
  Elem const               b  = at(pf, "{p:0,q:1}");
  std::vector<Elem> const& dp = g.D.block(g.D.block_of(at(pf, "{p:1}")));
  CHECK(cover_in_class(pf, b, dp) == at(pf, "{p:0}"));
  std::vector<Elem> const& top = g.D.block(g.D.block_of(at(pf, "{}")));
  CHECK(cover_in_class(pf, b, top) == at(pf, "{}"));
  for (Elem x = 0; x < pf.size(); ++x) {
    CHECK(cover_in_class(pf, x, g.D.block(g.D.block_of(x))) == x);
  }
  // {p:0} does not lie below anything with domain {p, q}
  std::vector<Elem> const& full = g.D.block(g.D.block_of(b));
  CHECK_THROWS_AS(cover_in_class(pf, at(pf, "{p:0}"), full), Error);
  try {
    cover_in_class(pf, at(pf, "{p:0}"), full);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("cover_in_class reports non-unique covers") {
  Algebra const            a  = load("nonconormal.alg");
  Greens const             g  = greens(a);
  Elem const               b  = at(a, "{}");
  std::vector<Elem> const& dp = g.D.block(g.D.block_of(at(a, "{p:0}")));
  try {
    cover_in_class(a, b, dp);
    FAIL("expected NotUnique");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotUnique);
  }
}

TEST_CASE("binormal factorization") {
  auto const f = binormal_factorization(direct_product(chain2(), rect2()));
  REQUIRE(f.has_value());
  CHECK(oracle::isomorphic(f->lattice, chain2()));
  CHECK(oracle::isomorphic(f->rectangular, rect2()));

  CHECK_FALSE(binormal_factorization(partial_function_algebra(2, 2)).has_value());

  auto const c = binormal_factorization(chain2());
  REQUIRE(c.has_value());
  CHECK(oracle::isomorphic(c->lattice, chain2()));
  CHECK(c->rectangular.size() == 1);

  auto const br = binormal_factorization(
      direct_product(boolean_lattice(2), right_rectangular(3)));
  REQUIRE(br.has_value());
  CHECK(br->lattice.size() == 4);
  CHECK(oracle::isomorphic(br->rectangular, right_rectangular(3)));
}

TEST_CASE("skew Boolean structure on the dual of partial maps") {
  Algebra const pf = partial_function_algebra(2, 2);
  Algebra const d  = vertical_dual(pf);
  auto const    maps = oracle::all_partial_maps(2, 2);
  Table         diff(d.size());
  for (auto const& f : maps) {
    for (auto const& h : maps) {
      auto const r = oracle::restrict_to(f, oracle::minus(oracle::dom(f), oracle::dom(h)));
      diff.set(at(d, oracle::pmap_name(f)), at(d, oracle::pmap_name(h)),
               at(d, oracle::pmap_name(r)));
    }
  }
  PropertyReport const r = check_skew_boolean(d, diff);
  CHECK(r.all_hold());

  Table bad = diff;
  bad.set(0, 1, diff(0, 1) == 0 ? 1 : 0);
  CHECK_FALSE(check_skew_boolean(d, bad).all_hold());

  // no bottom in PF22 itself
  PropertyReport const nb = check_skew_boolean(pf, diff);
  CHECK(nb.at("has-bottom").fails());
  CHECK(nb.at("sba-difference-join").verdict == Verdict::Skipped);

  CHECK(partial_function_skew_boolean(2, 2).diff == diff);
}

TEST_CASE("dual skew Boolean difference solves to the derived arrow") {
  for (Algebra const& a : {chain2(), partial_function_algebra(2, 2),
                           partial_function_algebra(1, 3), boolean_lattice(2)}) {
    auto const dd = solve_dual_skew_diff(a);
    REQUIRE(dd.has_value());
    CHECK(check_dual_skew_boolean(a, *dd).all_hold());
    auto const arrow = oracle::derived_arrow(a);
    REQUIRE(arrow.has_value());
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        CHECK((*dd)(y, x) == (*arrow)(x, y));
      }
    }
  }
  // the chain's dual difference is the classical one
  auto const dd = solve_dual_skew_diff(chain2());
  CHECK(*dd == Table{{1, 0}, {1, 1}});

  CHECK_FALSE(solve_dual_skew_diff(rect2()).has_value());
  try {
    solve_dual_skew_diff(n5());
    FAIL("expected AmbiguousDiff");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousDiff);
  }
  // 1 \\ 0 would have to be a complement of 1 in the 3-chain
  CHECK_FALSE(solve_dual_skew_diff(chain_lattice(3)).has_value());
}
