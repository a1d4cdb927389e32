// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "skh/error.hpp"

namespace skh {

  namespace {

    void check_table(Table const& t, std::size_t n, char const* what) {
      if (t.size() != n) {
        throw Error(ErrorKind::MalformedTable,
                    std::string(what) + " table is " + std::to_string(t.size())
                        + "x" + std::to_string(t.size()) + ", carrier has "
                        + std::to_string(n) + " elements");
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (t(x, y) >= n) {
            throw Error(ErrorKind::MalformedTable,
                        std::string(what) + " entry (" + std::to_string(x)
                            + ", " + std::to_string(y) + ") is out of range");
          }
        }
      }
    }

    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> names;
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }

    Partition partition_or_throw(Relation const& rel, char const* name) {
      if (!rel.is_equivalence()) {
        throw Error(ErrorKind::NotComposable,
                    std::string("Green's relation ") + name
                        + " is not an equivalence on this algebra");
      }
      return Partition::from_equivalence(rel);
    }

    bool satisfies_skew_lattice_axioms(Algebra const& a) {
      std::size_t const n = a.size();
      for (Elem x = 0; x < n; ++x) {
        if (a.meet(x, x) != x || a.join(x, x) != x) {
          return false;
        }
        for (Elem y = 0; y < n; ++y) {
          if (a.meet(x, a.join(x, y)) != x || a.join(x, a.meet(x, y)) != x
              || a.join(a.meet(x, y), y) != y
              || a.meet(a.join(x, y), y) != y) {
            return false;
          }
          for (Elem z = 0; z < n; ++z) {
            if (a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z))
                || a.join(a.join(x, y), z) != a.join(x, a.join(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }

  }  // namespace

  Table const& Algebra::arrow_table() const {
    if (!_arrow) {
      throw Error(ErrorKind::PreconditionFailed, "algebra has no arrow table");
    }
    return *_arrow;
  }

  std::optional<Elem> Algebra::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - _names.begin());
  }

  Algebra Algebra::with_arrow(Table arrow) const {
    return make_algebra(_names, _meet, _join, _constants, std::move(arrow));
  }

  Algebra Algebra::without_arrow() const {
    Algebra copy = *this;
    copy._arrow.reset();
    return copy;
  }

  Algebra Algebra::with_names(std::vector<std::string> names) const {
    return make_algebra(std::move(names), _meet, _join, _constants, _arrow);
  }

  Algebra make_algebra(std::vector<std::string> carrier,
                       Table                    meet,
                       Table                    join,
                       Constants                constants,
                       std::optional<Table>     arrow) {
    std::size_t const n = carrier.size();
    if (n == 0) {
      throw Error(ErrorKind::MalformedTable, "carrier is empty");
    }
    {
      std::set<std::string> seen(carrier.begin(), carrier.end());
      if (seen.size() != n) {
        throw Error(ErrorKind::MalformedTable, "duplicate element name");
      }
    }
    check_table(meet, n, "meet");
    check_table(join, n, "join");
    if (arrow) {
      check_table(*arrow, n, "arrow");
    }
    if (constants.top) {
      Elem t = *constants.top;
      if (t >= n) {
        throw Error(ErrorKind::BadConstant, "top is out of range");
      }
      for (Elem x = 0; x < n; ++x) {
        if (join(x, t) != t || join(t, x) != t || meet(x, t) != x
            || meet(t, x) != x) {
          throw Error(ErrorKind::BadConstant,
                      "declared top " + carrier[t]
                          + " fails its absorption law at " + carrier[x]);
        }
      }
    }
    if (constants.bottom) {
      Elem b = *constants.bottom;
      if (b >= n) {
        throw Error(ErrorKind::BadConstant, "bottom is out of range");
      }
      for (Elem x = 0; x < n; ++x) {
        if (meet(x, b) != b || meet(b, x) != b || join(x, b) != x
            || join(b, x) != x) {
          throw Error(ErrorKind::BadConstant,
                      "declared bottom " + carrier[b]
                          + " fails its absorption law at " + carrier[x]);
        }
      }
    }
    Algebra a;
    a._meet      = std::move(meet);
    a._join      = std::move(join);
    a._arrow     = std::move(arrow);
    a._constants = constants;
    a._names     = std::move(carrier);
    return a;
  }

  Algebra make_algebra(std::size_t          n,
                       Table                meet,
                       Table                join,
                       Constants            constants,
                       std::optional<Table> arrow) {
    return make_algebra(
        default_names(n), std::move(meet), std::move(join), constants, arrow);
  }

  std::optional<Elem> find_top(Algebra const& a) {
    if (a.top()) {
      return a.top();
    }
    for (Elem t = 0; t < a.size(); ++t) {
      bool ok = true;
      for (Elem x = 0; x < a.size() && ok; ++x) {
        ok = a.join(x, t) == t && a.join(t, x) == t;
      }
      if (ok) {
        return t;
      }
    }
    return std::nullopt;
  }

  std::optional<Elem> find_bottom(Algebra const& a) {
    if (a.bottom()) {
      return a.bottom();
    }
    for (Elem b = 0; b < a.size(); ++b) {
      bool ok = true;
      for (Elem x = 0; x < a.size() && ok; ++x) {
        ok = a.meet(x, b) == b && a.meet(b, x) == b;
      }
      if (ok) {
        return b;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::from_equivalence(Relation const& rel) {
    if (!rel.is_equivalence()) {
      throw Error(ErrorKind::PreconditionFailed,
                  "relation is not an equivalence");
    }
    std::size_t const        n = rel.size();
    std::vector<std::size_t> labels(n, n);
    std::size_t              next = 0;
    for (Elem x = 0; x < n; ++x) {
      if (labels[x] != n) {
        continue;
      }
      for (Elem y = x; y < n; ++y) {
        if (rel(x, y)) {
          labels[y] = next;
        }
      }
      ++next;
    }
    return from_labels(labels);
  }

  Partition Partition::from_labels(std::span<std::size_t const> labels) {
    Partition                         p;
    std::map<std::size_t, std::size_t> renumber;
    p._block_of.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, fresh] = renumber.try_emplace(labels[x], p._blocks.size());
      if (fresh) {
        p._blocks.emplace_back();
      }
      p._blocks[it->second].push_back(static_cast<Elem>(x));
      p._block_of[x] = it->second;
    }
    return p;
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
  }

  Partition Partition::total(std::size_t n) {
    std::vector<std::size_t> labels(n, 0);
    return from_labels(labels);
  }

  Relation Partition::relation() const {
    return Relation::from_function(carrier_size(), [this](Elem x, Elem y) {
      return related(x, y);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> hom_violation(Algebra const&        source,
                                           Algebra const&        target,
                                           std::span<Elem const> map) {
    if (map.size() != source.size()) {
      return "map has the wrong length";
    }
    for (Elem v : map) {
      if (v >= target.size()) {
        return "map leaves the target carrier";
      }
    }
    bool const arrows = source.has_arrow() && target.has_arrow();
    for (Elem x = 0; x < source.size(); ++x) {
      for (Elem y = 0; y < source.size(); ++y) {
        if (map[source.meet(x, y)] != target.meet(map[x], map[y])) {
          return "meet not preserved at (" + source.name(x) + ", "
                 + source.name(y) + ")";
        }
        if (map[source.join(x, y)] != target.join(map[x], map[y])) {
          return "join not preserved at (" + source.name(x) + ", "
                 + source.name(y) + ")";
        }
        if (arrows
            && map[source.arrow(x, y)] != target.arrow(map[x], map[y])) {
          return "arrow not preserved at (" + source.name(x) + ", "
                 + source.name(y) + ")";
        }
      }
    }
    if (source.top() && target.top() && map[*source.top()] != *target.top()) {
      return "top not preserved";
    }
    if (source.bottom() && target.bottom()
        && map[*source.bottom()] != *target.bottom()) {
      return "bottom not preserved";
    }
    return std::nullopt;
  }

  HomMap make_hom(Algebra source, Algebra target, std::vector<Elem> map) {
    if (auto why = hom_violation(source, target, map)) {
      throw Error(ErrorKind::NotAHomomorphism, *why);
    }
    return HomMap{std::move(source), std::move(target), std::move(map)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders and Green's relations
  ////////////////////////////////////////////////////////////////////////

  Relation natural_order(Algebra const& a) {
    return Relation::from_function(a.size(), [&a](Elem x, Elem y) {
      return a.join(x, y) == y && a.join(y, x) == y;
    });
  }

  Relation natural_preorder(Algebra const& a) {
    return Relation::from_function(a.size(), [&a](Elem x, Elem y) {
      return a.join(a.join(y, x), y) == y;
    });
  }

  NaturalOrders natural_orders(Algebra const& a) {
    NaturalOrders out{natural_order(a), natural_preorder(a)};
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        bool const leq       = out.leq(x, y);
        bool const leq_meet  = a.meet(x, y) == x && a.meet(y, x) == x;
        bool const leq_join3 = a.join(a.join(x, y), x) == y;
        bool const leq_meet3 = a.meet(a.meet(y, x), y) == x;
        if (leq != leq_meet || leq != leq_join3 || leq != leq_meet3) {
          throw Error(ErrorKind::CostaMismatch,
                      "characterisations of x <= y disagree at x = "
                          + a.name(x) + ", y = " + a.name(y));
        }
        bool const pre_meet = a.meet(a.meet(x, y), x) == x;
        if (out.preceq(x, y) != pre_meet) {
          throw Error(ErrorKind::CostaMismatch,
                      "characterisations of the preorder disagree at x = "
                          + a.name(x) + ", y = " + a.name(y));
        }
      }
    }
    return out;
  }

  Relation green_d_relation(Algebra const& a) {
    Relation const pre = natural_preorder(a);
    return Relation::from_function(
        a.size(), [&pre](Elem x, Elem y) { return pre(x, y) && pre(y, x); });
  }

  Relation green_l_relation(Algebra const& a) {
    return Relation::from_function(a.size(), [&a](Elem x, Elem y) {
      return a.meet(x, y) == x && a.meet(y, x) == y;
    });
  }

  Relation green_r_relation(Algebra const& a) {
    return Relation::from_function(a.size(), [&a](Elem x, Elem y) {
      return a.meet(x, y) == y && a.meet(y, x) == x;
    });
  }

  Greens greens(Algebra const& a) {
    Relation const d = green_d_relation(a);
    Relation const l = green_l_relation(a);
    Relation const r = green_r_relation(a);
    Greens         out{partition_or_throw(d, "D"),
               partition_or_throw(l, "L"),
               partition_or_throw(r, "R")};
    if (l.compose(r) != d || r.compose(l) != d) {
      throw Error(ErrorKind::NotComposable, "L;R = R;L = D fails");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences and quotients
  ////////////////////////////////////////////////////////////////////////

  std::optional<CongruenceWitness> congruence_witness(Algebra const&   a,
                                                      Partition const& p) {
    std::size_t const n = a.size();
    if (p.carrier_size() != n) {
      throw Error(ErrorKind::PreconditionFailed,
                  "partition and algebra sizes differ");
    }
    struct Op {
      char const*  name;
      Table const* table;
    };
    std::vector<Op> ops{{"meet", &a.meet_table()}, {"join", &a.join_table()}};
    if (a.has_arrow()) {
      ops.push_back({"arrow", &a.arrow_table()});
    }
    for (auto const& op : ops) {
      Table const& t = *op.table;
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          for (Elem c : p.block(p.block_of(x))) {
            for (Elem d : p.block(p.block_of(y))) {
              if (!p.related(t(x, y), t(c, d))) {
                return CongruenceWitness{op.name, x, y, c, d};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  Quotient quotient(Algebra const& a, Partition const& p) {
    if (auto w = congruence_witness(a, p)) {
      throw Error(ErrorKind::NotACongruence,
                  w->op + "(" + a.name(w->a) + ", " + a.name(w->b) + ") vs "
                      + w->op + "(" + a.name(w->c) + ", " + a.name(w->d)
                      + ")");
    }
    std::size_t const k = p.size();
    auto              induced = [&](Table const& t) {
      return Table::from_function(k, [&](Elem i, Elem j) {
        return static_cast<Elem>(p.block_of(t(p.block(i)[0], p.block(j)[0])));
      });
    };
    std::vector<std::string> names;
    names.reserve(k);
    for (auto const& block : p.blocks()) {
      names.push_back("[" + a.name(block[0]) + "]");
    }
    Constants c;
    if (a.top()) {
      c.top = static_cast<Elem>(p.block_of(*a.top()));
    }
    if (a.bottom()) {
      c.bottom = static_cast<Elem>(p.block_of(*a.bottom()));
    }
    std::optional<Table> arrow;
    if (a.has_arrow()) {
      arrow = induced(a.arrow_table());
    }
    Algebra q = make_algebra(std::move(names),
                             induced(a.meet_table()),
                             induced(a.join_table()),
                             c,
                             std::move(arrow));
    std::vector<Elem> map(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      map[x] = static_cast<Elem>(p.block_of(x));
    }
    if (p.relation() == green_d_relation(a) && !is_commutative(q)
        && satisfies_skew_lattice_axioms(a)) {
      throw Error(ErrorKind::InconsistencyDetected,
                  "quotient by D is not commutative");
    }
    HomMap proj = make_hom(a, q, std::move(map));
    return Quotient{std::move(q), std::move(proj)};
  }

  PullbackResult pullback_check(Algebra const& a) {
    PullbackResult res;
    Greens const   g = greens(a);
    for (auto const* p : {&g.L, &g.R}) {
      if (auto w = congruence_witness(a.without_arrow(), *p)) {
        res.reason  = std::string(p == &g.L ? "L" : "R")
                     + " is not a congruence for " + w->op;
        res.witness = {w->a, w->b, w->c, w->d};
        return res;
      }
    }
    std::size_t const n = a.size();
    // injectivity: the canonical map identifies x, y iff x L y and x R y
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        if (g.L.related(x, y) && g.R.related(x, y)) {
          res.reason  = "canonical map is not injective";
          res.witness = {x, y};
          return res;
        }
      }
    }
    // surjectivity onto the fibred product over a/D
    std::vector<std::vector<bool>> hit(
        g.R.size(), std::vector<bool>(g.L.size(), false));
    for (Elem x = 0; x < n; ++x) {
      hit[g.R.block_of(x)][g.L.block_of(x)] = true;
    }
    for (std::size_t r = 0; r < g.R.size(); ++r) {
      for (std::size_t l = 0; l < g.L.size(); ++l) {
        if (g.D.related(g.R.block(r)[0], g.L.block(l)[0]) && !hit[r][l]) {
          res.reason  = "fibred product element not hit";
          res.witness = {static_cast<Elem>(r), static_cast<Elem>(l)};
          return res;
        }
      }
    }
    res.holds = true;
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Algebra vertical_dual(Algebra const& a) {
    Constants c{a.bottom(), a.top()};
    return make_algebra(a.names(), a.join_table(), a.meet_table(), c);
  }

  Algebra direct_product(Algebra const& a, Algebra const& b) {
    std::size_t const m = b.size();
    std::size_t const n = a.size() * m;
    auto              pair_table = [&](auto&& fa, auto&& fb) {
      return Table::from_function(n, [&](Elem x, Elem y) {
        Elem const x1 = x / m, x2 = x % m, y1 = y / m, y2 = y % m;
        return static_cast<Elem>(fa(x1, y1) * m + fb(x2, y2));
      });
    };
    std::vector<std::string> names;
    names.reserve(n);
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < m; ++y) {
        names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
      }
    }
    Constants c;
    if (a.top() && b.top()) {
      c.top = static_cast<Elem>(*a.top() * m + *b.top());
    }
    if (a.bottom() && b.bottom()) {
      c.bottom = static_cast<Elem>(*a.bottom() * m + *b.bottom());
    }
    std::optional<Table> arrow;
    if (a.has_arrow() && b.has_arrow()) {
      arrow = pair_table([&](Elem x, Elem y) { return a.arrow(x, y); },
                         [&](Elem x, Elem y) { return b.arrow(x, y); });
    }
    return make_algebra(
        std::move(names),
        pair_table([&](Elem x, Elem y) { return a.meet(x, y); },
                   [&](Elem x, Elem y) { return b.meet(x, y); }),
        pair_table([&](Elem x, Elem y) { return a.join(x, y); },
                   [&](Elem x, Elem y) { return b.join(x, y); }),
        c,
        std::move(arrow));
  }

  Algebra relabel(Algebra const& a, std::span<Elem const> perm) {
    std::size_t const n = a.size();
    if (perm.size() != n) {
      throw Error(ErrorKind::PreconditionFailed, "permutation has wrong size");
    }
    std::vector<Elem> inv(n, static_cast<Elem>(n));
    for (Elem x = 0; x < n; ++x) {
      if (perm[x] >= n || inv[perm[x]] != n) {
        throw Error(ErrorKind::PreconditionFailed, "not a permutation");
      }
      inv[perm[x]] = x;
    }
    auto moved = [&](Table const& t) {
      return Table::from_function(
          n, [&](Elem x, Elem y) { return perm[t(inv[x], inv[y])]; });
    };
    std::vector<std::string> names(n);
    for (Elem x = 0; x < n; ++x) {
      names[perm[x]] = a.name(x);
    }
    Constants c;
    if (a.top()) {
      c.top = perm[*a.top()];
    }
    if (a.bottom()) {
      c.bottom = perm[*a.bottom()];
    }
    std::optional<Table> arrow;
    if (a.has_arrow()) {
      arrow = moved(a.arrow_table());
    }
    return make_algebra(std::move(names),
                        moved(a.meet_table()),
                        moved(a.join_table()),
                        c,
                        std::move(arrow));
  }

  Algebra subalgebra(Algebra const& a, std::span<Elem const> members) {
    std::size_t const        k = members.size();
    std::vector<std::size_t> index(a.size(), a.size());
    for (std::size_t i = 0; i < k; ++i) {
      index[members[i]] = i;
    }
    auto restrict = [&](Table const& t, char const* what) {
      return Table::from_function(k, [&](Elem i, Elem j) {
        std::size_t const r = index[t(members[i], members[j])];
        if (r == a.size()) {
          throw Error(ErrorKind::PreconditionFailed,
                      std::string("subset is not closed under ") + what);
        }
        return static_cast<Elem>(r);
      });
    };
    std::vector<std::string> names;
    for (Elem m : members) {
      names.push_back(a.name(m));
    }
    Constants c;
    if (a.top() && index[*a.top()] != a.size()) {
      c.top = static_cast<Elem>(index[*a.top()]);
    }
    if (a.bottom() && index[*a.bottom()] != a.size()) {
      c.bottom = static_cast<Elem>(index[*a.bottom()]);
    }
    std::optional<Table> arrow;
    if (a.has_arrow()) {
      arrow = restrict(a.arrow_table(), "arrow");
    }
    return make_algebra(std::move(names),
                        restrict(a.meet_table(), "meet"),
                        restrict(a.join_table(), "join"),
                        c,
                        std::move(arrow));
  }

  namespace {
    Algebra adjoin(Algebra const& a, std::string name, bool as_top) {
      std::size_t const n = a.size();
      Elem const        e = static_cast<Elem>(n);
      // the new element absorbs under `absorbing` and is neutral otherwise
      auto extend = [&](Table const& t, bool absorbing) {
        return Table::from_function(n + 1, [&](Elem x, Elem y) {
          if (x == e && y == e) {
            return e;
          }
          if (x == e) {
            return absorbing ? e : y;
          }
          if (y == e) {
            return absorbing ? e : x;
          }
          return t(x, y);
        });
      };
      std::vector<std::string> names = a.names();
      names.push_back(std::move(name));
      Constants c;
      if (as_top) {
        c.top    = e;
        c.bottom = a.bottom();
      } else {
        c.top    = a.top();
        c.bottom = e;
      }
      return make_algebra(std::move(names),
                          extend(a.meet_table(), !as_top),
                          extend(a.join_table(), as_top),
                          c);
    }
  }  // namespace

  Algebra adjoin_top(Algebra const& a, std::string name) {
    return adjoin(a, std::move(name), true);
  }

  Algebra adjoin_bottom(Algebra const& a, std::string name) {
    return adjoin(a, std::move(name), false);
  }

  bool is_commutative(Algebra const& a) {
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < x; ++y) {
        if (a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Isomorphism-invariant data attached to each element. Only elements
    // with equal signatures are ever matched.
    std::vector<std::vector<std::size_t>> signatures(Algebra const& a,
                                                     bool use_arrow,
                                                     bool use_top,
                                                     bool use_bottom) {
      std::size_t const n   = a.size();
      Relation const    leq = natural_order(a);
      Relation const    pre = natural_preorder(a);
      std::vector<std::vector<std::size_t>> sig(n);
      for (Elem x = 0; x < n; ++x) {
        std::size_t up = 0, down = 0, pre_up = 0, pre_down = 0, dsize = 0,
                    meet_fix = 0, join_fix = 0, arrow_fix = 0;
        for (Elem y = 0; y < n; ++y) {
          up += leq(x, y);
          down += leq(y, x);
          pre_up += pre(x, y);
          pre_down += pre(y, x);
          dsize += pre(x, y) && pre(y, x);
          meet_fix += a.meet(x, y) == x;
          join_fix += a.join(x, y) == x;
          if (use_arrow) {
            arrow_fix += a.arrow(x, y) == y;
          }
        }
        sig[x] = {a.meet(x, x) == x,
                  a.join(x, x) == x,
                  up,
                  down,
                  pre_up,
                  pre_down,
                  dsize,
                  meet_fix,
                  join_fix,
                  arrow_fix,
                  use_top && *a.top() == x,
                  use_bottom && *a.bottom() == x};
      }
      return sig;
    }

    struct IsoSearch {
      Algebra const&            a;
      Algebra const&            b;
      bool                      arrows;
      std::vector<std::vector<Elem>> candidates;
      std::vector<Elem>         order;
      std::vector<Elem>         map;
      std::vector<Elem>         inverse;
      Elem                      none;

      bool consistent(Elem x) const {
        auto check = [&](Table const& ta, Table const& tb, Elem u, Elem v) {
          Elem const r = ta(u, v);
          Elem const s = tb(map[u], map[v]);
          if (map[r] != none) {
            return map[r] == s;
          }
          return inverse[s] == none;
        };
        for (Elem y = 0; y < a.size(); ++y) {
          if (map[y] == none) {
            continue;
          }
          for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
            if (!check(a.meet_table(), b.meet_table(), u, v)
                || !check(a.join_table(), b.join_table(), u, v)
                || (arrows
                    && !check(a.arrow_table(), b.arrow_table(), u, v))) {
              return false;
            }
          }
        }
        return true;
      }

      bool run(std::size_t depth) {
        if (depth == order.size()) {
          return !hom_violation(a, b, map).has_value();
        }
        Elem const x = order[depth];
        for (Elem y : candidates[x]) {
          if (inverse[y] != none) {
            continue;
          }
          map[x]     = y;
          inverse[y] = x;
          if (consistent(x) && run(depth + 1)) {
            return true;
          }
          map[x]     = none;
          inverse[y] = none;
        }
        return false;
      }
    };

  }  // namespace

  std::optional<HomMap> find_isomorphism(Algebra const& a,
                                         Algebra const& b,
                                         std::size_t    bound) {
    if (a.size() > bound || b.size() > bound) {
      throw Error(ErrorKind::TooLarge,
                  "isomorphism search is limited to "
                      + std::to_string(bound) + " elements");
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    std::size_t const n          = a.size();
    bool const        arrows     = a.has_arrow() && b.has_arrow();
    bool const        use_top    = a.top() && b.top();
    bool const        use_bottom = a.bottom() && b.bottom();
    auto const sa = signatures(a, arrows, use_top, use_bottom);
    auto const sb = signatures(b, arrows, use_top, use_bottom);

    IsoSearch s{a, b, arrows, {}, {}, {}, {}, static_cast<Elem>(n)};
    s.candidates.resize(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (sa[x] == sb[y]) {
          s.candidates[x].push_back(y);
        }
      }
      if (s.candidates[x].empty()) {
        return std::nullopt;
      }
    }
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](Elem x, Elem y) {
      return s.candidates[x].size() < s.candidates[y].size();
    });
    s.map.assign(n, s.none);
    s.inverse.assign(n, s.none);
    if (!s.run(0)) {
      return std::nullopt;
    }
    return HomMap{a, b, s.map};
  }

}  // namespace skh
