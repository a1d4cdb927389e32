// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/models.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

#include "skh/error.hpp"
#include "skh/properties.hpp"
#include "skh/skew_heyting.hpp"

namespace skh {

  ////////////////////////////////////////////////////////////////////////
  // Partial maps
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t PartialMap::domain_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i]) {
        m |= std::uint64_t{1} << i;
      }
    }
    return m;
  }

  PartialMap PartialMap::restrict_to(std::uint64_t mask) const {
    PartialMap r = *this;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      if (!(mask >> i & 1)) {
        r.values[i].reset();
      }
    }
    return r;
  }

  PartialMap partial_meet(PartialMap const& f, PartialMap const& g) {
    PartialMap r = f;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      if (!r.values[i]) {
        r.values[i] = g.values[i];
      }
    }
    return r;
  }

  PartialMap partial_join(PartialMap const& f, PartialMap const& g) {
    return g.restrict_to(f.domain_mask());
  }

  PartialMap partial_arrow(PartialMap const& f, PartialMap const& g) {
    return g.restrict_to(~f.domain_mask());
  }

  std::vector<std::string> point_names(std::size_t count) {
    static constexpr char letters[] = "pqrstuvw";
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(i < 8 ? std::string(1, letters[i])
                          : "x" + std::to_string(i));
    }
    return out;
  }

  namespace {

    // A finite family of partial maps with their values named per point,
    // indexed by mixed-radix codes (digit 0 = undefined, point 0 least
    // significant).
    struct MapSpace {
      std::vector<std::string>              points;
      std::vector<std::vector<std::size_t>> choices;  // values per point
      std::vector<std::string>              value_names;

      std::uint64_t code(PartialMap const& f) const {
        std::uint64_t c = 0;
        for (std::size_t i = points.size(); i-- > 0;) {
          std::size_t digit = 0;
          if (f.values[i]) {
            auto const& ch = choices[i];
            digit = static_cast<std::size_t>(
                        std::find(ch.begin(), ch.end(), *f.values[i])
                        - ch.begin())
                    + 1;
          }
          c = c * (choices[i].size() + 1) + digit;
        }
        return c;
      }

      PartialMap decode(std::uint64_t c) const {
        PartialMap f;
        f.values.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
          std::size_t const radix = choices[i].size() + 1;
          std::size_t const digit = c % radix;
          c /= radix;
          if (digit != 0) {
            f.values[i] = choices[i][digit - 1];
          }
        }
        return f;
      }

      std::string name(PartialMap const& f) const {
        std::string s = "{";
        bool        first = true;
        for (std::size_t i = 0; i < points.size(); ++i) {
          if (f.values[i]) {
            s += (first ? "" : ",") + points[i] + ":"
                 + value_names[*f.values[i]];
            first = false;
          }
        }
        return s + "}";
      }

      // Product of the radices, or bound + 1 if that is exceeded.
      std::uint64_t capped_count(std::size_t bound) const {
        std::uint64_t total = 1;
        for (auto const& ch : choices) {
          total *= ch.size() + 1;
          if (total > bound) {
            return bound + 1;
          }
        }
        return total;
      }
    };

    struct Built {
      Algebra                 algebra;
      std::vector<PartialMap> maps;
      // code -> element index
      std::unordered_map<std::uint64_t, Elem> index;
    };

    // The maps of space accepted by keep, in code order, with the partial
    // map meet and join (and the arrow when with_arrow).
    template <typename Keep>
    Built build(MapSpace const& space, Keep keep, bool with_arrow) {
      std::uint64_t const total = space.capped_count(~std::size_t{0} - 1);
      std::vector<PartialMap>                 maps;
      std::unordered_map<std::uint64_t, Elem> index;
      std::vector<std::string>                names;
      for (std::uint64_t c = 0; c < total; ++c) {
        PartialMap f = space.decode(c);
        if (keep(f)) {
          index.emplace(c, static_cast<Elem>(maps.size()));
          names.push_back(space.name(f));
          maps.push_back(std::move(f));
        }
      }
      std::size_t const n      = maps.size();
      auto const        lookup = [&](PartialMap const& f) {
        auto it = index.find(space.code(f));
        if (it == index.end()) {
          throw Error(ErrorKind::PreconditionFailed,
                      space.name(f) + " is not in the family");
        }
        return it->second;
      };
      Table meet(n), join(n), arrow(n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          meet.set(x, y, lookup(partial_meet(maps[x], maps[y])));
          join.set(x, y, lookup(partial_join(maps[x], maps[y])));
          if (with_arrow) {
            arrow.set(x, y, lookup(partial_arrow(maps[x], maps[y])));
          }
        }
      }
      Constants c;
      c.top = lookup(space.decode(0));
      Algebra a = make_algebra(std::move(names),
                               std::move(meet),
                               std::move(join),
                               c,
                               with_arrow ? std::optional<Table>(std::move(arrow))
                                          : std::nullopt);
      return Built{std::move(a), std::move(maps), std::move(index)};
    }

    MapSpace function_space(std::size_t x, std::size_t y) {
      if (x == 0 || y == 0) {
        throw Error(ErrorKind::PreconditionFailed,
                    "domain and codomain must be nonempty");
      }
      if (x > 63) {
        throw Error(ErrorKind::TooLarge, "too many points");
      }
      MapSpace s;
      s.points = point_names(x);
      std::vector<std::size_t> all(y);
      std::iota(all.begin(), all.end(), 0);
      s.choices.assign(x, all);
      for (std::size_t v = 0; v < y; ++v) {
        s.value_names.push_back(std::to_string(v));
      }
      return s;
    }

    MapSpace section_space(SurjectionModel const& model) {
      model.validate();
      if (model.base_names.size() > 63) {
        throw Error(ErrorKind::TooLarge, "too many base points");
      }
      MapSpace s;
      s.points      = model.base_names;
      s.value_names = model.total_names;
      for (std::size_t b = 0; b < model.base_names.size(); ++b) {
        s.choices.push_back(model.fibre(b));
      }
      return s;
    }

    void require_within(MapSpace const& s, std::size_t bound) {
      if (s.capped_count(bound) > bound) {
        throw Error(ErrorKind::TooLarge,
                    "family has more than " + std::to_string(bound)
                        + " elements");
      }
    }

    Built build_function_algebra(std::size_t x,
                                 std::size_t y,
                                 std::size_t bound,
                                 bool        with_arrow) {
      MapSpace const s = function_space(x, y);
      require_within(s, bound);
      return build(s, [](PartialMap const&) { return true; }, with_arrow);
    }

  }  // namespace

  Algebra partial_function_algebra(std::size_t x,
                                   std::size_t y,
                                   std::size_t bound) {
    return build_function_algebra(x, y, bound, true).algebra;
  }

  ////////////////////////////////////////////////////////////////////////
  // Surjections
  ////////////////////////////////////////////////////////////////////////

  SurjectionModel
  SurjectionModel::from_fibre_sizes(std::vector<std::size_t> const& sizes,
                                    std::vector<std::string>        base_names) {
    if (base_names.empty()) {
      base_names = point_names(sizes.size());
    }
    if (base_names.size() != sizes.size()) {
      throw Error(ErrorKind::PreconditionFailed,
                  "one fibre size per base point is needed");
    }
    SurjectionModel m;
    m.base_names = std::move(base_names);
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      for (std::size_t i = 0; i < sizes[b]; ++i) {
        m.total_names.push_back(m.base_names[b] + std::to_string(i));
        m.proj.push_back(b);
      }
    }
    m.validate();
    return m;
  }

  void SurjectionModel::validate() const {
    if (proj.size() != total_names.size()) {
      throw Error(ErrorKind::PreconditionFailed,
                  "projection is not defined on every total element");
    }
    std::vector<bool> hit(base_names.size(), false);
    for (std::size_t b : proj) {
      if (b >= base_names.size()) {
        throw Error(ErrorKind::PreconditionFailed,
                    "projection leaves the base");
      }
      hit[b] = true;
    }
    if (base_names.empty()) {
      throw Error(ErrorKind::PreconditionFailed, "empty base");
    }
    for (std::size_t b = 0; b < hit.size(); ++b) {
      if (!hit[b]) {
        throw Error(ErrorKind::PreconditionFailed,
                    "projection misses " + base_names[b]);
      }
    }
  }

  std::vector<std::size_t> SurjectionModel::fibre(std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < proj.size(); ++e) {
      if (proj[e] == b) {
        out.push_back(e);
      }
    }
    return out;
  }

  SurjectionModel coordinate_projection(std::size_t x, std::size_t y) {
    SurjectionModel m;
    m.base_names = point_names(x);
    for (std::size_t b = 0; b < x; ++b) {
      for (std::size_t v = 0; v < y; ++v) {
        m.total_names.push_back("(" + m.base_names[b] + ","
                                + std::to_string(v) + ")");
        m.proj.push_back(b);
      }
    }
    m.validate();
    return m;
  }

  Algebra sections_algebra(SurjectionModel const& model, std::size_t bound) {
    MapSpace const s = section_space(model);
    require_within(s, bound);
    return build(s, [](PartialMap const&) { return true; }, true).algebra;
  }

  ////////////////////////////////////////////////////////////////////////
  // Posets
  ////////////////////////////////////////////////////////////////////////

  Poset::Poset(std::vector<std::string> names, Relation leq)
      : _names(std::move(names)), _leq(std::move(leq)) {
    std::size_t const n = _names.size();
    if (_leq.size() != n) {
      throw Error(ErrorKind::InvalidPoset,
                  "relation size does not match the number of points");
    }
    if (n > 64) {
      throw Error(ErrorKind::InvalidPoset, "more than 64 points");
    }
    if (!_leq.is_reflexive()) {
      throw Error(ErrorKind::InvalidPoset, "relation is not reflexive");
    }
    if (!_leq.is_antisymmetric()) {
      throw Error(ErrorKind::InvalidPoset, "relation is not antisymmetric");
    }
    if (!_leq.is_transitive()) {
      throw Error(ErrorKind::InvalidPoset, "relation is not transitive");
    }
    _up.assign(n, 0);
    _down.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (_leq(static_cast<Elem>(i), static_cast<Elem>(j))) {
          _up[i] |= Mask{1} << j;
          _down[j] |= Mask{1} << i;
        }
      }
    }
  }

  namespace {
    std::vector<std::string> letter_names(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                             : "a" + std::to_string(i));
      }
      return out;
    }
  }  // namespace

  Poset Poset::chain(std::size_t n) {
    return Poset(letter_names(n),
                 Relation::from_function(
                     n, [](Elem i, Elem j) { return i <= j; }));
  }

  Poset Poset::antichain(std::size_t n) {
    return Poset(letter_names(n),
                 Relation::from_function(
                     n, [](Elem i, Elem j) { return i == j; }));
  }

  Poset::Mask Poset::full() const noexcept {
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  Poset::Mask Poset::up(Mask m) const {
    Mask out = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (m >> i & 1) {
        out |= _up[i];
      }
    }
    return out;
  }

  Poset::Mask Poset::down(Mask m) const {
    Mask out = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (m >> i & 1) {
        out |= _down[i];
      }
    }
    return out;
  }

  std::vector<Poset::Mask> Poset::upsets() const {
    if (size() > 24) {
      throw Error(ErrorKind::TooLarge, "too many points to list upsets");
    }
    std::vector<Mask> out;
    for (Mask m = 0; m <= full(); ++m) {
      if (is_upset(m)) {
        out.push_back(m);
      }
    }
    return out;
  }

  std::string Poset::subset_name(Mask m) const {
    std::string s = "{";
    bool        first = true;
    for (std::size_t i = 0; i < size(); ++i) {
      if (m >> i & 1) {
        s += (first ? "" : ",") + _names[i];
        first = false;
      }
    }
    return s + "}";
  }

  std::vector<Poset> all_posets(std::size_t n) {
    if (n > 6) {
      throw Error(ErrorKind::TooLarge, "poset enumeration limited to 6 points");
    }
    // Every poset has a linear extension, so it suffices to enumerate
    // relations contained in i <= j and keep the transitive ones.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        slots.emplace_back(i, j);
      }
    }
    std::vector<Elem> perm(n);
    std::set<std::vector<std::uint8_t>> canon;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size());
         ++bits) {
      Relation r = Relation::from_function(
          n, [](Elem i, Elem j) { return i == j; });
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (bits >> k & 1) {
          r.set(static_cast<Elem>(slots[k].first),
                static_cast<Elem>(slots[k].second),
                true);
        }
      }
      if (!r.is_transitive()) {
        continue;
      }
      std::iota(perm.begin(), perm.end(), Elem{0});
      std::vector<std::uint8_t> best;
      do {
        std::vector<std::uint8_t> code(n * n);
        for (Elem i = 0; i < n; ++i) {
          for (Elem j = 0; j < n; ++j) {
            code[perm[i] * n + perm[j]] = r(i, j);
          }
        }
        if (best.empty() || code < best) {
          best = std::move(code);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon.insert(std::move(best));
    }
    std::vector<Poset> out;
    for (auto const& code : canon) {
      out.emplace_back(letter_names(n),
                       Relation::from_function(n, [&](Elem i, Elem j) {
                         return code[i * n + j] != 0;
                       }));
    }
    return out;
  }

  Poset::Mask esakia_implication(Poset const& p, Poset::Mask u, Poset::Mask v) {
    return p.full() & ~p.down(u & ~v);
  }

  CommutativeLattice upset_heyting(Poset const& p) {
    if (p.size() > 12) {
      throw Error(ErrorKind::TooLarge, "upset lattice limited to 12 points");
    }
    std::vector<Poset::Mask> const ups = p.upsets();
    std::size_t const              n   = ups.size();
    std::unordered_map<Poset::Mask, Elem> index;
    std::vector<std::string>              names;
    for (Elem i = 0; i < n; ++i) {
      index.emplace(ups[i], i);
      names.push_back(p.subset_name(ups[i]));
    }
    Table meet = Table::from_function(
        n, [&](Elem i, Elem j) { return index.at(ups[i] & ups[j]); });
    Table join = Table::from_function(
        n, [&](Elem i, Elem j) { return index.at(ups[i] | ups[j]); });
    Table arrow = Table::from_function(n, [&](Elem i, Elem j) {
      return index.at(esakia_implication(p, ups[i], ups[j]));
    });
    Constants c;
    c.top    = index.at(p.full());
    c.bottom = index.at(0);
    CommutativeLattice l(make_algebra(names, meet, join, c));

    ArrowOutcome const oracle = heyting_arrow(l);
    if (!oracle.exists()) {
      throw Error(ErrorKind::EsakiaFormulaMismatch,
                  "upset lattice has no Heyting arrow");
    }
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        if ((*oracle.arrow)(i, j) != arrow(i, j)) {
          throw Error(ErrorKind::EsakiaFormulaMismatch,
                      names[i] + " -> " + names[j] + ": formula gives "
                          + names[arrow(i, j)] + ", maximum is "
                          + names[(*oracle.arrow)(i, j)]);
        }
      }
    }
    return CommutativeLattice(l.algebra().with_arrow(std::move(arrow)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Sections over upsets
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Why o fails to be a skew Heyting algebra, or empty if it is one.
    std::optional<std::string> skew_heyting_failure(Algebra const& o) {
      if (!check_skew_lattice(o).holds()) {
        return "not a skew lattice";
      }
      if (!check_co_strongly_distributive(o).holds()) {
        return "not co-strongly distributive";
      }
      if (!find_top(o)) {
        return "no top";
      }
      DerivedArrow const d = derive_arrow(o);
      if (!d.exists()) {
        return "upset of " + o.name(*d.failing_upset)
               + " is not a Heyting algebra";
      }
      if (!check_sh_axioms(o, *d.arrow).all_hold()) {
        return "derived arrow fails the axioms";
      }
      return std::nullopt;
    }

  }  // namespace

  PosetSections poset_sections_algebra(Poset const&           base,
                                       SurjectionModel const& model,
                                       std::size_t            bound) {
    MapSpace const space = section_space(model);
    if (model.base_names.size() != base.size()) {
      throw Error(ErrorKind::PreconditionFailed,
                  "model base and poset have different sizes");
    }
    std::uint64_t count = 0;
    for (Poset::Mask u : base.upsets()) {
      std::uint64_t k = 1;
      for (std::size_t b = 0; b < base.size(); ++b) {
        if (u >> b & 1) {
          k *= space.choices[b].size();
        }
      }
      count += k;
    }
    if (count > bound) {
      throw Error(ErrorKind::TooLarge,
                  "family has more than " + std::to_string(bound)
                      + " elements");
    }

    Built b = build(
        space,
        [&](PartialMap const& f) { return base.is_upset(f.domain_mask()); },
        false);
    PosetSections out{b.algebra, b.maps, {}, {}};

    for (auto [name, o] :
         {std::pair{"meet-override", b.algebra},
          std::pair{"join-override", vertical_dual(b.algebra)}}) {
      auto const why = skew_heyting_failure(o);
      out.orientations.push_back({name, !why, why.value_or("")});
    }

    std::optional<Table> derived;
    if (out.orientations.front().skew_heyting) {
      derived   = derive_arrow(b.algebra).arrow;
      out.algebra = b.algebra.with_arrow(*derived);
    }

    auto const lookup = [&](PartialMap const& f) -> std::optional<Elem> {
      if (!base.is_upset(f.domain_mask())) {
        return std::nullopt;
      }
      return b.index.at(space.code(f));
    };
    using Candidate = std::optional<PartialMap> (*)(
        Poset const&, PartialMap const&, PartialMap const&);
    std::pair<char const*, Candidate> const candidates[] = {
        {"r|up(dom s - dom r)",
         [](Poset const& p, PartialMap const& r, PartialMap const& s)
             -> std::optional<PartialMap> {
           Poset::Mask const u = p.up(s.domain_mask() & ~r.domain_mask());
           if ((u & ~r.domain_mask()) != 0) {
             return std::nullopt;
           }
           return r.restrict_to(u);
         }},
        {"s|up(dom s - dom r)",
         [](Poset const& p, PartialMap const& r, PartialMap const& s)
             -> std::optional<PartialMap> {
           return s.restrict_to(p.up(s.domain_mask() & ~r.domain_mask()));
         }},
        {"s|(dom s - dom r)",
         [](Poset const&, PartialMap const& r, PartialMap const& s)
             -> std::optional<PartialMap> {
           return s.restrict_to(s.domain_mask() & ~r.domain_mask());
         }},
    };
    std::size_t const n = b.maps.size();
    for (auto const& [name, candidate] : candidates) {
      FormulaAgreement fa;
      fa.name = name;
      for (Elem r = 0; r < n; ++r) {
        for (Elem s = 0; s < n; ++s) {
          auto const f = candidate(base, b.maps[r], b.maps[s]);
          auto const e = f ? lookup(*f) : std::nullopt;
          if (!e) {
            fa.defined_everywhere = false;
          }
          if (!e || !derived || *e != (*derived)(r, s)) {
            if (fa.matches) {
              fa.first_mismatch = std::pair{r, s};
            }
            fa.matches = false;
          }
        }
      }
      out.formulas.push_back(std::move(fa));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Skew Boolean algebras
  ////////////////////////////////////////////////////////////////////////

  SkewBoolean partial_function_skew_boolean(std::size_t x,
                                            std::size_t y,
                                            std::size_t bound) {
    Built const       b = build_function_algebra(x, y, bound, false);
    std::size_t const n = b.maps.size();
    MapSpace const    s = function_space(x, y);
    Table             diff(n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        diff.set(i,
                 j,
                 b.index.at(s.code(
                     b.maps[i].restrict_to(~b.maps[j].domain_mask()))));
      }
    }
    return SkewBoolean{vertical_dual(b.algebra), std::move(diff)};
  }

  Algebra from_skew_boolean(SkewBoolean const& s) {
    PropertyReport const r = check_skew_boolean(s.algebra, s.diff);
    if (!r.all_hold()) {
      for (auto const& e : r.entries()) {
        if (e.fails()) {
          throw Error(ErrorKind::PreconditionFailed,
                      "not a skew Boolean algebra: " + e.name + " fails");
        }
      }
    }
    auto const zero = find_bottom(s.algebra);
    Algebra    d    = vertical_dual(s.algebra);
    Constants  c;
    c.top = zero;
    d     = make_algebra(d.names(), d.meet_table(), d.join_table(), c);
    Table const arrow = Table::from_function(
        d.size(), [&](Elem x, Elem y) { return s.diff(y, x); });

    if (!check_sh_axioms(d, arrow).all_hold()) {
      throw Error(ErrorKind::InconsistencyDetected,
                  "y \\ x fails the skew Heyting axioms on the dual");
    }
    DerivedArrow const derived = derive_arrow(d);
    if (!derived.exists() || *derived.arrow != arrow) {
      throw Error(ErrorKind::InconsistencyDetected,
                  "y \\ x differs from the derived arrow on the dual");
    }
    return d.with_arrow(arrow);
  }

  ////////////////////////////////////////////////////////////////////////
  // Small lattices
  ////////////////////////////////////////////////////////////////////////

  Algebra lattice_from_order(std::vector<std::string> names,
                             Relation const&          leq) {
    std::size_t const n = names.size();
    if (leq.size() != n || !leq.is_reflexive() || !leq.is_antisymmetric()
        || !leq.is_transitive()) {
      throw Error(ErrorKind::PreconditionFailed, "not a partial order");
    }
    // best bound among those z with below(z): greatest if down, least if up
    auto const extreme = [&](Elem x, Elem y, bool down) {
      std::vector<Elem> bounds;
      for (Elem z = 0; z < n; ++z) {
        if (down ? leq(z, x) && leq(z, y) : leq(x, z) && leq(y, z)) {
          bounds.push_back(z);
        }
      }
      for (Elem z : bounds) {
        if (std::all_of(bounds.begin(), bounds.end(), [&](Elem w) {
              return down ? leq(w, z) : leq(z, w);
            })) {
          return z;
        }
      }
      throw Error(ErrorKind::PreconditionFailed,
                  names[x] + " and " + names[y] + " have no "
                      + (down ? "meet" : "join"));
    };
    Table meet = Table::from_function(
        n, [&](Elem x, Elem y) { return extreme(x, y, true); });
    Table join = Table::from_function(
        n, [&](Elem x, Elem y) { return extreme(x, y, false); });
    return make_algebra(std::move(names), std::move(meet), std::move(join));
  }

  Algebra chain_lattice(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    return lattice_from_order(
        std::move(names),
        Relation::from_function(n, [](Elem i, Elem j) { return i <= j; }));
  }

  Algebra boolean_lattice(std::size_t k) {
    Poset const       p = Poset::antichain(k);
    std::size_t const n = std::size_t{1} << k;
    std::vector<std::string> names;
    for (std::size_t m = 0; m < n; ++m) {
      names.push_back(p.subset_name(m));
    }
    return lattice_from_order(
        std::move(names), Relation::from_function(n, [](Elem i, Elem j) {
          return (i & ~j) == 0;
        }));
  }

  Algebra n5() {
    // 0 < a < b < 1, 0 < c < 1
    Relation leq = Relation::from_function(5, [](Elem i, Elem j) {
      return i == j || i == 0 || j == 4 || (i == 1 && j == 2);
    });
    return lattice_from_order({"0", "a", "b", "c", "1"}, leq);
  }

  Algebra left_rectangular(std::size_t n) {
    return make_algebra(n,
                        Table::from_function(n, [](Elem x, Elem) { return x; }),
                        Table::from_function(n, [](Elem, Elem y) { return y; }));
  }

  Algebra right_rectangular(std::size_t n) {
    return make_algebra(n,
                        Table::from_function(n, [](Elem, Elem y) { return y; }),
                        Table::from_function(n, [](Elem x, Elem) { return x; }));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<Table> bands(std::size_t n) {
      std::vector<std::pair<Elem, Elem>> cells;
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (x != y) {
            cells.emplace_back(x, y);
          }
        }
      }
      std::vector<Table>     out;
      std::vector<Elem>      digits(cells.size(), 0);
      Table                  t = Table::from_function(
          n, [](Elem x, Elem) { return x; });
      while (true) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
          t.set(cells[k].first, cells[k].second, digits[k]);
        }
        bool assoc = true;
        for (Elem x = 0; x < n && assoc; ++x) {
          for (Elem y = 0; y < n && assoc; ++y) {
            for (Elem z = 0; z < n && assoc; ++z) {
              assoc = t(t(x, y), z) == t(x, t(y, z));
            }
          }
        }
        if (assoc) {
          out.push_back(t);
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == n) {
          digits[k++] = 0;
        }
        if (k == digits.size()) {
          break;
        }
      }
      return out;
    }

    bool absorbs(Table const& m, Table const& j) {
      std::size_t const n = m.size();
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (m(x, j(x, y)) != x || m(j(y, x), x) != x || j(x, m(x, y)) != x
              || j(m(y, x), x) != x) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::vector<Algebra> enumerate_skew_lattices(std::size_t n) {
    if (n > 3) {
      throw Error(ErrorKind::TooLarge,
                  "raw table enumeration is limited to 3 elements");
    }
    if (n == 0) {
      return {};
    }
    std::vector<Table> const b = bands(n);
    std::vector<Elem>        perm(n);
    std::set<std::vector<Elem>> canon;
    for (Table const& m : b) {
      for (Table const& j : b) {
        if (!absorbs(m, j)) {
          continue;
        }
        std::iota(perm.begin(), perm.end(), Elem{0});
        std::vector<Elem> best;
        do {
          std::vector<Elem> code(2 * n * n);
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              code[perm[x] * n + perm[y]]         = perm[m(x, y)];
              code[n * n + perm[x] * n + perm[y]] = perm[j(x, y)];
            }
          }
          if (best.empty() || code < best) {
            best = std::move(code);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(std::move(best));
      }
    }
    std::vector<Algebra> out;
    for (auto const& code : canon) {
      Table m(n), j(n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          m.set(x, y, code[x * n + y]);
          j.set(x, y, code[n * n + x * n + y]);
        }
      }
      out.push_back(make_algebra(n, std::move(m), std::move(j)));
    }
    return out;
  }

}  // namespace skh
