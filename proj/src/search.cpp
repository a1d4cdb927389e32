// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/search.hpp"

#include <algorithm>
#include <tuple>

#include "skh/error.hpp"
#include "skh/models.hpp"
#include "skh/properties.hpp"
#include "skh/skew_heyting.hpp"

namespace skh {

  std::vector<std::string_view> const& family_names() {
    static std::vector<std::string_view> const names
        = {"pfn", "sections", "enum", "poset-sections"};
    return names;
  }

  namespace {

    std::string join_sizes(std::vector<std::size_t> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s;
    }

    // "a<b,a<c", or "antichain" when there are no strict pairs.
    std::string poset_label(Poset const& p) {
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (i != j && p.leq(i, j)) {
            s += (s.empty() ? "" : ",") + p.name(i) + "<" + p.name(j);
          }
        }
      }
      return s.empty() ? "antichain" : s;
    }

    // Fibre size vectors with prod(f + 1) <= max_size, each f in [1, cap].
    void fibre_vectors(std::size_t                            max_size,
                       std::size_t                            cap,
                       std::size_t                            max_points,
                       std::vector<std::size_t>&              current,
                       std::size_t                            product,
                       std::vector<std::vector<std::size_t>>& out) {
      if (!current.empty()) {
        out.push_back(current);
      }
      if (current.size() == max_points) {
        return;
      }
      for (std::size_t f = 1; f <= cap && product * (f + 1) <= max_size; ++f) {
        current.push_back(f);
        fibre_vectors(max_size, cap, max_points, current, product * (f + 1), out);
        current.pop_back();
      }
    }

    std::size_t product_size(std::vector<std::size_t> const& v) {
      std::size_t p = 1;
      for (std::size_t f : v) {
        p *= f + 1;
      }
      return p;
    }

  }  // namespace

  void for_each_instance(std::string_view                     family,
                         std::size_t                          max_size,
                         std::size_t                          bound,
                         std::function<bool(Instance const&)> visit) {
    std::size_t const limit = std::min(max_size, bound);
    if (family == "pfn") {
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> shapes;
      for (std::size_t y = 1; y + 1 <= limit; ++y) {
        std::size_t size = y + 1;
        for (std::size_t x = 1; size <= limit; ++x, size *= y + 1) {
          shapes.emplace_back(size, x, y);
        }
      }
      std::sort(shapes.begin(), shapes.end());
      for (auto [size, x, y] : shapes) {
        Instance in{"pfn x=" + std::to_string(x) + " y=" + std::to_string(y),
                    partial_function_algebra(x, y, bound)};
        if (!visit(in)) {
          return;
        }
      }
    } else if (family == "sections") {
      std::vector<std::vector<std::size_t>> vectors;
      std::vector<std::size_t>              current;
      fibre_vectors(limit, limit, 63, current, 1, vectors);
      std::stable_sort(vectors.begin(), vectors.end(), [](auto const& a, auto const& b) {
        return std::pair{product_size(a), a.size()}
               < std::pair{product_size(b), b.size()};
      });
      for (auto const& v : vectors) {
        Instance in{"sections fibers=" + join_sizes(v),
                    sections_algebra(SurjectionModel::from_fibre_sizes(v), bound)};
        if (!visit(in)) {
          return;
        }
      }
    } else if (family == "enum") {
      for (std::size_t n = 1; n <= std::min<std::size_t>(limit, 3); ++n) {
        std::vector<Algebra> const all = enumerate_skew_lattices(n);
        for (std::size_t k = 0; k < all.size(); ++k) {
          Instance in{"enum n=" + std::to_string(n) + " #" + std::to_string(k),
                      all[k]};
          if (!visit(in)) {
            return;
          }
        }
      }
    } else if (family == "poset-sections") {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (Poset const& p : all_posets(n)) {
          std::vector<std::vector<std::size_t>> vectors;
          std::vector<std::size_t>              current;
          fibre_vectors(~std::size_t{0} / 4, 2, n, current, 1, vectors);
          for (auto const& v : vectors) {
            if (v.size() != n) {
              continue;
            }
            std::size_t count = 0;
            for (Poset::Mask u : p.upsets()) {
              std::size_t k = 1;
              for (std::size_t b = 0; b < n; ++b) {
                if (u >> b & 1) {
                  k *= v[b];
                }
              }
              count += k;
            }
            if (count > limit) {
              continue;
            }
            SurjectionModel const m
                = SurjectionModel::from_fibre_sizes(v, p.names());
            Instance in{"poset-sections poset=" + poset_label(p)
                            + " fibers=" + join_sizes(v),
                        poset_sections_algebra(p, m, bound).algebra};
            if (!visit(in)) {
              return;
            }
          }
        }
      }
    } else {
      throw Error(ErrorKind::Usage,
                  "unknown family '" + std::string(family) + "'");
    }
  }

  std::vector<std::string> const& searchable_properties() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto name : property_names()) {
        out.emplace_back(name);
      }
      for (char const* name : {"costrong-equivalence",
                               "skew-heyting",
                               "arrow-derivable",
                               "arrow-matches-derived",
                               "SH0",
                               "SH1",
                               "SH2",
                               "SH3",
                               "SH4",
                               "SH4'",
                               "SHA",
                               "arrow-top-iff-preceq",
                               "y-leq-arrow",
                               "sha-sufficiency",
                               "imp-or",
                               "lifting-biconditional",
                               "upset-isomorphism",
                               "D-congruence",
                               "D-quotient-arrow",
                               "L-congruence",
                               "L-quotient-arrow",
                               "R-congruence",
                               "R-quotient-arrow",
                               "three-way-equivalence",
                               "case2-skew-chain",
                               "case3-dual-skew-boolean",
                               "pullback"}) {
        out.emplace_back(name);
      }
      return out;
    }();
    return names;
  }

  PropertyEntry evaluate_property(Algebra const& a, std::string_view property) {
    auto const& known = searchable_properties();
    if (std::find(known.begin(), known.end(), property) == known.end()) {
      throw Error(ErrorKind::Usage,
                  "unknown property '" + std::string(property) + "'");
    }
    auto const& classified = property_names();
    if (std::find(classified.begin(), classified.end(), property)
        != classified.end()) {
      return classify(a).at(property);
    }
    if (property == "costrong-equivalence") {
      return check_costrong_equivalence(a);
    }
    PropertyReport const suite = verify_suite(a);
    if (property == "skew-heyting") {
      for (auto const& e : suite.entries()) {
        if (e.fails()) {
          PropertyEntry out = e;
          out.note = e.name + (e.note.empty() ? "" : ": " + e.note);
          out.name = "skew-heyting";
          return out;
        }
      }
      return holding("skew-heyting");
    }
    if (suite.contains(property)) {
      return suite.at(property);
    }
    return skipped(std::string(property), "not reached by the verify suite");
  }

  SearchOutcome search(std::string_view family,
                       std::size_t      max_size,
                       std::string_view property,
                       bool             negate,
                       std::size_t      bound) {
    SearchOutcome out;
    for_each_instance(family, max_size, bound, [&](Instance const& in) {
      ++out.examined;
      PropertyEntry e = evaluate_property(in.algebra, property);
      if (negate ? e.fails() : e.holds()) {
        out.found = in;
        out.entry = std::move(e);
        return false;
      }
      return true;
    });
    return out;
  }

}  // namespace skh
