// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/table.hpp"

#include <atomic>

#include "skh/error.hpp"
#include "skh/scan.hpp"

namespace skh {

  Table::Table(std::initializer_list<std::initializer_list<Elem>> rows)
      : _n(rows.size()), _data() {
    _data.reserve(_n * _n);
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw Error(ErrorKind::MalformedTable, "table literal is not square");
      }
      _data.insert(_data.end(), row.begin(), row.end());
    }
  }

  bool Relation::is_reflexive() const noexcept {
    for (Elem x = 0; x < _n; ++x) {
      if (!(*this)(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_symmetric() const noexcept {
    for (Elem x = 0; x < _n; ++x) {
      for (Elem y = 0; y < x; ++y) {
        if ((*this)(x, y) != (*this)(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_antisymmetric() const noexcept {
    for (Elem x = 0; x < _n; ++x) {
      for (Elem y = 0; y < x; ++y) {
        if ((*this)(x, y) && (*this)(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_transitive() const noexcept {
    for (Elem x = 0; x < _n; ++x) {
      for (Elem y = 0; y < _n; ++y) {
        if (!(*this)(x, y)) {
          continue;
        }
        for (Elem z = 0; z < _n; ++z) {
          if ((*this)(y, z) && !(*this)(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Relation Relation::compose(Relation const& other) const {
    Relation out(_n);
    for (Elem x = 0; x < _n; ++x) {
      for (Elem y = 0; y < _n; ++y) {
        if (!(*this)(x, y)) {
          continue;
        }
        for (Elem z = 0; z < _n; ++z) {
          if (other(y, z)) {
            out.set(x, z, true);
          }
        }
      }
    }
    return out;
  }

  namespace {
    std::atomic<unsigned> g_jobs{1};
  }

  void set_jobs(unsigned jobs) noexcept {
    g_jobs.store(jobs == 0 ? 1 : jobs);
  }

  unsigned jobs() noexcept {
    return g_jobs.load();
  }

}  // namespace skh
