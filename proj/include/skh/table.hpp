// skh - finite skew lattice and skew Heyting algebra workbench
//
// Dense binary operation tables and boolean relations over a carrier of
// elements 0, ..., n - 1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace skh {

  //! Elements are dense indices into the carrier.
  using Elem = std::uint32_t;

  //! Row-major n x n table of a binary operation.
  class Table {
   public:
    Table() = default;

    explicit Table(std::size_t n, Elem fill = 0) : _n(n), _data(n * n, fill) {}

    Table(std::initializer_list<std::initializer_list<Elem>> rows);

    template <typename F>
    static Table from_function(std::size_t n, F&& f) {
      Table t(n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          t.set(x, y, f(x, y));
        }
      }
      return t;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    Elem operator()(Elem x, Elem y) const noexcept {
      return _data[x * _n + y];
    }

    void set(Elem x, Elem y, Elem v) noexcept {
      _data[x * _n + y] = v;
    }

    Elem const* row(Elem x) const noexcept {
      return _data.data() + x * _n;
    }

    std::vector<Elem> const& data() const noexcept {
      return _data;
    }

    bool operator==(Table const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _data;
  };

  //! Boolean n x n matrix; rel(x, y) reads "x is related to y".
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _data(n * n, 0) {}

    template <typename F>
    static Relation from_function(std::size_t n, F&& f) {
      Relation r(n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          r.set(x, y, f(x, y));
        }
      }
      return r;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(Elem x, Elem y) const noexcept {
      return _data[x * _n + y] != 0;
    }

    void set(Elem x, Elem y, bool v) noexcept {
      _data[x * _n + y] = v ? 1 : 0;
    }

    bool is_reflexive() const noexcept;
    bool is_symmetric() const noexcept;
    bool is_antisymmetric() const noexcept;
    bool is_transitive() const noexcept;

    bool is_equivalence() const noexcept {
      return is_reflexive() && is_symmetric() && is_transitive();
    }

    //! Relational composition: x (this ; other) z iff x this y other z.
    Relation compose(Relation const& other) const;

    bool operator==(Relation const&) const = default;

   private:
    std::size_t               _n = 0;
    std::vector<std::uint8_t> _data;
  };

}  // namespace skh
