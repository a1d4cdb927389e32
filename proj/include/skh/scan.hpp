// skh - finite skew lattice and skew Heyting algebra workbench
//
// Exhaustive scans over tuple spaces [0, n)^k. The witness of a failed scan is
// always the lexicographically least failing tuple, whatever the number of
// worker threads.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "skh/table.hpp"

namespace skh {

  //! Worker threads used by tuple scans. Defaults to 1.
  void     set_jobs(unsigned jobs) noexcept;
  unsigned jobs() noexcept;

  template <std::size_t Arity>
  using Tuple = std::array<Elem, Arity>;

  template <std::size_t Arity>
  struct ScanResult {
    std::optional<Tuple<Arity>> witness;
    // tuples examined up to and including the witness, or the whole space
    std::uint64_t checked = 0;

    bool holds() const noexcept {
      return !witness.has_value();
    }
  };

  inline std::uint64_t tuple_space(std::size_t n, std::size_t arity) noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      total *= n;
    }
    return total;
  }

  namespace detail {
    template <std::size_t I, std::size_t A, typename Pred>
    bool scan_tail(Tuple<A>& t, std::size_t n, Pred& ok) {
      if constexpr (I == A) {
        return ok(static_cast<Tuple<A> const&>(t));
      } else {
        for (t[I] = 0; t[I] < n; ++t[I]) {
          if (!scan_tail<I + 1, A>(t, n, ok)) {
            return false;
          }
        }
        return true;
      }
    }

    template <std::size_t A>
    std::uint64_t rank(Tuple<A> const& t, std::size_t n) noexcept {
      std::uint64_t r = 0;
      for (auto v : t) {
        r = r * n + v;
      }
      return r;
    }
  }  // namespace detail

  //! Finds the least tuple t in [0, n)^Arity with ok(t) == false.
  template <std::size_t Arity, typename Pred>
  ScanResult<Arity> scan(std::size_t n, Pred ok) {
    static_assert(Arity >= 1);
    ScanResult<Arity> result;
    unsigned const    workers
        = static_cast<unsigned>(std::min<std::size_t>(jobs(), n));
    if (workers <= 1) {
      Tuple<Arity> t{};
      if (!detail::scan_tail<0, Arity>(t, n, ok)) {
        result.witness = t;
      }
    } else {
      std::atomic<std::size_t>                 best_first{n};
      std::vector<std::optional<Tuple<Arity>>> found(workers);
      std::vector<std::thread>                 pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          Pred local = ok;
          for (std::size_t x = w; x < n; x += workers) {
            if (x > best_first.load(std::memory_order_relaxed)) {
              return;
            }
            Tuple<Arity> t{};
            t[0] = static_cast<Elem>(x);
            if (!detail::scan_tail<1, Arity>(t, n, local)) {
              found[w]         = t;
              std::size_t prev = best_first.load();
              while (x < prev && !best_first.compare_exchange_weak(prev, x)) {
              }
              return;
            }
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      for (auto const& f : found) {
        if (f && (!result.witness || *f < *result.witness)) {
          result.witness = f;
        }
      }
    }
    result.checked = result.witness ? detail::rank(*result.witness, n) + 1
                                    : tuple_space(n, Arity);
    return result;
  }

}  // namespace skh
