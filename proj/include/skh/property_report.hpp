// skh - finite skew lattice and skew Heyting algebra workbench

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skh/table.hpp"

namespace skh {

  enum class Verdict { Holds, Fails, Skipped };

  std::string_view to_string(Verdict v) noexcept;

  //! Outcome of checking one named identity or condition on one algebra.
  //!
  //! A failing entry carries the least violating tuple; for equational
  //! identities lhs and rhs hold both evaluated sides at that tuple. A holding
  //! entry has tuples_checked == tuple_space.
  struct PropertyEntry {
    std::string         name;
    Verdict             verdict = Verdict::Holds;
    std::vector<Elem>   witness;
    std::optional<Elem> lhs;
    std::optional<Elem> rhs;
    std::uint64_t       tuples_checked = 0;
    std::uint64_t       tuple_space    = 0;
    std::string         note;

    bool holds() const noexcept {
      return verdict == Verdict::Holds;
    }
    bool fails() const noexcept {
      return verdict == Verdict::Fails;
    }
  };

  class PropertyReport {
   public:
    void add(PropertyEntry entry) {
      _entries.push_back(std::move(entry));
    }
    void append(PropertyReport const& other) {
      _entries.insert(
          _entries.end(), other._entries.begin(), other._entries.end());
    }

    std::vector<PropertyEntry> const& entries() const noexcept {
      return _entries;
    }

    //! No entry fails (skipped entries are ignored).
    bool all_hold() const noexcept;

    //! Throws PreconditionFailed for an unknown name.
    PropertyEntry const& at(std::string_view name) const;
    bool                 contains(std::string_view name) const noexcept;
    bool                 holds(std::string_view name) const {
      return at(name).holds();
    }

   private:
    std::vector<PropertyEntry> _entries;
  };

  inline PropertyEntry holding(std::string name, std::string note = {}) {
    PropertyEntry e;
    e.name           = std::move(name);
    e.tuples_checked = e.tuple_space = 1;
    e.note                           = std::move(note);
    return e;
  }

  inline PropertyEntry failing(std::string       name,
                               std::string       note,
                               std::vector<Elem> witness = {}) {
    PropertyEntry e;
    e.name           = std::move(name);
    e.verdict        = Verdict::Fails;
    e.note           = std::move(note);
    e.witness        = std::move(witness);
    e.tuples_checked = e.tuple_space = 1;
    return e;
  }

  inline PropertyEntry skipped(std::string name, std::string note) {
    PropertyEntry e;
    e.name    = std::move(name);
    e.verdict = Verdict::Skipped;
    e.note    = std::move(note);
    return e;
  }

}  // namespace skh
