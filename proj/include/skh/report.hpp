// skh - finite skew lattice and skew Heyting algebra workbench
//
// Reports produced by the command line tool. A report is a list of
// verdicts with element names resolved, free-form result records, and an
// overall verdict. Rendering is a pure function of the report, so identical
// inputs give byte-identical output.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skh/algebra.hpp"
#include "skh/property_report.hpp"

namespace skh {

  inline constexpr std::string_view kVersion = "0.1.0";

  enum class Format { Text, Machine };

  enum class Outcome { Pass, Fail, Inconsistent };

  std::string_view to_string(Outcome o) noexcept;

  struct ReportEntry {
    std::string                name;
    Verdict                    verdict = Verdict::Holds;
    // informational entries do not affect the overall verdict
    bool                       asserted = true;
    std::vector<std::string>   witness;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::uint64_t              tuples_checked = 0;
    std::uint64_t              tuple_space    = 0;
    std::string                note;
  };

  class Report {
   public:
    Report(std::string command, std::string input_digest);

    void add(PropertyEntry const& e, Algebra const& a, bool asserted = true);
    void add(PropertyReport const& r, Algebra const& a, bool asserted = true);
    void add(ReportEntry e) {
      _entries.push_back(std::move(e));
    }
    void record(std::string line) {
      _records.push_back(std::move(line));
    }
    void set_inconsistent(std::string message) {
      _inconsistency = std::move(message);
    }

    std::string const& command() const noexcept {
      return _command;
    }
    std::string const& input_digest() const noexcept {
      return _digest;
    }
    std::vector<ReportEntry> const& entries() const noexcept {
      return _entries;
    }
    std::vector<std::string> const& records() const noexcept {
      return _records;
    }
    std::optional<std::string> const& inconsistency() const noexcept {
      return _inconsistency;
    }

    //! Inconsistent if flagged, Fail if an asserted entry fails, else Pass.
    Outcome outcome() const noexcept;

   private:
    std::string                _command;
    std::string                _digest;
    std::vector<ReportEntry>   _entries;
    std::vector<std::string>   _records;
    std::optional<std::string> _inconsistency;
  };

  //! Text ends with "VERDICT: PASS|FAIL|INCONSISTENT"; machine output is
  //! one key=value record per line ending with "verdict=...".
  std::string emit_report(Report const& r, Format format);

}  // namespace skh
