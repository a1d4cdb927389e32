// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/report.hpp"

#include <algorithm>
#include <sstream>

namespace skh {

  std::string_view to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::Pass:
        return "PASS";
      case Outcome::Fail:
        return "FAIL";
      case Outcome::Inconsistent:
        return "INCONSISTENT";
    }
    return "?";
  }

  Report::Report(std::string command, std::string input_digest)
      : _command(std::move(command)), _digest(std::move(input_digest)) {}

  void Report::add(PropertyEntry const& e, Algebra const& a, bool asserted) {
    ReportEntry r;
    r.name     = e.name;
    r.verdict  = e.verdict;
    r.asserted = asserted;
    for (Elem x : e.witness) {
      r.witness.push_back(a.name(x));
    }
    if (e.lhs) {
      r.lhs = a.name(*e.lhs);
    }
    if (e.rhs) {
      r.rhs = a.name(*e.rhs);
    }
    r.tuples_checked = e.tuples_checked;
    r.tuple_space    = e.tuple_space;
    r.note           = e.note;
    _entries.push_back(std::move(r));
  }

  void Report::add(PropertyReport const& r, Algebra const& a, bool asserted) {
    for (auto const& e : r.entries()) {
      add(e, a, asserted);
    }
  }

  Outcome Report::outcome() const noexcept {
    if (_inconsistency) {
      return Outcome::Inconsistent;
    }
    bool const failed
        = std::any_of(_entries.begin(), _entries.end(), [](auto const& e) {
            return e.asserted && e.verdict == Verdict::Fails;
          });
    return failed ? Outcome::Fail : Outcome::Pass;
  }

  namespace {

    std::string one_line(std::string s) {
      std::replace(s.begin(), s.end(), '\n', ' ');
      return s;
    }

    std::string tuple(std::vector<std::string> const& names) {
      std::string s = "(";
      for (std::size_t i = 0; i < names.size(); ++i) {
        s += (i ? "," : "") + names[i];
      }
      return s + ")";
    }

    std::string_view tag(ReportEntry const& e) {
      if (!e.asserted) {
        switch (e.verdict) {
          case Verdict::Holds:
            return "[info holds]";
          case Verdict::Fails:
            return "[info fails]";
          case Verdict::Skipped:
            return "[info skip ]";
        }
      }
      switch (e.verdict) {
        case Verdict::Holds:
          return "[holds]     ";
        case Verdict::Fails:
          return "[FAILS]     ";
        case Verdict::Skipped:
          return "[skipped]   ";
      }
      return "";
    }

    void text(std::ostringstream& out, Report const& r) {
      out << "skh " << kVersion << '\n';
      out << "command: " << r.command() << '\n';
      out << "input: " << r.input_digest() << '\n';
      for (auto const& e : r.entries()) {
        out << tag(e) << ' ' << e.name;
        if (e.verdict != Verdict::Skipped) {
          out << "  " << e.tuples_checked << '/' << e.tuple_space
              << " tuples";
        }
        if (!e.note.empty()) {
          out << "  " << one_line(e.note);
        }
        out << '\n';
        if (!e.witness.empty()) {
          out << "    witness " << tuple(e.witness);
          if (e.lhs && e.rhs) {
            out << "  lhs = " << *e.lhs << "  rhs = " << *e.rhs;
          }
          out << '\n';
        }
      }
      for (auto const& line : r.records()) {
        out << line << '\n';
      }
      if (r.inconsistency()) {
        out << "inconsistency: " << one_line(*r.inconsistency()) << '\n';
      }
      out << "VERDICT: " << to_string(r.outcome()) << '\n';
    }

    void machine(std::ostringstream& out, Report const& r) {
      out << "version=" << kVersion << '\n';
      out << "command=" << r.command() << '\n';
      out << "input=" << r.input_digest() << '\n';
      for (auto const& e : r.entries()) {
        out << "entry=" << e.name << '\n';
        out << "verdict=" << to_string(e.verdict) << '\n';
        out << "asserted=" << (e.asserted ? "true" : "false") << '\n';
        out << "tuples_checked=" << e.tuples_checked << '\n';
        out << "tuple_space=" << e.tuple_space << '\n';
        if (!e.witness.empty()) {
          out << "witness=" << tuple(e.witness) << '\n';
        }
        if (e.lhs) {
          out << "lhs=" << *e.lhs << '\n';
        }
        if (e.rhs) {
          out << "rhs=" << *e.rhs << '\n';
        }
        if (!e.note.empty()) {
          out << "note=" << one_line(e.note) << '\n';
        }
      }
      for (auto const& line : r.records()) {
        out << "record=" << one_line(line) << '\n';
      }
      if (r.inconsistency()) {
        out << "inconsistency=" << one_line(*r.inconsistency()) << '\n';
      }
      out << "verdict=" << to_string(r.outcome()) << '\n';
    }

  }  // namespace

  std::string emit_report(Report const& r, Format format) {
    std::ostringstream out;
    if (format == Format::Text) {
      text(out, r);
    } else {
      machine(out, r);
    }
    return out.str();
  }

}  // namespace skh
