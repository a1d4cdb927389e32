// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "skh/error.hpp"
#include "skh/io.hpp"
#include "skh/models.hpp"
#include "skh/properties.hpp"
#include "skh/scan.hpp"
#include "skh/search.hpp"
#include "skh/skew_heyting.hpp"

namespace skh {

  int run_guarded(Report&                      report,
                  Format                       format,
                  std::ostream&                out,
                  std::ostream&                err,
                  std::function<bool()> const& body) {
    try {
      if (body()) {
        out << emit_report(report, format);
      }
      return report.outcome() == Outcome::Pass ? kExitPass : kExitFail;
    } catch (Error const& e) {
      if (is_inconsistency(e.kind())) {
        report.set_inconsistent(e.what());
        out << emit_report(report, format);
        return kExitInconsistent;
      }
      switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::MalformedTable:
        case ErrorKind::BadConstant:
        case ErrorKind::InvalidPoset:
        case ErrorKind::Usage:
        case ErrorKind::TooLarge:
          err << "skh: " << e.what() << '\n';
          return kExitUsage;
        default:
          break;
      }
      ReportEntry entry;
      entry.name    = "error";
      entry.verdict = Verdict::Fails;
      entry.note    = e.what();
      report.add(std::move(entry));
      out << emit_report(report, format);
      return kExitFail;
    }
  }

  namespace {

    std::string joined(std::vector<std::string> const& args) {
      std::string s;
      for (auto const& a : args) {
        s += (s.empty() ? "" : " ") + a;
      }
      return s;
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << text)) {
        throw Error(ErrorKind::Usage, "cannot write " + path);
      }
    }

    std::string pair_name(Algebra const& a, std::pair<Elem, Elem> p) {
      return "(" + a.name(p.first) + "," + a.name(p.second) + ")";
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    CLI::App app{"Finite skew lattice and skew Heyting algebra workbench",
                 "skh"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    std::size_t bound  = kDefaultModelBound;
    unsigned    njobs  = 1;
    std::string format = "text";
    app.add_option("--bound", bound, "Largest model or family size")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", njobs, "Worker threads for exhaustive scans")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string              file;
    std::vector<std::string> require;
    auto* check = app.add_subcommand("check", "Classify an algebra file");
    check->add_option("file", file, "Algebra file")->required();
    check
        ->add_option("--require", require,
                     "Property whose failure fails the command (repeatable)")
        ->allow_extra_args(false);

    std::string emit;
    auto* derive = app.add_subcommand(
        "derive", "Derive the skew Heyting arrow and check its axioms");
    derive->add_option("file", file, "Algebra file")->required();
    derive->add_option("--emit", emit, "Write the algebra with its arrow");

    std::string rel;
    auto*       quot = app.add_subcommand(
        "quotient", "Quotient by one of Green's relations");
    quot->add_option("file", file, "Algebra file")->required();
    quot->add_option("--rel", rel, "Relation")
        ->required()
        ->check(CLI::IsMember({"D", "L", "R"}));

    auto* verify
        = app.add_subcommand("verify", "Run the full skew Heyting suite");
    verify->add_option("file", file, "Algebra file")->required();

    auto* model = app.add_subcommand("model", "Emit a model as an algebra file");
    model->require_subcommand(1);
    std::size_t              mx = 0, my = 0;
    std::vector<std::size_t> fibers;
    auto* pfn = model->add_subcommand("pfn", "Partial maps X -> Y");
    pfn->add_option("--x", mx, "|X|")->required()->check(CLI::PositiveNumber);
    pfn->add_option("--y", my, "|Y|")->required()->check(CLI::PositiveNumber);
    auto* sections
        = model->add_subcommand("sections", "Sections of a surjection");
    sections->add_option("--fibers", fibers, "Fibre sizes, comma separated")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    std::string poset_file;
    auto*       psec = model->add_subcommand(
        "poset-sections", "Sections over the upsets of a poset");
    psec->add_option("posetfile", poset_file, "Poset file")->required();
    psec->add_option("--fibers", fibers, "Fibre sizes, comma separated")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    auto* ups = model->add_subcommand(
        "upsets", "Upset lattice of a poset with its Heyting arrow");
    ups->add_option("posetfile", poset_file, "Poset file")->required();

    std::string family, property;
    std::size_t max_size = 0;
    bool        negate   = false;
    auto*       srch     = app.add_subcommand(
        "search",
        "Find the first family member where a property holds (fails with "
        "--negate)");
    srch->add_option("--family", family, "Model family")
        ->required()
        ->check(CLI::IsMember({"pfn", "sections", "enum", "poset-sections"}));
    srch->add_option("--max-size", max_size, "Largest member size")
        ->required()
        ->check(CLI::PositiveNumber);
    srch->add_option("--property", property, "Property name")->required();
    srch->add_flag("--negate", negate, "Search for a failure instead");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitPass : kExitUsage;
    }

    set_jobs(njobs);
    Format const fmt = format == "machine" ? Format::Machine : Format::Text;

    auto const file_command = [&](std::string const& name,
                                  auto&&             body) {
      std::string text;
      try {
        text = read_file(file);
      } catch (Error const& e) {
        err << "skh: " << e.what() << '\n';
        return static_cast<int>(kExitUsage);
      }
      Report report(name + " " + file, digest(text));
      return run_guarded(report, fmt, out, err, [&] {
        return body(report, parse_algebra_file(text));
      });
    };

    if (check->parsed()) {
      return file_command("check", [&](Report& report, Algebra const& a) {
        auto const& known = property_names();
        for (auto const& r : require) {
          if (r != "costrong-equivalence"
              && std::find(known.begin(), known.end(), r) == known.end()) {
            throw Error(ErrorKind::Usage, "unknown property '" + r + "'");
          }
        }
        PropertyReport const classified = classify(a);
        for (auto const& e : classified.entries()) {
          bool const asserted
              = std::find(require.begin(), require.end(), e.name)
                != require.end();
          report.add(e, a, asserted);
        }
        report.add(check_costrong_equivalence(a), a, true);
        return true;
      });
    }

    if (derive->parsed()) {
      return file_command("derive", [&](Report& report, Algebra const& a) {
        DerivedArrow const d = derive_arrow(a);
        if (!d.exists()) {
          report.add(failing("arrow-derivable",
                             "upset is not a Heyting algebra",
                             {*d.failing_upset}),
                     a);
          return true;
        }
        report.add(holding("arrow-derivable"), a);
        report.add(check_sh_axioms(a, *d.arrow), a);
        report.record("arrow:");
        for (Elem x = 0; x < a.size(); ++x) {
          for (Elem y = 0; y < a.size(); ++y) {
            report.record("  " + a.name(x) + " -> " + a.name(y) + " = "
                          + a.name((*d.arrow)(x, y)));
          }
        }
        if (!emit.empty()) {
          write_file(emit, emit_algebra_file(a.with_arrow(*d.arrow)));
        }
        return true;
      });
    }

    if (quot->parsed()) {
      return file_command("quotient", [&](Report&, Algebra const& a) {
        Greens const     g = greens(a.without_arrow());
        Partition const& p = rel == "D" ? g.D : rel == "L" ? g.L : g.R;
        out << emit_algebra_file(quotient(a, p).algebra,
                                 "quotient by Green's " + rel);
        return false;
      });
    }

    if (verify->parsed()) {
      return file_command("verify", [&](Report& report, Algebra const& a) {
        report.add(verify_suite(a), a);
        return true;
      });
    }

    Report report(joined(args), digest(joined(args)));

    if (model->parsed()) {
      return run_guarded(report, fmt, out, err, [&] {
        if (pfn->parsed()) {
          out << emit_algebra_file(
              partial_function_algebra(mx, my, bound),
              "partial maps, |X| = " + std::to_string(mx)
                  + ", |Y| = " + std::to_string(my));
        } else if (sections->parsed()) {
          out << emit_algebra_file(
              sections_algebra(SurjectionModel::from_fibre_sizes(fibers), bound),
              "sections of a surjection");
        } else if (psec->parsed()) {
          Poset const p = parse_poset_file(read_file(poset_file));
          if (fibers.size() != p.size()) {
            throw Error(ErrorKind::Usage, "one fibre size per point is needed");
          }
          PosetSections const ps = poset_sections_algebra(
              p, SurjectionModel::from_fibre_sizes(fibers, p.names()), bound);
          std::string comment = "sections over the upsets of a poset";
          for (auto const& o : ps.orientations) {
            comment += "\norientation " + o.name + ": "
                       + (o.skew_heyting ? "skew Heyting" : o.note);
          }
          for (auto const& f : ps.formulas) {
            comment += "\nformula " + f.name + ": "
                       + (f.matches ? std::string("matches derived arrow")
                                    : "differs at "
                                          + pair_name(ps.algebra,
                                                      *f.first_mismatch));
          }
          out << emit_algebra_file(ps.algebra, comment);
        } else {
          Poset const p = parse_poset_file(read_file(poset_file));
          out << emit_algebra_file(upset_heyting(p).algebra(),
                                   "upsets of a poset");
        }
        return false;
      });
    }

    // search
    return run_guarded(report, fmt, out, err, [&] {
      SearchOutcome const s = search(family, max_size, property, negate, bound);
      report.record("examined: " + std::to_string(s.examined));
      if (!s.found) {
        ReportEntry e;
        e.name = "search";
        e.note = "no instance where " + property
                 + (negate ? " fails" : " holds");
        e.tuples_checked = e.tuple_space = s.examined;
        report.add(std::move(e));
        return true;
      }
      Algebra const& a = s.found->algebra;
      report.add(s.entry, a, false);
      report.add(failing("search",
                         property + (negate ? " fails" : " holds") + " on "
                             + s.found->label),
                 a);
      report.record("instance: " + s.found->label);
      std::istringstream lines(emit_algebra_file(a));
      for (std::string l; std::getline(lines, l);) {
        report.record(l);
      }
      return true;
    });
  }

}  // namespace skh
