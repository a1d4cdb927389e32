// skh - finite skew lattice and skew Heyting algebra workbench
//
// The command line interface, as a library function so that it can be
// driven from tests.

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "skh/report.hpp"

namespace skh {

  enum ExitStatus : int {
    kExitPass         = 0,
    kExitFail         = 1,
    kExitUsage        = 2,
    kExitInconsistent = 3,
  };

  //! Runs one command; args excludes the program name. Reports and emitted
  //! files go to out, diagnostics to err.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

  //! Runs body, mapping its outcome onto the exit status contract:
  //!
  //!   returns normally          report's verdict (0 or 1), report printed
  //!                             unless body returned false
  //!   inconsistency error       3, report printed as INCONSISTENT
  //!   usage, parse, size error  2, message on err
  //!   other library error       1, report printed with an "error" entry
  int run_guarded(Report&                report,
                  Format                 format,
                  std::ostream&          out,
                  std::ostream&          err,
                  std::function<bool()> const& body);

}  // namespace skh
