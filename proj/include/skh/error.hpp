// skh - finite skew lattice and skew Heyting algebra workbench
//
// Error type shared by every module.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skh {

  enum class ErrorKind {
    // malformed input
    MalformedTable,
    BadConstant,
    ParseError,
    InvalidPoset,
    Usage,
    // precondition / classification failures on otherwise valid input
    PreconditionFailed,
    CostaMismatch,
    NotComposable,
    NotACongruence,
    NotAHomomorphism,
    NotUnique,
    NotCoStronglyDistributive,
    NoTop,
    AmbiguousDiff,
    TooLarge,
    // theorem-violation class: an instance contradicts a proved result, which
    // means a bug somewhere upstream
    InconsistencyDetected,
    CoherenceFailure,
    EsakiaFormulaMismatch,
    FactorizationNotFound,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! True for the error kinds that report a contradicted theorem.
  bool is_inconsistency(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  //! Parse failure with a 1-based source position.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace skh
