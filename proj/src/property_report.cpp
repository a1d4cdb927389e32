// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/property_report.hpp"

#include <algorithm>

#include "skh/error.hpp"

namespace skh {

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::Holds: return "holds";
      case Verdict::Fails: return "fails";
      case Verdict::Skipped: return "skipped";
    }
    return "unknown";
  }

  bool PropertyReport::all_hold() const noexcept {
    return std::none_of(_entries.begin(), _entries.end(), [](auto const& e) {
      return e.fails();
    });
  }

  bool PropertyReport::contains(std::string_view name) const noexcept {
    return std::any_of(_entries.begin(), _entries.end(), [&](auto const& e) {
      return e.name == name;
    });
  }

  PropertyEntry const& PropertyReport::at(std::string_view name) const {
    for (auto const& e : _entries) {
      if (e.name == name) {
        return e;
      }
    }
    throw Error(ErrorKind::PreconditionFailed,
                "no report entry named " + std::string(name));
  }

}  // namespace skh
