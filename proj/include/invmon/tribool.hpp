#pragma once

#include <ostream>
#include <string_view>

namespace invmon {

  //! Outcome of a semi-decision. `refuted` is only ever produced with the
  //! support of an exact oracle.
  enum class TriBool { confirmed, refuted, unknown };

  constexpr std::string_view to_string(TriBool t) noexcept {
    switch (t) {
      case TriBool::confirmed:
        return "confirmed";
      case TriBool::refuted:
        return "refuted";
      default:
        return "unknown";
    }
  }

  //! 0, 1, 2 for confirmed, refuted, unknown.
  constexpr int exit_code(TriBool t) noexcept {
    return t == TriBool::confirmed ? 0 : t == TriBool::refuted ? 1 : 2;
  }

  inline std::ostream& operator<<(std::ostream& os, TriBool t) {
    return os << to_string(t);
  }

}  // namespace invmon
