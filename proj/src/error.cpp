#include "ncat/error.hpp"

namespace ncat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse error";
    case Errc::dangling_reference: return "dangling reference";
    case Errc::duplicate_id: return "duplicate id";
    case Errc::dimension_too_low: return "dimension too low";
    case Errc::wrong_dimension: return "wrong dimension";
    case Errc::unknown_object: return "unknown object";
    case Errc::out_of_range: return "out of range";
    case Errc::not_linear: return "not linear";
    case Errc::containment: return "containment violation";
    case Errc::not_a_complex: return "not a complex";
    case Errc::degree_overflow: return "degree overflow";
    case Errc::functoriality: return "functoriality violation";
    case Errc::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

std::string format_violation(const Violation& v) {
  std::string out = v.law + ":";
  for (const auto& w : v.witnesses) {
    out += ' ';
    out += w;
  }
  if (!v.detail.empty()) {
    out += " (" + v.detail + ")";
  }
  return out;
}

}  // namespace ncat
