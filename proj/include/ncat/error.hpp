#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncat {

enum class Errc {
  parse,
  dangling_reference,
  duplicate_id,
  dimension_too_low,
  wrong_dimension,
  unknown_object,
  out_of_range,
  not_linear,
  containment,
  not_a_complex,
  degree_overflow,
  functoriality,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-checkable error category.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// One broken law together with the cells (by name) that witness it.
struct Violation {
  std::string law;
  std::vector<std::string> witnesses;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

std::string format_violation(const Violation& v);

}  // namespace ncat
