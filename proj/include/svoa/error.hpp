#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svoa {

enum class ErrorKind {
  division_by_zero,
  zero_series,
  off_grid,
  non_monic,
  non_half_integer_rank,
  rank_not_multiple_of_8,
  closure_cap_exceeded,
  non_integral_fusion,
  singular_system,
  inconsistent_system,
  published_mismatch,
  invariance_failure,
  not_decomposable,
  negative_multiplicity,
  insufficient_truncation,
  non_integer_coefficient,
  non_rational,
  out_of_range,
  unknown_name,
  enumeration_budget,
  parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace svoa
