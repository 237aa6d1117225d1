#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbg {

enum class ErrorCode {
  invalid_input,
  not_associative,
  no_identity,
  not_latin_square,
  order_cap_exceeded,
  action_not_homomorphism,
  not_normal,
  not_exact_factorization,
  decomposition_not_unique,
  commutation_fails,
  image_not_abelian,
  not_homomorphism,
  invalid_matrix,
  trivial_h,
  precondition_failed,
  cond_fails,
  schema_violation,
  structure_violation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending element, row, triple or JSON path.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rbg
