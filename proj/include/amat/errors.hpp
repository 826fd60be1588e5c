#ifndef AMAT_ERRORS_HPP
#define AMAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace amat {

/// Failure categories. Every public operation that can fail throws an
/// `Error` carrying one of these; the CLI maps them onto exit codes.
enum class Errc {
  parse_error,
  zero_polynomial,
  unknown_variable,
  not_square,
  singular_matrix,
  invalid_form,
  unsupported_degree,
  wrong_degree,
  divisibility_violation,
  reducible_form,
  zero_discriminant,
  field_mismatch,
  zero_element,
  degenerate_element,
  odd_dimension,
  non_integer_entries,
  root_finding,
  rounding_failure,
  internal_error,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "parse-error";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::unknown_variable: return "unknown-variable";
    case Errc::not_square: return "non-square-matrix";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::invalid_form: return "invalid-form";
    case Errc::unsupported_degree: return "unsupported-degree";
    case Errc::wrong_degree: return "wrong-degree";
    case Errc::divisibility_violation: return "divisibility-violation";
    case Errc::reducible_form: return "reducible-form";
    case Errc::zero_discriminant: return "zero-discriminant";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::zero_element: return "zero-element";
    case Errc::degenerate_element: return "degenerate-element";
    case Errc::odd_dimension: return "odd-dimension";
    case Errc::non_integer_entries: return "non-integer-entries";
    case Errc::root_finding: return "root-finding-failure";
    case Errc::rounding_failure: return "rounding-failure";
    case Errc::internal_error: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace amat

#endif  // AMAT_ERRORS_HPP
