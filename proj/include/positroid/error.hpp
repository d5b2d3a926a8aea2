#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace positroid {

enum class errc {
  invalid_parameters,
  duplicate_residue,
  non_integral_ball_number,
  not_plus,
  not_strict_plus,
  not_an_inversion,
  limit_exceeded,
  mismatched_parameters,
  empty_window,
  invalid_columns,
  axiom_violation,
  no_pivot,
  rank_deficient,
  invalid_summand,
  mismatched_n,
  orthogonality_violation,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_parameters: return "InvalidParameters";
    case errc::duplicate_residue: return "DuplicateResidue";
    case errc::non_integral_ball_number: return "NonIntegralBallNumber";
    case errc::not_plus: return "NotPlus";
    case errc::not_strict_plus: return "NotStrictPlus";
    case errc::not_an_inversion: return "NotAnInversion";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::mismatched_parameters: return "MismatchedParameters";
    case errc::empty_window: return "EmptyWindow";
    case errc::invalid_columns: return "InvalidColumns";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::no_pivot: return "NoPivot";
    case errc::rank_deficient: return "RankDeficient";
    case errc::invalid_summand: return "InvalidSummand";
    case errc::mismatched_n: return "MismatchedN";
    case errc::orthogonality_violation: return "OrthogonalityViolation";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace positroid
