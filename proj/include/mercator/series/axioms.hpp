#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mercator/series/bivariate.hpp"
#include "mercator/series/univariate.hpp"

namespace mercator::series {

/// Exponents of X, Y, Z.
struct Monomial {
  std::array<int, 3> exponents{};

  /// e.g. "X^2*Y", "1" for the constant monomial.
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct AxiomCheck {
  std::string axiom;  // "unit", "commutativity", "associativity"
  bool passed = true;
  std::optional<Monomial> first_offending;  // in degree-then-lexicographic order
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck& check(const std::string& axiom) const;
};

/// Exact check of F(X,0) = X, F(0,Y) = Y, F(X,Y) = F(Y,X) and
/// F(F(X,Y),Z) = F(X,F(Y,Z)) up to the truncation order of F.
AxiomReport check_group_law_axioms(const BivariateSeries& law);

/// F(X, iota(X)) up to order(law), with iota(X) = -X.
UnivariateSeries evaluate_at_negation(const BivariateSeries& law);

struct InvolutionCheck {
  bool passed = true;
  std::optional<int> first_offending_degree;
};

/// [x^{2n+1}] exp_series == (-1)^n [x^{2n+1}] log_series for every odd
/// degree up to min order, and all even coefficients vanish in both.
InvolutionCheck check_involution(const UnivariateSeries& log_series,
                                 const UnivariateSeries& exp_series);

/// Builds lambda = arctanh o sin and lambda^{-1} = arcsin o tanh by
/// composition and runs check_involution on them.
InvolutionCheck check_involution_coefficients(int order);

}  // namespace mercator::series
