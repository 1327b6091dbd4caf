#pragma once

#include "sphereflow/rational.hpp"

#include <vector>

namespace sphereflow {

/// Dense univariate polynomial over Q, coefficients ordered by ascending power.
/// Trailing zeros are trimmed; the zero polynomial is empty.
class UnivariatePolynomial
{
public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::vector<Rational> const &coefficients() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(Rational const &t) const;
  UnivariatePolynomial derivative() const;

  friend bool operator==(UnivariatePolynomial const &, UnivariatePolynomial const &) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Remainder of a / b. b must be nonzero.
UnivariatePolynomial remainder(UnivariatePolynomial const &a, UnivariatePolynomial const &b);

/// p, p', -rem(p, p'), ... until the remainder vanishes.
std::vector<UnivariatePolynomial> sturm_sequence(UnivariatePolynomial const &p);

/// Sign changes of the sequence at t -> +inf (positive) or t -> -inf.
int sign_variations_at_infinity(std::vector<UnivariatePolynomial> const &sequence, bool positive);

struct RealRootCount
{
  int variations_at_neg_inf = 0;
  int variations_at_pos_inf = 0;
  /// Distinct real roots on the whole line.
  int roots = 0;
};

/// Exact count of distinct real roots. p must be nonzero.
RealRootCount count_real_roots(UnivariatePolynomial const &p);

} // namespace sphereflow
