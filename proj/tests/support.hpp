#pragma once

#include "sphereflow/field.hpp"
#include "sphereflow/poly_io.hpp"

#include <random>

namespace testing {

using namespace sphereflow;

/// Fixed-seed generator of small random rationals, polynomials and fields.
class Random
{
public:
  explicit Random(std::uint64_t seed = 20240611)
    : engine_(seed)
  {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Rational rational(int range = 9, int max_den = 5)
  {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational nonzero(int range = 9, int max_den = 5)
  {
    Rational q = 0;
    while (q == 0) {
      q = rational(range, max_den);
    }
    return q;
  }

  /// Random polynomial with monomials of total degree in [low, high]; each monomial kept with probability 1/2.
  Polynomial polynomial(int low, int high, VarSpace space = VarSpace::Sphere)
  {
    Polynomial p(space);
    int const n = arity(space);
    for (int d = low; d <= high; ++d) {
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; i + j <= d; ++j) {
          int const k = d - i - j;
          if (n == 2 && k != 0) {
            continue;
          }
          if (integer(0, 1) == 1) {
            p += Polynomial::monomial({i, j, k}, rational(), space);
          }
        }
      }
    }
    return p;
  }

  CubicDecomposition decomposition()
  {
    return {polynomial(0, 1), polynomial(0, 1), polynomial(0, 1),
            polynomial(1, 2), polynomial(1, 2), polynomial(1, 2)};
  }

  /// Decomposition already in canonical form (A free of z).
  CubicDecomposition canonical_decomposition() { return canonicalize(decomposition()); }

  KolmogorovParams kolmogorov()
  {
    return {rational(), rational(), rational(), rational(), rational(), rational()};
  }

  /// A, B, C with all components nonzero (so A, B, C != 0).
  KolmogorovParams kolmogorov_nonzero()
  {
    return {rational(), rational(), rational(), nonzero(), nonzero(), nonzero()};
  }

  SphereField homogeneous() { return build_homogeneous(polynomial(2, 2), polynomial(2, 2), polynomial(2, 2)); }

private:
  std::mt19937_64 engine_;
};

inline Polynomial poly(char const *text) { return parse_polynomial(text); }
inline Polynomial plane(char const *text) { return parse_polynomial(text, VarSpace::Plane); }

} // namespace testing
