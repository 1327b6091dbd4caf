#include "sphereflow/great_circles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sphereflow {

namespace {

using Vec3 = Eigen::Vector3d;
using Residuals = Eigen::Matrix<double, 8, 1>;

class PlaneResidual
{
public:
  explicit PlaneResidual(SphereField const &field)
    : P_(field.P())
    , Q_(field.Q())
    , R_(field.R())
  {}

  /// n.(P,Q,R) at eight points of the unit circle in the plane orthogonal to n.
  /// The in-plane frame is built from `hint`, so it varies smoothly near a fixed hint.
  Residuals operator()(Vec3 const &n, Vec3 const &hint) const
  {
    Vec3 const unit = n.normalized();
    Vec3 const e1 = (hint - hint.dot(unit) * unit).normalized();
    Vec3 const e2 = unit.cross(e1);
    Residuals out;
    for (int k = 0; k < 8; ++k) {
      double const theta = k * std::numbers::pi / 8.0;
      Vec3 const p = std::cos(theta) * e1 + std::sin(theta) * e2;
      out(k) = unit(0) * P_(p) + unit(1) * Q_(p) + unit(2) * R_(p);
    }
    return out;
  }

private:
  CompiledPolynomial<double> P_, Q_, R_;
};

Vec3 any_orthogonal(Vec3 const &n)
{
  Vec3 const axis = std::abs(n(0)) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (axis - axis.dot(n) * n).normalized();
}

double rms(Residuals const &r) { return std::sqrt(r.squaredNorm() / 8.0); }

struct Refined
{
  Vec3 direction;
  double residual;
  bool converged;
  /// Smallest singular value of the residual Jacobian at the end point.
  double min_singular;
};

Refined refine(PlaneResidual const &residual, Vec3 start, double scale, GreatCircleSearch const &search)
{
  Vec3 n = start.normalized();
  double lambda = 1e-3;
  Residuals r = residual(n, any_orthogonal(n));
  double cost = r.squaredNorm();
  double min_singular = 0.0;
  bool converged = false;
  for (int it = 0; it < search.max_iterations; ++it) {
    Vec3 const t1 = any_orthogonal(n);
    Vec3 const t2 = n.cross(t1);
    r = residual(n, t1);
    cost = r.squaredNorm();
    if (rms(r) <= 1e-3 * search.tolerance * scale) {
      converged = true;
      break;
    }
    Eigen::Matrix<double, 8, 2> J;
    double const h = 1e-7;
    J.col(0) = (residual((n + h * t1).normalized(), t1) - residual((n - h * t1).normalized(), t1)) / (2 * h);
    J.col(1) = (residual((n + h * t2).normalized(), t1) - residual((n - h * t2).normalized(), t1)) / (2 * h);
    Eigen::Matrix2d const JtJ = J.transpose() * J;
    Eigen::Vector2d const g = J.transpose() * r;
    bool stepped = false;
    for (int tries = 0; tries < 12 && !stepped; ++tries) {
      Eigen::Matrix2d A = JtJ;
      A.diagonal() += lambda * (JtJ.diagonal().array() + 1e-30).matrix();
      Eigen::Vector2d const step = A.ldlt().solve(-g);
      Vec3 const candidate = (n + step(0) * t1 + step(1) * t2).normalized();
      double const new_cost = residual(candidate, t1).squaredNorm();
      if (new_cost < cost) {
        double const moved = (candidate - n).norm();
        n = candidate;
        cost = new_cost;
        lambda = std::max(lambda / 10.0, 1e-12);
        stepped = true;
        if (moved < 1e-15) {
          converged = true;
        }
      } else {
        lambda *= 10.0;
      }
    }
    if (!stepped || converged) {
      converged = true;
      break;
    }
  }
  {
    Vec3 const t1 = any_orthogonal(n);
    Vec3 const t2 = n.cross(t1);
    double const h = 1e-6;
    Eigen::Matrix<double, 8, 2> J;
    J.col(0) = (residual((n + h * t1).normalized(), t1) - residual((n - h * t1).normalized(), t1)) / (2 * h);
    J.col(1) = (residual((n + h * t2).normalized(), t1) - residual((n - h * t2).normalized(), t1)) / (2 * h);
    min_singular = Eigen::JacobiSVD<Eigen::Matrix<double, 8, 2>>(J).singularValues()(1);
  }
  return {n, std::sqrt(cost / 8.0), converged, min_singular};
}

Vec3 canonical_sign(Vec3 n)
{
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n(i)) < 1e-15) {
      n(i) = 0.0;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n(i)) > 1e-12) {
      return n(i) < 0 ? Vec3(-n) : n;
    }
  }
  return n;
}

/// Rational plane through the snapped direction, scaled to coprime integers.
CircleSpec snap(Vec3 const &n, long max_denominator)
{
  int pivot = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(n(i)) > std::abs(n(pivot))) {
      pivot = i;
    }
  }
  std::array<Rational, 3> q;
  for (int i = 0; i < 3; ++i) {
    q[i] = i == pivot ? Rational(1) : best_rational(n(i) / n(pivot), max_denominator);
  }
  mpz_class lcm = 1;
  for (auto const &v : q) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  mpz_class gcd = 0;
  std::array<mpz_class, 3> ints;
  for (int i = 0; i < 3; ++i) {
    Rational const scaled = q[i] * lcm;
    ints[i] = scaled.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (auto &v : ints) {
    v /= gcd;
  }
  for (auto const &v : ints) {
    if (v != 0) {
      if (v < 0) {
        for (auto &w : ints) {
          w = -w;
        }
      }
      break;
    }
  }
  return CircleSpec{Rational(ints[0]), Rational(ints[1]), Rational(ints[2]), Rational(0)};
}

double coefficient_scale(SphereField const &field)
{
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (auto const &[e, c] : field.component(i).terms()) {
      scale = std::max(scale, std::abs(c.get_d()));
    }
  }
  return scale;
}

} // namespace

int GreatCircleResult::certified_count() const
{
  return static_cast<int>(std::count_if(circles.begin(), circles.end(), [](auto const &c) { return c.certified(); }));
}

int great_circle_case(CircleSpec const &circle)
{
  if (circle.a == 0 || circle.b == 0) {
    return 1;
  }
  return circle.c == 0 ? 2 : 3;
}

GreatCircleResult solve_great_circles_homogeneous(SphereField const &field, GreatCircleSearch const &search)
{
  if (!is_homogeneous_field(field)) {
    throw std::invalid_argument("solve_great_circles_homogeneous: field is not homogeneous cubic");
  }
  GreatCircleResult result;
  double const scale = coefficient_scale(field);
  if (scale == 0.0) {
    result.infinite = true;
    return result;
  }
  auto const [x, y, z] = sphere_vars();
  bool const extactic_vanishes = extactic(field, {x, y, z}).is_zero();

  // Fibonacci grid, ordered by z so neighbours lie in a short index window.
  int const N = std::max(search.grid_points, 16);
  double const golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> grid(N);
  for (int i = 0; i < N; ++i) {
    double const zc = 1.0 - (2.0 * i + 1.0) / N;
    double const r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    grid[i] = Vec3(r * std::cos(golden * i), r * std::sin(golden * i), zc);
  }
  PlaneResidual const residual(field);
  std::vector<double> value(N);
  for (int i = 0; i < N; ++i) {
    value[i] = residual(grid[i], any_orthogonal(grid[i])).squaredNorm();
  }
  double const radius = 2.5 * std::sqrt(4.0 * std::numbers::pi / N);
  int const window = static_cast<int>(std::ceil(radius * N / 2.0)) + 1;
  std::vector<int> minima;
  for (int i = 0; i < N; ++i) {
    bool is_min = true;
    for (int j = std::max(0, i - window); j < std::min(N, i + window + 1) && is_min; ++j) {
      if (j == i) {
        continue;
      }
      // Residual is even in n, so antipodes count as neighbours too.
      double const dist = std::min((grid[i] - grid[j]).norm(), (grid[i] + grid[j]).norm());
      if (dist < radius && (value[j] < value[i] || (value[j] == value[i] && j < i))) {
        is_min = false;
      }
    }
    for (int j = std::max(0, N - 1 - i - window); j < std::min(N, N - i + window) && is_min; ++j) {
      if ((grid[i] + grid[j]).norm() < radius && value[j] < value[i]) {
        is_min = false;
      }
    }
    if (is_min) {
      minima.push_back(i);
    }
  }
  std::sort(minima.begin(), minima.end(), [&](int a, int b) { return value[a] < value[b] || (value[a] == value[b] && a < b); });
  if (static_cast<int>(minima.size()) > search.max_candidates) {
    result.budget_exhausted = true;
    minima.resize(search.max_candidates);
  }

  std::vector<Refined> zeros;
  for (int i : minima) {
    Refined const r = refine(residual, grid[i], scale, search);
    if (r.residual > search.tolerance * scale) {
      if (!r.converged) {
        result.budget_exhausted = true;
      }
      continue;
    }
    zeros.push_back({canonical_sign(r.direction), r.residual, r.converged, r.min_singular});
  }
  if (extactic_vanishes) {
    // A continuum of invariant planes shows up as zeros with a rank-deficient residual Jacobian.
    for (auto const &zero : zeros) {
      if (zero.min_singular < 1e-6 * scale) {
        result.infinite = true;
        return result;
      }
    }
  }
  std::sort(zeros.begin(), zeros.end(), [](Refined const &a, Refined const &b) {
    return std::lexicographical_compare(a.direction.data(), a.direction.data() + 3, b.direction.data(),
                                        b.direction.data() + 3);
  });
  for (auto const &zero : zeros) {
    bool duplicate = false;
    for (auto const &kept : result.circles) {
      Vec3 const k(kept.direction[0], kept.direction[1], kept.direction[2]);
      if (std::min((k - zero.direction).norm(), (k + zero.direction).norm()) < 1e-6) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) {
      continue;
    }
    GreatCircleCandidate candidate;
    candidate.direction = {zero.direction(0), zero.direction(1), zero.direction(2)};
    candidate.residual = zero.residual;
    CircleSpec const exact = snap(zero.direction, search.max_denominator);
    if (auto report = cofactor_of(field, exact.plane())) {
      candidate.exact = exact;
      candidate.cofactor = report->cofactor;
    }
    result.circles.push_back(std::move(candidate));
  }
  return result;
}

} // namespace sphereflow
