// Test-only reference routes, independent of the library implementations
// they check.
#pragma once

#include "spinorlab/matrices.hpp"

#include <cmath>
#include <vector>

namespace spinorlab::oracles {

/// Matrix exponential by scaling and squaring of the plain Taylor series.
inline Matrix2c expm(const Matrix2c& a) {
  int squarings = 0;
  Matrix2c scaled = a;
  while (scaled.cwiseAbs().maxCoeff() > 0.25) {
    scaled /= 2.0;
    ++squarings;
  }
  Matrix2c term = Matrix2c::Identity();
  Matrix2c sum = Matrix2c::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Fit det(M(p^2)) with a degree-2 polynomial in p^2 through exact
/// interpolation, validate on extra samples, and return the real roots.
/// `det_at` must evaluate the determinant at a given p^2.
template <typename F>
std::vector<double> quadratic_det_roots(F&& det_at, double s0, double s1, double s2,
                                        double* fit_error = nullptr) {
  const double x[3] = {s0, s1, s2};
  double y[3];
  for (int i = 0; i < 3; ++i) y[i] = det_at(x[i]);
  // Lagrange -> monomial coefficients c0 + c1 s + c2 s^2.
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double xi = x[i];
    const double xj = x[(i + 1) % 3], xk = x[(i + 2) % 3];
    const double denom = (xi - xj) * (xi - xk);
    c2 += y[i] / denom;
    c1 += y[i] * (-(xj + xk)) / denom;
    c0 += y[i] * (xj * xk) / denom;
  }
  if (fit_error) {
    double err = 0.0;
    for (double s : {0.5 * (s0 + s1), 0.5 * (s1 + s2), s2 + (s2 - s0)}) {
      const double predicted = c0 + c1 * s + c2 * s * s;
      err = std::max(err, std::abs(det_at(s) - predicted));
    }
    *fit_error = err;
  }
  std::vector<double> roots;
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (std::abs(c2) < 1e-12 * scale) {
    if (std::abs(c1) > 1e-12 * scale) roots.push_back(-c0 / c1);
    return roots;
  }
  double disc = c1 * c1 - 4.0 * c2 * c0;
  // A squared linear factor gives a double root; keep it when roundoff
  // pushes the discriminant slightly negative.
  if (disc < 0.0 && std::abs(disc) < 1e-8 * std::max(c1 * c1, std::abs(4.0 * c2 * c0)))
    disc = 0.0;
  if (disc < 0.0) return roots;
  if (disc == 0.0) {
    roots.push_back(-0.5 * c1 / c2);
    roots.push_back(-0.5 * c1 / c2);
    return roots;
  }
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  roots.push_back(q / c2);
  if (std::abs(q) > 0.0) roots.push_back(c0 / q);
  return roots;
}

/// Root of det(M(s)) when det is the square of a polynomial linear in s.
/// sqrt(|det|) is then piecewise linear with its kink at the root, so the
/// root is recovered well-conditioned by intersecting the two branches.
/// Returns the averaged branch roots; `branch_gap` reports their spread.
template <typename F>
double squared_linear_det_root(F&& det_at, double guess, double spread,
                               double* branch_gap = nullptr) {
  auto g = [&](double s) { return std::sqrt(std::abs(det_at(s))); };
  auto line_root = [&](double s1, double s2) {
    const double g1 = g(s1), g2 = g(s2);
    if (g1 == g2) return 0.5 * (s1 + s2);
    return s1 - g1 * (s2 - s1) / (g2 - g1);
  };
  const double left1 = std::max(0.0, guess - spread);
  const double left2 = 0.5 * (left1 + guess);
  const double right1 = guess + spread;
  const double right2 = guess + 0.5 * spread;
  const double from_left = line_root(left1, left2);
  const double from_right = line_root(right1, right2);
  if (branch_gap) *branch_gap = std::abs(from_left - from_right);
  return 0.5 * (from_left + from_right);
}

}  // namespace spinorlab::oracles
