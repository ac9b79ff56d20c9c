#include "evogame/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace evogame {

Matrix3 Matrix3::diagonal(double d0, double d1, double d2) {
  Matrix3 m;
  m.a[0][0] = d0;
  m.a[1][1] = d1;
  m.a[2][2] = d2;
  return m;
}

bool Matrix3::is_diagonal() const {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c && a[r][c] != 0.0) return false;
    }
  }
  return true;
}

double Matrix3::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

double Matrix3::determinant() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double Matrix3::minor_sum() const {
  return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) + (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
         (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
}

double Matrix3::max_abs() const {
  double m = 0;
  for (const auto& row : a) {
    for (double v : row) m = std::max(m, std::abs(v));
  }
  return m;
}

Complex characteristic_value(const Matrix3& m, Complex lambda) {
  // Cofactor expansion of det(M - lambda I) in complex arithmetic.
  const Complex a00 = m(0, 0) - lambda, a11 = m(1, 1) - lambda, a22 = m(2, 2) - lambda;
  return a00 * (a11 * a22 - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * a22 - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - a11 * m(2, 0));
}

namespace {

double cubic(double b, double c, double d, double t) { return ((t + b) * t + c) * t + d; }

double cubic_slope(double b, double c, double t) { return (3 * t + 2 * b) * t + c; }

double polish_real_root(double b, double c, double d, double t) {
  for (int iter = 0; iter < 8; ++iter) {
    const double f = cubic(b, c, d, t);
    const double fp = cubic_slope(b, c, t);
    if (f == 0 || fp == 0) break;
    const double next = t - f / fp;
    if (!std::isfinite(next) || std::abs(cubic(b, c, d, next)) >= std::abs(f)) break;
    t = next;
  }
  return t;
}

}  // namespace

EigenTriple solve_monic_cubic(double b, double c, double d) {
  // Depressed form u^3 + p u + q with t = u - b/3.
  const double shift = b / 3;
  const double p = c - b * b / 3;
  const double q = 2 * b * b * b / 27 - b * c / 3 + d;
  const double disc = (q / 2) * (q / 2) + (p / 3) * (p / 3) * (p / 3);

  EigenTriple roots;
  if (disc > 0) {
    const double sq = std::sqrt(disc);
    const double big = -std::copysign(std::cbrt(std::abs(q) / 2 + sq), q);
    const double small = big != 0 ? -p / (3 * big) : 0;
    const double real = polish_real_root(b, c, d, big + small - shift);
    // Deflate: t^3 + b t^2 + c t + d = (t - real)(t^2 + e t + f).
    const double e = b + real;
    const double f = c + real * e;
    const double half = -e / 2;
    const double rad = half * half - f;
    if (rad < 0) {
      const double im = std::sqrt(-rad);
      roots = {Complex(real, 0), Complex(half, -im), Complex(half, im)};
    } else {
      // Deflation turned the pair real; happens only at round-off level.
      const double s = std::sqrt(rad);
      roots = {Complex(real, 0), Complex(polish_real_root(b, c, d, half - s), 0),
               Complex(polish_real_root(b, c, d, half + s), 0)};
    }
  } else if (p == 0) {
    const double t = polish_real_root(b, c, d, -shift);
    roots = {Complex(t, 0), Complex(t, 0), Complex(t, 0)};
  } else {
    const double r = 2 * std::sqrt(-p / 3);
    const double arg = std::clamp(3 * q / (p * r), -1.0, 1.0);
    const double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) {
      const double u = r * std::cos(theta - 2 * std::numbers::pi * k / 3);
      roots[k] = Complex(polish_real_root(b, c, d, u - shift), 0);
    }
  }
  sort_eigenvalues(roots);
  return roots;
}

void sort_eigenvalues(EigenTriple& eigs) {
  std::sort(eigs.begin(), eigs.end(), [](const Complex& l, const Complex& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
}

EigenTriple general_eigenvalues(const Matrix3& m) {
  if (m.is_diagonal()) {
    EigenTriple diag = {Complex(m(0, 0), 0), Complex(m(1, 1), 0), Complex(m(2, 2), 0)};
    sort_eigenvalues(diag);
    return diag;
  }
  // det(lambda I - M) = lambda^3 - tr lambda^2 + minors lambda - det
  return solve_monic_cubic(-m.trace(), m.minor_sum(), -m.determinant());
}

}  // namespace evogame
