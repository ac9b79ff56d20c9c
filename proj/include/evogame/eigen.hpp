#pragma once

#include <array>
#include <complex>

namespace evogame {

using Complex = std::complex<double>;
using EigenTriple = std::array<Complex, 3>;

// Dense 3x3 matrix, row-major, zero-based.
struct Matrix3 {
  std::array<std::array<double, 3>, 3> a{};

  double& operator()(int r, int c) { return a[r][c]; }
  double operator()(int r, int c) const { return a[r][c]; }

  static Matrix3 diagonal(double d0, double d1, double d2);
  bool is_diagonal() const;
  double trace() const;
  double determinant() const;
  // Sum of the principal 2x2 minors.
  double minor_sum() const;
  // Largest absolute entry.
  double max_abs() const;
};

// det(M - lambda I), evaluated through the characteristic polynomial.
Complex characteristic_value(const Matrix3& m, Complex lambda);

// Roots of t^3 + b t^2 + c t + d = 0. Real roots are refined by Newton's
// method; a complex pair is returned conjugate-exact.
EigenTriple solve_monic_cubic(double b, double c, double d);

// Eigenvalues of m from its characteristic cubic, sorted by ascending real
// part and then ascending imaginary part. Diagonal input returns the diagonal
// entries exactly.
EigenTriple general_eigenvalues(const Matrix3& m);

void sort_eigenvalues(EigenTriple& eigs);

}  // namespace evogame
