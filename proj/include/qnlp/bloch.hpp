#pragma once

#include <complex>

namespace qnlp {

/// Point in the closed unit ball of R^3. Identifies a single-qubit state via
/// rho = (I + x*sx + y*sy + z*sz) / 2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }

  /// Radially projects onto the unit ball (identity for interior points).
  BlochVector clamped_to_ball() const;
};

/// 2x2 Hermitian, PSD, trace-one matrix.
struct DensityMatrix2 {
  std::complex<double> m[2][2] = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};

  static DensityMatrix2 maximally_mixed();

  std::complex<double> trace() const { return m[0][0] + m[1][1]; }
  double purity() const;           // tr(rho^2), real for Hermitian input
  double hermiticity_defect() const;  // max |m[i][j] - conj(m[j][i])|
  double min_eigenvalue() const;

  BlochVector bloch() const;

  DensityMatrix2 operator+(const DensityMatrix2& o) const;
  DensityMatrix2 operator*(double s) const;
};

/// Real part of the Hilbert-Schmidt inner product tr(a * b).
double hs_inner(const DensityMatrix2& a, const DensityMatrix2& b);

namespace qsim {

/// rho(r) = (I + r_x sx + r_y sy + r_z sz) / 2.
/// Throws BlochOutOfBall when |r| > 1 + 1e-9.
DensityMatrix2 lift_density(const BlochVector& r);

}  // namespace qsim

}  // namespace qnlp
