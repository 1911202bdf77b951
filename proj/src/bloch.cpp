#include "qnlp/bloch.hpp"

#include <algorithm>
#include <cmath>

#include "qnlp/errors.hpp"

namespace qnlp {

double BlochVector::norm() const { return std::sqrt(norm2()); }

BlochVector BlochVector::clamped_to_ball() const {
  double n = norm();
  if (n <= 1.0) return *this;
  return {x / n, y / n, z / n};
}

DensityMatrix2 DensityMatrix2::maximally_mixed() {
  DensityMatrix2 d;
  d.m[0][0] = 0.5;
  d.m[1][1] = 0.5;
  return d;
}

double DensityMatrix2::purity() const {
  // tr(rho^2) = sum_ij rho_ij * rho_ji
  std::complex<double> t = m[0][0] * m[0][0] + m[0][1] * m[1][0] +
                           m[1][0] * m[0][1] + m[1][1] * m[1][1];
  return t.real();
}

double DensityMatrix2::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      d = std::max(d, std::abs(m[i][j] - std::conj(m[j][i])));
  return d;
}

double DensityMatrix2::min_eigenvalue() const {
  // Eigenvalues of a 2x2 Hermitian matrix: (tr +- sqrt(tr^2 - 4 det)) / 2.
  double tr = (m[0][0] + m[1][1]).real();
  std::complex<double> detc = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double disc = tr * tr - 4.0 * detc.real();
  if (disc < 0.0) disc = 0.0;
  return 0.5 * (tr - std::sqrt(disc));
}

BlochVector DensityMatrix2::bloch() const {
  return {2.0 * m[0][1].real(), -2.0 * m[0][1].imag(),
          (m[0][0] - m[1][1]).real()};
}

DensityMatrix2 DensityMatrix2::operator+(const DensityMatrix2& o) const {
  DensityMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

DensityMatrix2 DensityMatrix2::operator*(double s) const {
  DensityMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

double hs_inner(const DensityMatrix2& a, const DensityMatrix2& b) {
  std::complex<double> t = a.m[0][0] * b.m[0][0] + a.m[0][1] * b.m[1][0] +
                           a.m[1][0] * b.m[0][1] + a.m[1][1] * b.m[1][1];
  return t.real();
}

namespace qsim {

DensityMatrix2 lift_density(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-9)
    throw BlochOutOfBall("|r| = " + std::to_string(r.norm()));
  DensityMatrix2 d;
  d.m[0][0] = 0.5 * (1.0 + r.z);
  d.m[1][1] = 0.5 * (1.0 - r.z);
  d.m[0][1] = 0.5 * std::complex<double>(r.x, -r.y);
  d.m[1][0] = 0.5 * std::complex<double>(r.x, r.y);
  return d;
}

}  // namespace qsim

}  // namespace qnlp
