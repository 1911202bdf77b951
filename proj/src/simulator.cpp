#include "qnlp/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "qnlp/errors.hpp"

namespace qnlp::qsim {

namespace {

constexpr int kMaxWires = 12;

double gate_angle(const Gate& g, std::span<const double> params) {
  return g.param >= 0 ? params[g.param] : g.fixed_angle;
}

}  // namespace

StateVec::StateVec(int wires) : n_(wires) {
  if (wires < 1 || wires > kMaxWires)
    throw InvalidInput("wire count " + std::to_string(wires) +
                       " outside [1, " + std::to_string(kMaxWires) + "]");
  amps_.assign(std::size_t(1) << n_, cd(0.0, 0.0));
  amps_[0] = 1.0;
}

void StateVec::apply_1q(int w, cd u00, cd u01, cd u10, cd u11) {
  const std::size_t bit = std::size_t(1) << w;
  const std::size_t dim = amps_.size();
  for (std::size_t x = 0; x < dim; ++x) {
    if (x & bit) continue;
    cd a0 = amps_[x];
    cd a1 = amps_[x | bit];
    amps_[x] = u00 * a0 + u01 * a1;
    amps_[x | bit] = u10 * a0 + u11 * a1;
  }
}

void StateVec::apply_h(int w) {
  const double s = 1.0 / std::sqrt(2.0);
  apply_1q(w, s, s, s, -s);
}

void StateVec::apply_rx(int w, double theta) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  apply_1q(w, c, cd(0, -s), cd(0, -s), c);
}

void StateVec::apply_ry(int w, double theta) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  apply_1q(w, c, -s, s, c);
}

void StateVec::apply_rz(int w, double theta) {
  apply_1q(w, std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2));
}

void StateVec::apply_crz(int wc, int wt, double theta) {
  const std::size_t mask = (std::size_t(1) << wc) | (std::size_t(1) << wt);
  const cd phase = std::polar(1.0, theta);
  for (std::size_t x = 0; x < amps_.size(); ++x)
    if ((x & mask) == mask) amps_[x] *= phase;
}

void StateVec::apply_gate(const Gate& g, std::span<const double> params) {
  switch (g.kind) {
    case GateKind::H: apply_h(g.w0); break;
    case GateKind::RX: apply_rx(g.w0, gate_angle(g, params)); break;
    case GateKind::RY: apply_ry(g.w0, gate_angle(g, params)); break;
    case GateKind::RZ: apply_rz(g.w0, gate_angle(g, params)); break;
    case GateKind::CRZ: apply_crz(g.w0, g.w1, gate_angle(g, params)); break;
  }
}

void StateVec::apply_gate_dagger(const Gate& g, std::span<const double> params) {
  switch (g.kind) {
    case GateKind::H: apply_h(g.w0); break;
    case GateKind::RX: apply_rx(g.w0, -gate_angle(g, params)); break;
    case GateKind::RY: apply_ry(g.w0, -gate_angle(g, params)); break;
    case GateKind::RZ: apply_rz(g.w0, -gate_angle(g, params)); break;
    case GateKind::CRZ: apply_crz(g.w0, g.w1, -gate_angle(g, params)); break;
  }
}

void StateVec::apply_gate_derivative(const Gate& g, std::span<const double> params) {
  const double th = gate_angle(g, params);
  const double c = std::cos(th / 2), s = std::sin(th / 2);
  switch (g.kind) {
    case GateKind::RZ:
      apply_1q(g.w0, cd(0, -0.5) * std::polar(1.0, -th / 2), 0.0, 0.0,
               cd(0, 0.5) * std::polar(1.0, th / 2));
      break;
    case GateKind::RX:
      apply_1q(g.w0, -0.5 * s, cd(0, -0.5 * c), cd(0, -0.5 * c), -0.5 * s);
      break;
    case GateKind::RY:
      apply_1q(g.w0, -0.5 * s, -0.5 * c, 0.5 * c, -0.5 * s);
      break;
    case GateKind::CRZ: {
      const std::size_t mask = (std::size_t(1) << g.w0) | (std::size_t(1) << g.w1);
      const cd dphase = cd(0, 1) * std::polar(1.0, th);
      for (std::size_t x = 0; x < amps_.size(); ++x)
        amps_[x] = ((x & mask) == mask) ? amps_[x] * dphase : cd(0.0, 0.0);
      break;
    }
    case GateKind::H:
      throw InvalidInput("H carries no angle");
  }
}

double StateVec::project_bell(int i, int j) {
  if (i == j) throw InvalidInput("bell pair on a single wire");
  const int lo = std::min(i, j), hi = std::max(i, j);
  const std::size_t lo_bit = std::size_t(1) << lo;
  const std::size_t hi_bit = std::size_t(1) << hi;
  const int m = n_ - 2;
  std::vector<cd> out(std::size_t(1) << m, cd(0.0, 0.0));
  for (std::size_t y = 0; y < out.size(); ++y) {
    // Re-insert zeros at positions lo and hi of the compact index.
    std::size_t low = y & (lo_bit - 1);
    std::size_t mid = (y >> lo) & ((std::size_t(1) << (hi - lo - 1)) - 1);
    std::size_t high = y >> (hi - 1);
    std::size_t x0 = low | (mid << (lo + 1)) | (high << (hi + 1));
    out[y] = amps_[x0] + amps_[x0 | lo_bit | hi_bit];
  }
  double nrm = 0.0;
  for (const cd& a : out) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  amps_ = std::move(out);
  n_ = m;
  return nrm;
}

DensityMatrix2 StateVec::reduced_density(int w) const {
  const std::size_t bit = std::size_t(1) << w;
  cd r00 = 0, r01 = 0, r11 = 0;
  for (std::size_t x = 0; x < amps_.size(); ++x) {
    if (x & bit) continue;
    r00 += amps_[x] * std::conj(amps_[x]);
    r11 += amps_[x | bit] * std::conj(amps_[x | bit]);
    r01 += amps_[x] * std::conj(amps_[x | bit]);
  }
  DensityMatrix2 d;
  d.m[0][0] = r00;
  d.m[0][1] = r01;
  d.m[1][0] = std::conj(r01);
  d.m[1][1] = r11;
  return d;
}

double StateVec::norm() const {
  double s = 0.0;
  for (const cd& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVec::renormalize() {
  double nrm = norm();
  if (nrm <= 0.0) return;
  for (cd& a : amps_) a /= nrm;
}

ContractionResult contract_to_bloch(const ChunkCircuit& c,
                                    std::span<const double> params) {
  StateVec sv(c.wire_count());
  for (const Gate& g : c.gates) sv.apply_gate(g, params);

  double norm = 1.0;
  int out = c.out_wire;
  // Bell-effect cups remove wires; remap the readout index as they go.
  for (const Cup& cup : c.cups) {
    if (!cup.bell) continue;
    auto [i, j] = *cup.bell;
    if (i == out || j == out)
      throw InvalidInput("bell cup consumes the readout wire");
    norm *= sv.project_bell(i, j);
    if (norm < 1e-12)
      throw ZeroNorm("post-selection norm " + std::to_string(norm));
    sv.renormalize();
    out -= (i < out) + (j < out);
  }

  ContractionResult res;
  res.norm = norm;
  res.r = sv.reduced_density(out).bloch();
  return res;
}

void accumulate_bloch_gradient(const ChunkCircuit& c,
                               std::span<const double> params,
                               const BlochVector& dL_dr,
                               std::span<double> grad) {
  for (const Cup& cup : c.cups)
    if (cup.bell)
      throw InvalidInput("adjoint sweep requires a fully bound circuit");

  StateVec psi(c.wire_count());
  for (const Gate& g : c.gates) psi.apply_gate(g, params);

  // Observable O = gx*sx + gy*sy + gz*sz on the readout wire: the Bloch
  // components are expectations r_i = <psi| sigma_i |psi>, so dL/dtheta is
  // one adjoint sweep against O.
  const double gx = dL_dr.x, gy = dL_dr.y, gz = dL_dr.z;
  StateVec lam = psi;
  lam.apply_1q(c.out_wire, gz, cd(gx, -gy), cd(gx, gy), -gz);

  StateVec phi = psi;
  for (int k = int(c.gates.size()) - 1; k >= 0; --k) {
    const Gate& g = c.gates[k];
    phi.apply_gate_dagger(g, params);
    if (g.param >= 0) {
      StateVec mu = phi;
      mu.apply_gate_derivative(g, params);
      cd inner = 0.0;
      auto la = lam.amplitudes();
      auto ma = mu.amplitudes();
      for (std::size_t x = 0; x < la.size(); ++x)
        inner += std::conj(la[x]) * ma[x];
      grad[g.param] += 2.0 * inner.real();
    }
    lam.apply_gate_dagger(g, params);
  }
}

}  // namespace qnlp::qsim
