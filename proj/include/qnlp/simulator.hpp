#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qnlp/bloch.hpp"
#include "qnlp/circuit.hpp"

namespace qnlp::qsim {

using cd = std::complex<double>;

/// Dense statevector over up to 12 wires; wire w is bit w of the index.
class StateVec {
 public:
  explicit StateVec(int wires);

  int wires() const { return n_; }
  std::span<const cd> amplitudes() const { return amps_; }
  std::span<cd> amplitudes() { return amps_; }

  void apply_1q(int w, cd u00, cd u01, cd u10, cd u11);
  void apply_h(int w);
  void apply_rx(int w, double theta);
  void apply_ry(int w, double theta);
  void apply_rz(int w, double theta);
  void apply_crz(int wc, int wt, double theta);  // phase e^{i theta} on |11>

  void apply_gate(const Gate& g, std::span<const double> params);
  void apply_gate_dagger(const Gate& g, std::span<const double> params);
  /// Applies the derivative of the gate with respect to its angle
  /// (a non-unitary map); no-op structure for H is rejected by the caller.
  void apply_gate_derivative(const Gate& g, std::span<const double> params);

  /// Projects wires (i, j) onto the unnormalized Bell effect <00| + <11|,
  /// removing both wires. Returns the norm of the projected state before
  /// renormalization.
  double project_bell(int i, int j);

  /// Reduced density matrix of a single wire.
  DensityMatrix2 reduced_density(int w) const;

  double norm() const;
  void renormalize();

 private:
  int n_;
  std::vector<cd> amps_;
};

struct ContractionResult {
  BlochVector r;
  double norm = 1.0;  // post-selection norm before renormalization
};

/// Evaluates the circuit exactly, applies any explicit Bell-effect cups,
/// renormalizes, traces out everything but the readout wire, and returns the
/// Bloch components together with the pre-normalization norm.
/// Throws ZeroNorm when the post-selection norm falls below 1e-12.
ContractionResult contract_to_bloch(const ChunkCircuit& c,
                                    std::span<const double> params);

/// Reverse-mode gradient of a scalar loss through the contraction: given
/// dL/dr on the readout Bloch vector, accumulates dL/dtheta into `grad`
/// (indexed like the ParamStore values). Uses the adjoint-state sweep, which
/// is exact for the compiled chunk circuits (no explicit Bell cups).
void accumulate_bloch_gradient(const ChunkCircuit& c,
                               std::span<const double> params,
                               const BlochVector& dL_dr,
                               std::span<double> grad);

}  // namespace qnlp::qsim
