#pragma once

#include <Eigen/Dense>

#include "cavqed/model.hpp"

namespace cavqed {

/// Interaction-picture Hamiltonian restricted to the single-excitation
/// basis {|1>, |2>, |3>, |4>}. Real symmetric; emitter states carry zero
/// diagonal energy, photonic states carry -2*delta. There is no direct
/// emitter-emitter (h[0][1]) or mode-mode (h[2][3]) coupling.
struct SubspaceHamiltonian {
  Eigen::Matrix4d h;
};

SubspaceHamiltonian build_hamiltonian(const ModelParams& params);

/// Propagates the initial vector (cos theta, sin theta, 0, 0) by
/// exp(-i h t) via the spectral decomposition of the real symmetric h.
/// Independent of the closed-form path; used to cross-validate it.
/// Throws std::invalid_argument for negative or non-finite t.
AmplitudeVector propagate_exact(const ModelParams& params, double t);

/// Validated 4x4 density matrix of one qubit pair on the product basis
/// {|ee>, |eg>, |ge>, |gg>} (mode occupation 1 maps to the excited level).
class TwoQubitDensity {
 public:
  // Throws std::invalid_argument unless the matrix is Hermitian to 1e-13,
  // has unit trace to 1e-12 and eigenvalues >= -1e-12.
  static TwoQubitDensity from_matrix(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  explicit TwoQubitDensity(const Eigen::Matrix4cd& rho) : rho_(rho) {}
  Eigen::Matrix4cd rho_;
};

/// Reduced state of the chosen pair: embeds the amplitudes into the
/// four-qubit pure state and traces out the other two qubits.
/// Throws std::invalid_argument if the input is not normalized to 1e-12.
TwoQubitDensity reduced_density(const AmplitudeVector& amps, PairId pair);

/// Wootters concurrence of a two-qubit state: with the spin-flipped matrix
/// rho~ = (sy x sy) rho* (sy x sy), returns
///   max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4),
/// where lambda_1 >= ... >= lambda_4 are the square roots of the
/// eigenvalues of rho * rho~. The lambdas are computed as the singular
/// values of sqrt(rho) (sy x sy) conj(sqrt(rho)), whose squares equal those
/// eigenvalues; this avoids the square-root noise amplification of a direct
/// eigensolve of the (non-normal) product. Eigenvalues of rho below -1e-11
/// raise std::runtime_error; those in [-1e-11, 0) are clamped to zero.
double wootters_concurrence(const TwoQubitDensity& rho);

}  // namespace cavqed
