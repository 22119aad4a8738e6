#pragma once

#include "qcoh/core.hpp"

#include <array>
#include <vector>

namespace qcoh {

/// CPTP map in Kraus form: rho -> sum_i K_i rho K_i^dag with the
/// completeness condition sum_i K_i^dag K_i = I.
class KrausChannel {
 public:
  /// Requires a nonempty set of equal-sized square operators satisfying
  /// ||sum K^dag K - I||_F <= tol * dim. Throws validation_error otherwise.
  static KrausChannel validated(std::vector<Matrix> ops, double tol = kDefaultTol);

  Eigen::Index dim() const { return dim_; }
  const std::vector<Matrix>& operators() const { return ops_; }
  double tolerance() const { return tol_; }

 private:
  KrausChannel(std::vector<Matrix> ops, Eigen::Index dim, double tol)
      : ops_(std::move(ops)), dim_(dim), tol_(tol) {}

  std::vector<Matrix> ops_;
  Eigen::Index dim_;
  double tol_;
};

/// Trace-1 Choi state of a channel on a d-dimensional system, living on
/// ancilla (x) system with dim_a = dim_s = d. The ancilla marginal of a
/// trace-preserving channel is maximally mixed; validation enforces it.
class ChoiState {
 public:
  /// Validates m as a density matrix of square dimension d*d and checks
  /// ||Tr_S - I/d||_F <= tol * d.
  static ChoiState validated(const Matrix& m, double tol = kDefaultTol);

  const DensityMatrix& state() const { return state_; }
  const BipartiteLabel& label() const { return label_; }
  Eigen::Index channel_dim() const { return label_.dim_s; }

 private:
  ChoiState(DensityMatrix state, BipartiteLabel label)
      : state_(std::move(state)), label_(label) {}

  DensityMatrix state_;
  BipartiteLabel label_;
};

/// Affine (Bloch-space) form of a qubit channel: r -> map * r + shift.
struct QubitAffine {
  Eigen::Vector3d shift;  // tau
  Eigen::Matrix3d map;    // T
};

/// Omega = (I (x) Lambda)(|Psi><Psi|) with |Psi> = (1/sqrt d) sum_i |ii>.
ChoiState choi_from_kraus(const KrausChannel& ch);

/// Kraus set recovered by eigendecomposing d * Omega; eigenpairs with
/// eigenvalue <= tol are dropped. Unique up to phases, which no measure
/// here depends on.
KrausChannel kraus_from_choi(const ChoiState& omega, double tol = kDefaultTol);

/// Linear extension of the Kraus map to an arbitrary matrix argument.
Matrix apply_kraus_map(const std::vector<Matrix>& ops, const Matrix& m);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Kraus set of outer . inner (inner acts first): {A_i B_j}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// (I (x) ch) acting on the S factor of a Choi state.
ChoiState apply_channel_s(const ChoiState& omega, const KrausChannel& ch);

/// rho_S = (1/d) sum_i K_i K_i^dag, the system marginal of the Choi state.
DensityMatrix output_marginal(const KrausChannel& ch);

/// ||sum K K^dag - I||_F <= tol
bool is_unital(const KrausChannel& ch, double tol = 1e-8);

/// True iff every supplied Kraus operator has at most one entry of modulus
/// > tol per column, i.e. maps each basis ray to a basis ray. This is a
/// property of the given representation, not of the channel.
bool is_incoherent_kraus(const KrausChannel& ch, double tol = 1e-8);

/// True iff the Choi state is invariant under S-side dephasing within tol
/// (Frobenius), which holds exactly when every output of the channel is
/// diagonal in the reference basis.
bool is_coherence_breaking(const KrausChannel& ch, double tol = 1e-8);

/// Bloch representation of a qubit channel. Throws for dim != 2.
QubitAffine affine_from_kraus(const KrausChannel& ch);

/// Singular values of the affine map matrix, descending.
std::array<double, 3> map_singular_values(const QubitAffine& q);

/// Choi state of the coherence-breaking qubit channel with Bloch action
/// z -> lambda3 * z + tau3 (x and y components erased). Requires
/// |tau3| + |lambda3| <= 1; throws validation_error otherwise.
ChoiState cbc_qubit_choi(double tau3, double lambda3);

}  // namespace qcoh
