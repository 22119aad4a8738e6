#include "qcoh/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcoh {

namespace {

const Matrix& pauli(int k) {
  static const Matrix x = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const Matrix y = [] {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
  }();
  static const Matrix z = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (k) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

}  // namespace

KrausChannel KrausChannel::validated(std::vector<Matrix> ops, double tol) {
  if (ops.empty()) throw validation_error("KrausChannel: empty operator list");
  const Eigen::Index d = ops.front().rows();
  if (d < 1) throw validation_error("KrausChannel: operators must be at least 1x1");
  for (const Matrix& k : ops) {
    if (k.rows() != d || k.cols() != d) {
      throw validation_error("KrausChannel: operators must all be " + std::to_string(d) + "x" +
                             std::to_string(d));
    }
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : ops) sum += k.adjoint() * k;
  const double err = (sum - Matrix::Identity(d, d)).norm();
  if (err > tol * static_cast<double>(d)) {
    throw validation_error("KrausChannel: completeness violated, ||sum K^dag K - I||_F = " +
                           std::to_string(err));
  }
  return KrausChannel(std::move(ops), d, tol);
}

ChoiState ChoiState::validated(const Matrix& m, double tol) {
  const Eigen::Index n = m.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d < 1 || d * d != n) {
    throw validation_error("ChoiState: dimension " + std::to_string(n) +
                           " is not a perfect square");
  }
  DensityMatrix state = DensityMatrix::validated(m, tol);
  const BipartiteLabel label{d, d};
  const DensityMatrix anc = partial_trace(state, label, Subsystem::A);
  const double marginal_err =
      (anc.matrix() - Matrix::Identity(d, d) / static_cast<double>(d)).norm();
  if (marginal_err > tol * static_cast<double>(d)) {
    throw validation_error("ChoiState: ancilla marginal deviates from I/d by " +
                           std::to_string(marginal_err) + " (channel not trace-preserving)");
  }
  return ChoiState(std::move(state), label);
}

ChoiState choi_from_kraus(const KrausChannel& ch) {
  const Eigen::Index d = ch.dim();
  Matrix omega = Matrix::Zero(d * d, d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (const Matrix& k : ch.operators()) {
    // (I (x) K)|Psi> has component K(s,i)/sqrt(d) at joint index (i,s).
    Vector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index s = 0; s < d; ++s) v[i * d + s] = norm * k(s, i);
    omega += v * v.adjoint();
  }
  return ChoiState::validated(omega, ch.tolerance());
}

KrausChannel kraus_from_choi(const ChoiState& omega, double tol) {
  const Eigen::Index d = omega.channel_dim();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(static_cast<double>(d) * omega.state().matrix());
  std::vector<Matrix> ops;
  for (Eigen::Index j = 0; j < d * d; ++j) {
    const double mu = solver.eigenvalues()[j];
    if (mu <= tol) continue;
    const Vector w = solver.eigenvectors().col(j);
    Matrix k(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index s = 0; s < d; ++s) k(s, i) = std::sqrt(mu) * w[i * d + s];
    ops.push_back(std::move(k));
  }
  // Discarded near-zero eigenweight loosens completeness by up to d^2 * tol.
  return KrausChannel::validated(std::move(ops), tol * static_cast<double>(d));
}

Matrix apply_kraus_map(const std::vector<Matrix>& ops, const Matrix& m) {
  if (ops.empty() || ops.front().rows() != m.rows() || m.rows() != m.cols()) {
    throw std::invalid_argument("apply_kraus_map: dimension mismatch");
  }
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const Matrix& k : ops) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    throw std::invalid_argument("apply_channel: channel dim " + std::to_string(ch.dim()) +
                                " vs state dim " + std::to_string(rho.dim()));
  }
  return DensityMatrix::validated(apply_kraus_map(ch.operators(), rho.matrix()),
                                  rho.tolerance());
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  std::vector<Matrix> ops;
  ops.reserve(outer.operators().size() * inner.operators().size());
  for (const Matrix& a : outer.operators())
    for (const Matrix& b : inner.operators()) ops.push_back(a * b);
  return KrausChannel::validated(std::move(ops), std::max(outer.tolerance(), inner.tolerance()));
}

ChoiState apply_channel_s(const ChoiState& omega, const KrausChannel& ch) {
  const Eigen::Index d = omega.channel_dim();
  if (ch.dim() != d) throw std::invalid_argument("apply_channel_s: dimension mismatch");
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const Matrix& k : ch.operators()) {
    Matrix lifted = Matrix::Zero(d * d, d * d);
    for (Eigen::Index a = 0; a < d; ++a) lifted.block(a * d, a * d, d, d) = k;
    out += lifted * omega.state().matrix() * lifted.adjoint();
  }
  return ChoiState::validated(out, omega.state().tolerance());
}

DensityMatrix output_marginal(const KrausChannel& ch) {
  const Eigen::Index d = ch.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : ch.operators()) sum += k * k.adjoint();
  return DensityMatrix::validated(sum / static_cast<double>(d), ch.tolerance());
}

bool is_unital(const KrausChannel& ch, double tol) {
  const Eigen::Index d = ch.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : ch.operators()) sum += k * k.adjoint();
  return (sum - Matrix::Identity(d, d)).norm() <= tol;
}

bool is_incoherent_kraus(const KrausChannel& ch, double tol) {
  for (const Matrix& k : ch.operators()) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      int nonzero = 0;
      for (Eigen::Index i = 0; i < k.rows(); ++i) {
        if (std::abs(k(i, j)) > tol && ++nonzero > 1) return false;
      }
    }
  }
  return true;
}

bool is_coherence_breaking(const KrausChannel& ch, double tol) {
  const ChoiState omega = choi_from_kraus(ch);
  const DensityMatrix dephased = dephase_s(omega.state(), omega.label());
  return (dephased.matrix() - omega.state().matrix()).norm() <= tol;
}

QubitAffine affine_from_kraus(const KrausChannel& ch) {
  if (ch.dim() != 2) {
    throw std::invalid_argument("affine_from_kraus: requires a qubit channel, got dim " +
                                std::to_string(ch.dim()));
  }
  QubitAffine q;
  const Matrix half_id = 0.5 * Matrix::Identity(2, 2);
  const Matrix out_id = apply_kraus_map(ch.operators(), half_id);
  for (int k = 0; k < 3; ++k) q.shift[k] = std::real((pauli(k) * out_id).trace());
  for (int l = 0; l < 3; ++l) {
    const Matrix out = apply_kraus_map(ch.operators(), 0.5 * pauli(l));
    for (int k = 0; k < 3; ++k) q.map(k, l) = std::real((pauli(k) * out).trace());
  }
  return q;
}

std::array<double, 3> map_singular_values(const QubitAffine& q) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(q.map);
  const auto& sv = svd.singularValues();  // descending
  return {sv[0], sv[1], sv[2]};
}

ChoiState cbc_qubit_choi(double tau3, double lambda3) {
  if (std::abs(tau3) + std::abs(lambda3) > 1.0 + 1e-12) {
    throw validation_error("cbc_qubit_choi: |tau3| + |lambda3| = " +
                           std::to_string(std::abs(tau3) + std::abs(lambda3)) +
                           " > 1 is not completely positive");
  }
  Matrix omega = Matrix::Zero(4, 4);
  omega(0, 0) = (1.0 + tau3 + lambda3) / 4.0;  // (a,s) = (0,0)
  omega(1, 1) = (1.0 - tau3 - lambda3) / 4.0;  // (0,1)
  omega(2, 2) = (1.0 + tau3 - lambda3) / 4.0;  // (1,0)
  omega(3, 3) = (1.0 - tau3 + lambda3) / 4.0;  // (1,1)
  return ChoiState::validated(omega);
}

}  // namespace qcoh
