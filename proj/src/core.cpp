#include "qcoh/core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qcoh {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_label(const Matrix& m, const BipartiteLabel& label, const char* who) {
  require_square(m, who);
  if (label.dim_a < 1 || label.dim_s < 1 || label.total() != m.rows()) {
    std::ostringstream oss;
    oss << who << ": bipartite label " << label.dim_a << "x" << label.dim_s
        << " does not match matrix dimension " << m.rows();
    throw std::invalid_argument(oss.str());
  }
}

double max_abs_antihermitian(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix DensityMatrix::validated(const Matrix& m, double tol) {
  require_square(m, "DensityMatrix");
  const double herm = max_abs_antihermitian(m);
  if (herm > tol) {
    throw validation_error("DensityMatrix: not Hermitian within tolerance (max |M - M^dag| = " +
                           std::to_string(herm) + ")");
  }
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  const double min_ev = solver.eigenvalues().minCoeff();
  if (min_ev < -tol) {
    throw validation_error("DensityMatrix: negative eigenvalue " + std::to_string(min_ev));
  }
  const double trace_err = std::abs(h.trace().real() - 1.0) + std::abs(h.trace().imag());
  if (trace_err > tol) {
    throw validation_error("DensityMatrix: trace deviates from 1 by " +
                           std::to_string(trace_err));
  }
  return DensityMatrix(std::move(h), tol);
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double tol) {
  require_square(m, "hermitian_eigenvalues");
  const double herm = max_abs_antihermitian(m);
  if (herm > tol) {
    throw validation_error("hermitian_eigenvalues: input not Hermitian within tolerance (" +
                           std::to_string(herm) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] >= -tol && ev[i] < 0.0) ev[i] = 0.0;
  }
  return ev;
}

namespace detail {

double entropy_bits(const Eigen::VectorXd& weights) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (w > 0.0) s -= w * std::log2(w);
  }
  return s;
}

double entropy_bits(const Matrix& hermitian_psd) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_psd, Eigen::EigenvaluesOnly);
  return entropy_bits(Eigen::VectorXd(solver.eigenvalues()));
}

}  // namespace detail

double von_neumann_entropy(const DensityMatrix& rho) {
  return detail::entropy_bits(hermitian_eigenvalues(rho.matrix(), rho.tolerance()));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch " +
                                std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()));
  }
  const double tol = sigma.tolerance();

  Eigen::SelfAdjointEigenSolver<Matrix> rho_solver(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> sigma_solver(sigma.matrix());

  // tr[rho log2 rho]
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double l = rho_solver.eigenvalues()[i];
    if (l > 0.0) tr_rho_log_rho += l * std::log2(l);
  }

  // tr[rho log2 sigma] in sigma's eigenbasis; p_j = <v_j| rho |v_j>.
  // Weight above tolerance on sigma's near-zero eigenspace breaks the
  // support condition.
  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index j = 0; j < sigma.dim(); ++j) {
    const double s = sigma_solver.eigenvalues()[j];
    const Vector v = sigma_solver.eigenvectors().col(j);
    const double p = std::real(v.dot(rho.matrix() * v));
    if (s < tol) {
      if (p > tol) return std::numeric_limits<double>::infinity();
      continue;
    }
    tr_rho_log_sigma += p * std::log2(s);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Matrix d = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix::validated(d, rho.tolerance());
}

DensityMatrix dephase_s(const DensityMatrix& omega, const BipartiteLabel& label) {
  require_label(omega.matrix(), label, "dephase_s");
  Matrix out = omega.matrix();
  const Eigen::Index da = label.dim_a;
  const Eigen::Index ds = label.dim_s;
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index s = 0; s < ds; ++s)
      for (Eigen::Index b = 0; b < da; ++b)
        for (Eigen::Index t = 0; t < ds; ++t)
          if (s != t) out(a * ds + s, b * ds + t) = Complex(0, 0);
  return DensityMatrix::validated(out, omega.tolerance());
}

DensityMatrix partial_trace(const DensityMatrix& omega, const BipartiteLabel& label,
                            Subsystem keep) {
  require_label(omega.matrix(), label, "partial_trace");
  const Eigen::Index da = label.dim_a;
  const Eigen::Index ds = label.dim_s;
  const Matrix& m = omega.matrix();

  if (keep == Subsystem::A) {
    Matrix red = Matrix::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index b = 0; b < da; ++b)
        for (Eigen::Index s = 0; s < ds; ++s) red(a, b) += m(a * ds + s, b * ds + s);
    return DensityMatrix::validated(red, omega.tolerance());
  }
  Matrix red = Matrix::Zero(ds, ds);
  for (Eigen::Index s = 0; s < ds; ++s)
    for (Eigen::Index t = 0; t < ds; ++t)
      for (Eigen::Index a = 0; a < da; ++a) red(s, t) += m(a * ds + s, a * ds + t);
  return DensityMatrix::validated(red, omega.tolerance());
}

double mutual_information(const DensityMatrix& omega, const BipartiteLabel& label) {
  const DensityMatrix rho_a = partial_trace(omega, label, Subsystem::A);
  const DensityMatrix rho_s = partial_trace(omega, label, Subsystem::S);
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_s) - von_neumann_entropy(omega);
}

}  // namespace qcoh
