#include "qcoh/physics.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qcoh {

namespace {

double h2(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace

KrausChannel ad_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw validation_error("ad_channel: damping probability " + std::to_string(p) +
                           " outside [0, 1]");
  }
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  return KrausChannel::validated({std::move(k0), std::move(k1)});
}

double ad_coherence_closed_form(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw validation_error("ad_coherence_closed_form: p outside [0, 1]");
  }
  double value = 0.5;
  if (p < 1.0) value += 0.5 * (p - 1.0) * std::log2(0.5 * (1.0 - p));
  value += 0.5 * (2.0 - p) * std::log2(0.5 * (2.0 - p));
  return value;
}

void PhaseCovariantParams::validate() const {
  if (!(coupling_ratio > 0.0)) throw validation_error("phase covariant: R must be > 0");
  if (!(ohmicity > 0.0)) throw validation_error("phase covariant: s must be > 0");
  if (std::abs(ohmicity - 1.0) < 1e-12) {
    throw validation_error("phase covariant: s = 1 is outside the supported parameter set");
  }
  if (!(dephasing_coupling > 0.0)) throw validation_error("phase covariant: alpha must be > 0");
  if (!(cutoff_ratio > 0.0)) throw validation_error("phase covariant: beta must be > 0");
  if (t_grid.empty()) throw validation_error("phase covariant: empty time grid");
  if (!(t_grid.front() >= 0.0)) throw validation_error("phase covariant: times must be >= 0");
  for (std::size_t k = 0; k + 1 < t_grid.size(); ++k) {
    if (!(t_grid[k] < t_grid[k + 1])) {
      throw validation_error("phase covariant: time grid must be strictly increasing");
    }
  }
}

std::complex<double> lorentzian_c(double t, double coupling_ratio) {
  const double w = 1.0 - 2.0 * coupling_ratio;  // d^2
  if (std::abs(w) < 1e-10) {
    // Series in d^2 around the critically damped point, where cosh + sinh/d
    // degenerates to 1 + t/2.
    const double half_t = 0.5 * t;
    double even = 1.0, odd = half_t;  // (t/2)^(2k) / (2k)!, (t/2)^(2k+1) / (2k+1)!
    double sum = even + odd, wk = 1.0;
    for (int k = 1; k <= 4; ++k) {
      wk *= w;
      even *= half_t * half_t / ((2 * k - 1) * (2 * k));
      odd *= half_t * half_t / ((2 * k) * (2 * k + 1));
      sum += wk * (even + odd);
    }
    return std::exp(-half_t) * sum;
  }
  const std::complex<double> d = std::sqrt(std::complex<double>(w, 0.0));
  // exp(-t/2) [cosh(dt/2) + sinh(dt/2)/d] regrouped into two exponentials
  // whose real parts are <= 0, so large t cannot overflow.
  const std::complex<double> inv_d = 1.0 / d;
  return 0.5 * (1.0 + inv_d) * std::exp((d - 1.0) * (0.5 * t)) +
         0.5 * (1.0 - inv_d) * std::exp(-(d + 1.0) * (0.5 * t));
}

double gamma_z_closed_form(double t, double ohmicity, double alpha, double beta) {
  if (!(t >= 0.0)) throw validation_error("gamma_z_closed_form: t must be >= 0");
  if (std::abs(ohmicity - 1.0) < 1e-12) {
    throw validation_error("gamma_z_closed_form: s = 1 is outside the supported parameter set");
  }
  const double u = beta * t;  // omega_c * time
  const double envelope = std::pow(1.0 + u * u, -0.5 * ohmicity);
  const double angle = ohmicity * std::atan(u);
  return alpha / (ohmicity - 1.0) * std::tgamma(ohmicity) *
         (1.0 - envelope * (std::cos(angle) + u * std::sin(angle)));
}

double phase_covariant_coherence(double kappa, double eta_par, double eta_perp) {
  // Diagonal of the Choi matrix shares two entries with its spectrum; only
  // the |00>,|11> corner block differs, so four terms survive.
  const double root = std::sqrt(kappa * kappa + 4.0 * eta_perp * eta_perp);
  return h2(0.25 * (1.0 + kappa + eta_par)) + h2(0.25 * (1.0 - kappa + eta_par)) -
         h2(0.25 * (1.0 + eta_par + root)) - h2(0.25 * (1.0 + eta_par - root));
}

PhaseCovariantFrame phase_covariant_frame(double t, const PhaseCovariantParams& params) {
  const std::complex<double> c = lorentzian_c(t, params.coupling_ratio);
  if (std::abs(c.imag()) > 1e-9) {
    std::ostringstream oss;
    oss << "phase_covariant_frame: amplitude at t = " << t << " has imaginary residue "
        << c.imag();
    throw consistency_error(oss.str());
  }
  const double cr = c.real();
  const double u = cr * cr;

  const double gamma = -std::log(u);  // +inf at zeros of c
  const double gamma_z =
      gamma_z_closed_form(t, params.ohmicity, params.dephasing_coupling, params.cutoff_ratio);
  const double kappa = u - 1.0;
  const double eta_par = u;
  const double eta_perp = std::abs(cr) * std::exp(-gamma_z);

  Matrix omega = Matrix::Zero(4, 4);
  omega(0, 0) = 0.25 * (1.0 + kappa + eta_par);
  omega(1, 1) = 0.25 * (1.0 - kappa - eta_par);
  omega(2, 2) = 0.25 * (1.0 + kappa - eta_par);
  omega(3, 3) = 0.25 * (1.0 - kappa + eta_par);
  omega(0, 3) = omega(3, 0) = 0.5 * eta_perp;

  Eigen::SelfAdjointEigenSolver<Matrix> solver(omega, Eigen::EigenvaluesOnly);
  const double min_ev = solver.eigenvalues().minCoeff();
  if (min_ev < -kDefaultTol) {
    std::ostringstream oss;
    oss << "phase_covariant_frame: Choi matrix not completely positive at t = " << t
        << " (eigenvalue " << min_ev << ")";
    throw consistency_error(oss.str());
  }
  ChoiState choi = ChoiState::validated(omega);
  const double coherence = qi_rec(choi);
  return PhaseCovariantFrame{t, gamma, gamma_z, kappa, eta_par, eta_perp, std::move(choi),
                             coherence};
}

PhaseCovariantTrajectory phase_covariant_trajectory(const PhaseCovariantParams& params) {
  params.validate();
  PhaseCovariantTrajectory traj;
  traj.frames.reserve(params.t_grid.size());
  std::vector<ChoiState> states;
  states.reserve(params.t_grid.size());
  for (double t : params.t_grid) {
    traj.frames.push_back(phase_covariant_frame(t, params));
    states.push_back(traj.frames.back().choi);
  }
  traj.rising = monotonicity_witness(params.t_grid, states);
  return traj;
}

}  // namespace qcoh
