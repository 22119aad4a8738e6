#pragma once

#include "qcoh/measures.hpp"

#include <complex>
#include <vector>

namespace qcoh {

/// Amplitude damping channel, K0 = |0><0| + sqrt(1-p)|1><1|, K1 = sqrt(p)|0><1|.
/// Throws validation_error for p outside [0, 1].
KrausChannel ad_channel(double p);

/// Channel coherence of ad_channel(p) in closed form (bits), with the p -> 1
/// limit of the (p-1) log(1-p) term taken as 0.
double ad_coherence_closed_form(double p);

/// Parameters of the zero-temperature phase-covariant qubit dynamics:
/// a Lorentzian dissipation reservoir with coupling ratio R = gamma0/lambda
/// and an Ohmic dephasing bath J(w) ~ alpha w^s / w_c^(s-1) exp(-w/w_c),
/// with beta = w_c / lambda. Times are the dimensionless lambda*t.
struct PhaseCovariantParams {
  double coupling_ratio = 0;      // R
  double ohmicity = 0;            // s (s = 1 unsupported)
  double dephasing_coupling = 1;  // alpha
  double cutoff_ratio = 1;        // beta
  std::vector<double> t_grid;

  /// Throws validation_error on nonpositive parameters, s = 1, or a grid
  /// that is not strictly increasing from t >= 0.
  void validate() const;
};

/// Normalized excited-state amplitude c(t)/c(0) of the Lorentzian memory
/// kernel. Real for all R >= 0; a nonzero imaginary residue only reflects
/// roundoff and stays below 1e-12.
std::complex<double> lorentzian_c(double t, double coupling_ratio);

/// Accumulated dephasing exponent Gamma_z(t) of the Ohmic bath at T = 0.
double gamma_z_closed_form(double t, double ohmicity, double alpha, double beta);

/// Channel coherence (bits) of a phase-covariant qubit channel given its
/// Bloch parameters: difference between the diagonal-restricted and full
/// spectra of the Choi matrix, four terms in total.
double phase_covariant_coherence(double kappa, double eta_par, double eta_perp);

/// One time slice of the dynamics: decay exponents, Bloch parameters, the
/// assembled Choi state and its coherence.
struct PhaseCovariantFrame {
  double t = 0;
  double gamma = 0;    // Gamma(t) = -ln u(t); +inf where c(t) crosses zero
  double gamma_z = 0;  // Gamma_z(t)
  double kappa = 0;
  double eta_par = 0;
  double eta_perp = 0;
  ChoiState choi;
  double coherence = 0;  // bits
};

/// Builds the frame at dimensionless time t. eta_par and kappa are obtained
/// directly from u(t) = (c/c(0))^2 so zeros of c(t) stay finite. Throws
/// consistency_error if the assembled Choi matrix fails validation, naming
/// t and the offending eigenvalue.
PhaseCovariantFrame phase_covariant_frame(double t, const PhaseCovariantParams& params);

struct PhaseCovariantTrajectory {
  std::vector<PhaseCovariantFrame> frames;
  std::vector<RisingInterval> rising;
};

/// Frames over params.t_grid plus the non-Markovianity witness result.
PhaseCovariantTrajectory phase_covariant_trajectory(const PhaseCovariantParams& params);

}  // namespace qcoh
