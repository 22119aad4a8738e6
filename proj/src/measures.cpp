#include "qcoh/measures.hpp"

#include <cmath>
#include <sstream>

namespace qcoh {

double rec(const DensityMatrix& rho) {
  return detail::entropy_bits(Eigen::VectorXd(rho.matrix().diagonal().real())) -
         von_neumann_entropy(rho);
}

double qi_rec(const ChoiState& omega) {
  const DensityMatrix dephased = dephase_s(omega.state(), omega.label());
  return von_neumann_entropy(dephased) - von_neumann_entropy(omega.state());
}

double qi_rec(const KrausChannel& ch) { return qi_rec(choi_from_kraus(ch)); }

double asym_discord(const ChoiState& omega) {
  const DensityMatrix dephased = dephase_s(omega.state(), omega.label());
  return mutual_information(omega.state(), omega.label()) -
         mutual_information(dephased, omega.label());
}

double sym_discord(const ChoiState& omega) {
  const DensityMatrix dephased = dephase(omega.state());
  return mutual_information(omega.state(), omega.label()) -
         mutual_information(dephased, omega.label());
}

double rec_choi(const ChoiState& omega) { return rec(omega.state()); }

CoherenceReport coherence_report(const KrausChannel& ch) {
  const ChoiState omega = choi_from_kraus(ch);

  CoherenceReport report;
  report.qi_rec = qi_rec(omega);
  report.rec_output_marginal = rec(partial_trace(omega.state(), omega.label(), Subsystem::S));
  report.asym_discord = asym_discord(omega);
  report.sym_discord = sym_discord(omega);
  report.rec_choi = rec_choi(omega);
  report.rec_ancilla_marginal = rec(partial_trace(omega.state(), omega.label(), Subsystem::A));
  report.unital = is_unital(ch);
  report.incoherent_kraus = is_incoherent_kraus(ch);
  report.coherence_breaking = is_coherence_breaking(ch);

  const double split_residual =
      std::abs(report.qi_rec - report.rec_output_marginal - report.asym_discord);
  double choi_residual = 0.0;
  if (ch.dim() == 2) {
    choi_residual = std::abs(report.rec_choi - report.rec_output_marginal -
                             report.rec_ancilla_marginal - report.sym_discord);
  }
  if (split_residual > 1e-6 || choi_residual > 1e-6) {
    std::ostringstream oss;
    oss << "coherence_report: decomposition identity violated (discord split residual "
        << split_residual << ", Choi split residual " << choi_residual << ")";
    throw consistency_error(oss.str());
  }
  return report;
}

std::vector<RisingInterval> rising_intervals(const std::vector<double>& values,
                                             double rise_tol) {
  std::vector<RisingInterval> intervals;
  bool open = false;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (values[k + 1] > values[k] + rise_tol) {
      if (!open) {
        intervals.push_back({k, k + 1});
        open = true;
      } else {
        intervals.back().last = k + 1;
      }
    } else {
      open = false;
    }
  }
  return intervals;
}

std::vector<RisingInterval> monotonicity_witness(const std::vector<double>& times,
                                                 const std::vector<ChoiState>& states,
                                                 double rise_tol) {
  if (times.size() != states.size()) {
    throw std::invalid_argument("monotonicity_witness: times/states size mismatch");
  }
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    if (!(times[k] < times[k + 1])) {
      throw validation_error("monotonicity_witness: times must be strictly increasing");
    }
  }
  std::vector<double> coherence(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) coherence[k] = qi_rec(states[k]);
  return rising_intervals(coherence, rise_tol);
}

}  // namespace qcoh
