#pragma once

#include "qcoh/channels.hpp"

#include <cstddef>
#include <vector>

namespace qcoh {

/// All coherence functionals of one channel, in bits, plus its
/// classification flags. rec_ancilla_marginal is analytically zero for any
/// trace-1 Choi state and is kept as a numerical canary.
struct CoherenceReport {
  double qi_rec = 0;
  double rec_output_marginal = 0;
  double asym_discord = 0;
  double sym_discord = 0;
  double rec_choi = 0;
  double rec_ancilla_marginal = 0;
  bool unital = false;
  bool incoherent_kraus = false;
  bool coherence_breaking = false;
};

/// Relative entropy of coherence C_r(rho) = S(rho^d) - S(rho), bits.
double rec(const DensityMatrix& rho);

/// Quantum-incoherent coherence of a channel through its Choi state:
/// S(Delta^S(Omega)) - S(Omega). Zero exactly for coherence-breaking
/// channels.
double qi_rec(const ChoiState& omega);
double qi_rec(const KrausChannel& ch);

/// Mutual-information loss under S-side dephasing: I(Omega) - I(Delta^S Omega).
double asym_discord(const ChoiState& omega);

/// Mutual-information loss under full dephasing: I(Omega) - I(Omega^d).
double sym_discord(const ChoiState& omega);

/// C_r of the Choi state viewed as a plain d^2-dimensional state in the
/// product basis.
double rec_choi(const ChoiState& omega);

/// Computes every CoherenceReport entry and cross-checks the two
/// decomposition identities
///   qi_rec  = rec(rho_S) + asym_discord
///   rec_choi = rec(rho_S) + rec(rho_A) + sym_discord   (checked for d = 2)
/// Throws consistency_error if either residual exceeds 1e-6.
CoherenceReport coherence_report(const KrausChannel& ch);

/// Maximal run of indices [first, last] over which the sampled values rise.
struct RisingInterval {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Every maximal interval where values[k+1] > values[k] + rise_tol.
std::vector<RisingInterval> rising_intervals(const std::vector<double>& values,
                                             double rise_tol = 1e-9);

/// Non-Markovianity witness: evaluates the channel coherence along a
/// trajectory of Choi states and reports rising intervals. Divisible
/// incoherent dynamics cannot rise, so any interval witnesses
/// non-divisibility. Times must be strictly increasing.
std::vector<RisingInterval> monotonicity_witness(const std::vector<double>& times,
                                                 const std::vector<ChoiState>& states,
                                                 double rise_tol = 1e-9);

}  // namespace qcoh
