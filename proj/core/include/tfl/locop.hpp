#pragma once

#include <vector>

#include "tfl/gabor.hpp"
#include "tfl/lattice.hpp"
#include "tfl/types.hpp"

namespace tfl {

// Time-frequency localization operator H_sigma = (1/N) V*_phi sigma V_phi.
// The 1/N normalization makes sigma == 1 with a unit window the identity, so
// eigenvalues are bounded by max sigma and the concentration bound is
// dimension-free. (The source formulas without the factor pick up powers of N.)
struct LocOp {
  RMatrix symbol;  // sigma over phase space, entry (k, l); real, >= 0
  Window window;
  CMatrix matrix;  // hermitian N x N

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Builds H_sigma. Throws SymbolSignError for negative entries and
// ZeroWindowError for a vanishing window.
LocOp localization_operator(const RMatrix& sigma, const Window& phi);

// Torus translate (T_lam sigma)(z) = sigma(z - lam).
RMatrix translate_symbol(const RMatrix& sigma, PhasePoint lam);

// H with symbol T_lam sigma, built from the translated symbol. Equals the
// conjugation pi(lam) H pi(lam)* exactly (intertwining identity).
LocOp shifted_locop(const LocOp& op, PhasePoint lam);

// Applies pi(lam) H pi(lam)* to a signal without rebuilding the operator;
// identical to shifted_locop(op, lam).matrix * f by the intertwining identity.
Signal apply_shifted(const LocOp& op, PhasePoint lam, const Signal& f);

// Eigenvalues in descending order with orthonormal eigenvector columns.
// Eigenvalues within -1e-12 of zero are clipped to 0.
struct SpectralDecomposition {
  RVector eigenvalues;   // descending
  CMatrix eigenvectors;  // column j pairs with eigenvalues[j]

  int dim() const { return static_cast<int>(eigenvectors.rows()); }
};

SpectralDecomposition spectral_decomposition(const LocOp& op);
SpectralDecomposition spectral_decomposition(const CMatrix& hermitian_psd);

// min / max over phase space of sum_{lam in Lambda} sigma(z - lam).
struct PartitionBounds {
  double lower = 0.0;
  double upper = 0.0;
};

PartitionBounds partition_check(const RMatrix& sigma, const Lattice& lattice);

// Checks |V_phi(H_sigma f)| <= (1/N) (|V_phi phi| * (sigma |V_phi f|)) pointwise
// (torus convolution). Returns the largest lhs - rhs, which stays below
// tolerance for sigma >= 0.
struct PointwiseEstimate {
  double max_violation = 0.0;  // max over z of lhs - rhs
  double scale = 0.0;          // max over z of rhs, for relative judgments
};

PointwiseEstimate pointwise_estimate_check(const RMatrix& sigma, const Window& phi, const Signal& f);

// Concentration of eigenfunction j on Omega:
//   lhs   = (1/N) sum_{z in Omega} |V_phi phi_j(z)|^2
//   bound = c_j / C_sigma, C_sigma = max sigma.
// Requires sigma supported inside Omega (else SupportError) and lhs >= bound
// up to numerical slack; equality holds iff sigma is C_sigma * chi_Omega.
struct ConcentrationResult {
  double lhs = 0.0;
  double bound = 0.0;
  bool symbol_is_scaled_indicator = false;
};

ConcentrationResult concentration(const LocOp& op, const SpectralDecomposition& decomp, int j,
                                  const std::vector<PhasePoint>& omega);

// Eigenvalue sequence summary: counts above a fixed threshold ladder, the
// trace, and the symbol mass (1/N) sum sigma (equal to the trace for unit
// windows).
struct DecayProfile {
  RVector eigenvalues;
  double trace = 0.0;
  double symbol_mass = 0.0;
  std::vector<std::pair<double, int>> counts_above;  // (threshold, #{j : c_j > threshold})
};

DecayProfile eigenvalue_decay_profile(const SpectralDecomposition& decomp, const RMatrix& sigma);

// Stopping rule for the eigenfunction search.
enum class SearchStrategy { FirstFrame, Conditioned };

struct ConstructionResult {
  int n_windows = 0;
  WindowBundle bundle;
  FrameReport report;
  std::vector<int> tried_counts;          // the n values that were tested
  std::vector<double> tried_conditions;   // condition number at each tested n
};

// Constructive multi-window frame search: take the top-n eigenfunctions of
// H_sigma for n = 1, 2, ... until the bundle is a frame over the lattice
// (FirstFrame) or its condition number reaches condition_target (Conditioned).
// Degenerate eigenvalue clusters at the cutoff are included whole. Throws
// PartitionError when the covering hypothesis fails and ExhaustedError when
// n reaches N without success.
ConstructionResult construct_multiwindow_frame(const RMatrix& sigma, const Window& phi,
                                               const Lattice& lattice, SearchStrategy strategy,
                                               double condition_target = 0.0);

}  // namespace tfl
