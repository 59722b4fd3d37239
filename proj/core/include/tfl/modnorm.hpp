#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tfl/ensemble.hpp"
#include "tfl/gabor.hpp"
#include "tfl/lattice.hpp"
#include "tfl/locop.hpp"
#include "tfl/types.hpp"
#include "tfl/weights.hpp"

namespace tfl {

// Normalization ledger (all constants pinned by the Moyal identity
// sum |V_phi f|^2 = N ||f||^2 ||phi||^2):
//   modulation_norm carries a 1/N factor, so p = q = 2, m == 1, unit window
//     gives ||f||_2 / sqrt(N).
//   sequence_norm carries no 1/N factor, so over the full lattice with
//     p = q it is the plain weighted l^p norm; the p = q = 2, m == 1
//     multiwindow_coefficient_norm of a single unit window is sqrt(N) ||f||_2.
//   localization_norm inherits sequence_norm's convention.

// Weighted mixed norm of the magnitudes |F(k,l)| m(k,l): inner exponent p over
// the time index k, outer exponent q over the frequency index l. No 1/N.
double weighted_mixed_norm(const RMatrix& magnitudes, const NormSpec& spec, int n);

// Modulation-space norm proxy (1/N) * || V_phi f ||_{l^{p,q}_m}. The window
// must have unit l2 norm.
double modulation_norm(const Signal& f, const Window& phi, const NormSpec& spec);

// Sequence norm || a ||_{l^{p,q}_m(Lambda)}: each |a_lambda| is spread over
// its fundamental-domain cell with the weight frozen at the cell's lattice
// anchor m(lambda), then the mixed norm is taken over the phase space. For a
// separable lattice (steps a, b) this equals
//   a^{1/p} b^{1/q} * (sum_l (sum_k |a_{k,l}|^p m(ak,bl)^p)^{q/p})^{1/q}.
double sequence_norm(const std::vector<double>& values, const CellMap& cells, const NormSpec& spec);
double sequence_norm(const std::vector<double>& values, const Lattice& lattice, const NormSpec& spec);

// a_lambda = || H_lambda f ||_2 for every lattice point, in lattice element
// order; H_lambda applied through the intertwining conjugation of the base
// operator (equal to the rebuilt shifted operator by the tested identity).
std::vector<double> localization_coefficients(const Signal& f, const LocOp& base,
                                              const Lattice& lattice);

// || (||H_lambda f||_2)_lambda ||_{l^{p,q}_m(Lambda)}; the Theorem norm.
double localization_norm(const Signal& f, const LocOp& base, const CellMap& cells,
                         const NormSpec& spec);
double localization_norm(const Signal& f, const RMatrix& sigma, const Window& phi,
                         const Lattice& lattice, const NormSpec& spec);

// b_lambda = (sum_j |<f, pi(lambda) phi_j>|^2)^{1/2} followed by sequence_norm.
double multiwindow_coefficient_norm(const Signal& f, const WindowBundle& bundle,
                                    const CellMap& cells, const NormSpec& spec);
double multiwindow_coefficient_norm(const Signal& f, const WindowBundle& bundle,
                                    const Lattice& lattice, const NormSpec& spec);

using NormFn = std::function<double(const Signal&)>;

// Per-signal ratios norm_b(f) / norm_a(f) over a seeded ensemble.
struct EquivalenceReport {
  std::vector<double> ratios;  // ordered by signal index
  double r_min = 0.0;
  double r_max = 0.0;
  double condition = 0.0;  // r_max / r_min
  std::string ensemble_descriptor;
};

EquivalenceReport equivalence_estimate(const NormFn& norm_a, const NormFn& norm_b,
                                       const EnsembleSpec& ensemble);

// Wiener-amalgam style local-suprema norm: blockwise maxima of |F| with the
// weight frozen at each block's anchor, then the mixed (p, q) norm over the
// block grid. block must divide N (else BlockSizeError).
double local_sup_norm(const TFMatrix& F, int block, const NormSpec& spec);

// Sampling inequality || F|_Lambda ||_{l^{p,q}_m} <= C_Lambda * local_sup_norm.
// The restriction norm groups lattice points by frequency row (plain double
// sum, weight at the lattice point). C_Lambda = n_max * w_max where n_max is
// the largest number of lattice points in one block and w_max the largest
// ratio m(z) / m(anchor) within a block.
struct SamplingCheck {
  double lhs = 0.0;
  double rhs = 0.0;  // local_sup_norm
  double c_lambda = 0.0;
  int max_points_per_block = 0;
  double max_weight_ratio = 0.0;
  bool passes = false;
};

SamplingCheck sampling_check(const TFMatrix& F, const Lattice& lattice, int block,
                             const NormSpec& spec);

}  // namespace tfl
