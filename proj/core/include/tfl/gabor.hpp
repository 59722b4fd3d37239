#pragma once

#include <string>
#include <vector>

#include "tfl/lattice.hpp"
#include "tfl/types.hpp"

namespace tfl {

// Several windows over a shared ambient dimension. Frame-side operations
// (analysis, synthesis, frame operators, duals) additionally require every
// window to be nonzero; the duality checks admit zero windows, whose
// coefficients simply vanish.
struct WindowBundle {
  std::vector<Window> windows;

  int count() const { return static_cast<int>(windows.size()); }
  int dim() const { return windows.empty() ? 0 : windows.front().dim(); }
  void validate() const;          // nonempty, equal dimensions
  void require_nonzero() const;   // ZeroWindowError on any zero window

  static WindowBundle single(Window w) { return WindowBundle{{std::move(w)}}; }
};

// Analysis coefficients c(lambda, j) = <f, pi(lambda) phi_j>, rows following
// the lattice's sorted element order.
struct Coefficients {
  CMatrix values;  // |Lambda| x n_windows

  int lattice_size() const { return static_cast<int>(values.rows()); }
  int window_count() const { return static_cast<int>(values.cols()); }
};

// Two-sided frame bounds of a hermitian PSD frame operator.
struct FrameReport {
  double lower = 0.0;              // A = min eigenvalue of S
  double upper = 0.0;              // B = max eigenvalue of S
  bool is_frame = false;           // A > tol_frame, tol_frame = 1e-10 * B
  double condition = 0.0;          // B / A, infinity when A is numerically 0
  RVector spectrum;                // all eigenvalues of S, ascending
};

inline constexpr double kFrameTolRel = 1e-10;

Coefficients analysis(const WindowBundle& bundle, const Lattice& lattice, const Signal& f);

Signal synthesis(const WindowBundle& bundle, const Lattice& lattice, const Coefficients& coeffs);

// Analysis operator as a (|Lambda| * n) x N matrix; row (i * n + j) maps f to
// <f, pi(lambda_i) phi_j>. The synthesis operator is its conjugate transpose.
CMatrix analysis_matrix(const WindowBundle& bundle, const Lattice& lattice);

// Frame operator S f = sum_j sum_lam <f, pi(lam) phi_j> pi(lam) phi_j,
// hermitian PSD, commuting with pi(lam) for lam in Lambda.
CMatrix frame_operator(const WindowBundle& bundle, const Lattice& lattice);

// Frame-type operator S f = sum_j sum_lam <f, pi(lam) a_j> pi(lam) b_j
// (analysis with bundle a, synthesis with bundle b).
CMatrix frame_type_operator(const WindowBundle& analysis_bundle, const WindowBundle& synthesis_bundle,
                            const Lattice& lattice);

// Eigenvalue-based frame bounds. Throws NotHermitianError when the hermiticity
// residual of S exceeds 1e-9 relative.
FrameReport frame_bounds(const CMatrix& frame_op);

// Canonical dual windows gamma_j = S^{-1} phi_j. Throws NotAFrameError when
// the system fails the frame test.
WindowBundle dual_windows(const WindowBundle& bundle, const Lattice& lattice);

// Janssen representation over the adjoint lattice. The reconstructed operator
// is kappa * sum_mu c_mu pi(mu) with c_mu = sum_j <phi_j, pi(mu) psi_j> and
// kappa = |Lambda| / N = N / s(Lambda); with that coefficient order the
// represented operator analyzes with psi and synthesizes with phi (for
// phi == psi it is the frame operator). residual is the Frobenius distance
// to that directly assembled operator.
struct JanssenResult {
  Lattice adjoint;                  // Lambda°, coefficient order follows its elements()
  std::vector<Complex> coefficients;
  double kappa = 0.0;
  CMatrix reconstructed;
  double residual = 0.0;
};

JanssenResult janssen_representation(const WindowBundle& phi, const WindowBundle& psi,
                                     const Lattice& lattice);

// Wexler-Raz biorthogonality: kappa * sum_j <phi_j, pi(mu) gamma_j> = delta_{mu,0}
// over mu in Lambda°, kappa as in janssen_representation. Equivalent to the
// exact reconstruction D_gamma C_phi = I.
struct WexlerRazResult {
  bool passes = false;
  double max_residual = 0.0;
  std::vector<double> residuals;  // per mu, adjoint element order
  Lattice adjoint;
};

inline constexpr double kWexlerRazTol = 1e-9;

WexlerRazResult wexler_raz_check(const WindowBundle& phi, const WindowBundle& gamma,
                                 const Lattice& lattice);

// Gramian of the vector-valued system {pi(mu) bold-phi} over the adjoint
// lattice: G(mu, mu') = sum_j <pi(mu') phi_j, pi(mu) phi_j>. Hermitian PSD.
CMatrix gramian(const WindowBundle& bundle, const Lattice& adjoint);

struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Extreme eigenvalues of a Gramian; the system is a Riesz sequence iff lower > 0.
RieszBounds riesz_bounds(const CMatrix& gram);

// The finite-dimensional frame criteria, each evaluated by an independent
// computation, plus the consensus. Conditions that collapse at finite
// dimension (dense-range / l1-l-infty variants) are listed with
// collapsed = true and inherit the consensus value.
struct FrameCriteriaReport {
  struct Item {
    std::string name;
    bool satisfied = false;
    double evidence = 0.0;  // the numeric witness (min eigenvalue, min singular value, ...)
    std::string method;
    bool collapsed = false;
  };
  std::vector<Item> items;
  bool all_agree = false;
  bool is_frame = false;
};

FrameCriteriaReport frame_criteria_report(const WindowBundle& bundle, const Lattice& lattice);

}  // namespace tfl
