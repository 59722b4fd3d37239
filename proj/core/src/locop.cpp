#include "tfl/locop.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "tfl/phase_space.hpp"

namespace tfl {

namespace {

void validate_symbol(const RMatrix& sigma) {
  if (sigma.rows() != sigma.cols()) throw DimensionError("symbol: array must be square");
  if ((sigma.array() < 0.0).any()) throw SymbolSignError("symbol: negative entries");
}

constexpr double kEigClipTol = 1e-12;
constexpr double kDegenerateTol = 1e-12;

}  // namespace

LocOp localization_operator(const RMatrix& sigma, const Window& phi) {
  validate_symbol(sigma);
  const int n = phi.dim();
  require_same_dim(static_cast<int>(sigma.rows()), n, "localization_operator");
  if (phi.l2norm() == 0.0) throw ZeroWindowError("localization_operator: zero window");

  // H = (1/N) sum_z sigma(z) |pi(z) phi><pi(z) phi|
  CMatrix h = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const double w = sigma(k, l);
      if (w == 0.0) continue;
      const Signal atom = tf_shift(PhasePoint{k, l}, phi.s);
      h.noalias() += w * (atom.v * atom.v.adjoint());
    }
  }
  h /= static_cast<double>(n);
  // Symmetrize away assembly round-off; H is hermitian by construction.
  h = ((h + h.adjoint()) / 2.0).eval();
  return LocOp{sigma, phi, std::move(h)};
}

RMatrix translate_symbol(const RMatrix& sigma, PhasePoint lam) {
  const int n = static_cast<int>(sigma.rows());
  const PhasePoint t = reduce(lam.k, lam.l, n);
  RMatrix out(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out(k, l) = sigma((k - t.k + n) % n, (l - t.l + n) % n);
  return out;
}

LocOp shifted_locop(const LocOp& op, PhasePoint lam) {
  return localization_operator(translate_symbol(op.symbol, lam), op.window);
}

Signal apply_shifted(const LocOp& op, PhasePoint lam, const Signal& f) {
  require_same_dim(f.dim(), op.dim(), "apply_shifted");
  const int n = op.dim();
  const PhasePoint neg = negate(lam, n);
  // pi(lam)* = composition_phase-adjusted pi(-lam); the phases cancel in the
  // conjugation, so shift back, apply H, shift forward.
  const Signal back = tf_shift(neg, f);
  const Signal mid = Signal(CVector(op.matrix * back.v));
  Signal out = tf_shift(lam, mid);
  // pi(lam) pi(-lam) = e^{2 pi i l k / N} I, so the round trip leaves a global
  // phase that the conjugation must remove.
  const Complex round_trip = composition_phase(lam, neg, n);
  out.v *= std::conj(round_trip);
  return out;
}

SpectralDecomposition spectral_decomposition(const LocOp& op) {
  return spectral_decomposition(op.matrix);
}

SpectralDecomposition spectral_decomposition(const CMatrix& hermitian_psd) {
  if (hermitian_psd.rows() != hermitian_psd.cols())
    throw DimensionError("spectral_decomposition: matrix not square");
  const double scale = std::max(1.0, hermitian_psd.norm());
  if ((hermitian_psd - hermitian_psd.adjoint()).norm() / scale > 1e-9)
    throw NotHermitianError("spectral_decomposition: matrix is not hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver((hermitian_psd + hermitian_psd.adjoint()) / 2.0);
  const int n = static_cast<int>(hermitian_psd.rows());
  SpectralDecomposition d;
  d.eigenvalues = RVector(n);
  d.eigenvectors = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    double c = solver.eigenvalues()[n - 1 - j];  // descending
    if (c < 0.0 && c > -kEigClipTol) c = 0.0;
    d.eigenvalues[j] = c;
    d.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  return d;
}

PartitionBounds partition_check(const RMatrix& sigma, const Lattice& lattice) {
  validate_symbol(sigma);
  const int n = lattice.ambient_dim();
  require_same_dim(static_cast<int>(sigma.rows()), n, "partition_check");

  PartitionBounds bounds{std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      double total = 0.0;
      for (const PhasePoint& lam : lattice.elements()) {
        total += sigma((k - lam.k + n) % n, (l - lam.l + n) % n);
      }
      bounds.lower = std::min(bounds.lower, total);
      bounds.upper = std::max(bounds.upper, total);
    }
  }
  return bounds;
}

PointwiseEstimate pointwise_estimate_check(const RMatrix& sigma, const Window& phi,
                                           const Signal& f) {
  validate_symbol(sigma);
  const int n = f.dim();
  require_same_dim(static_cast<int>(sigma.rows()), n, "pointwise_estimate_check");
  require_same_dim(phi.dim(), n, "pointwise_estimate_check");

  const LocOp op = localization_operator(sigma, phi);
  const Signal hf = Signal(CVector(op.matrix * f.v));
  const TFMatrix v_hf = stft(phi, hf);
  const TFMatrix v_f = stft(phi, f);
  const TFMatrix v_phi = stft(phi, Signal(phi.s.v));

  // rhs(z) = (1/N) sum_w |V_phi phi(z - w)| sigma(w) |V_phi f(w)|
  RMatrix weighted(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) weighted(k, l) = sigma(k, l) * std::abs(v_f.m(k, l));

  PointwiseEstimate result{-std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      double conv = 0.0;
      for (int kk = 0; kk < n; ++kk)
        for (int ll = 0; ll < n; ++ll)
          conv += std::abs(v_phi.m((k - kk + n) % n, (l - ll + n) % n)) * weighted(kk, ll);
      const double rhs = conv / n;
      const double lhs = std::abs(v_hf.m(k, l));
      result.max_violation = std::max(result.max_violation, lhs - rhs);
      result.scale = std::max(result.scale, rhs);
    }
  }
  return result;
}

ConcentrationResult concentration(const LocOp& op, const SpectralDecomposition& decomp, int j,
                                  const std::vector<PhasePoint>& omega) {
  const int n = op.dim();
  if (j < 0 || j >= decomp.dim()) throw DimensionError("concentration: eigenpair index out of range");

  std::vector<bool> in_omega(static_cast<size_t>(n) * n, false);
  for (const PhasePoint& z : omega) in_omega[packed_index(reduce(z.k, z.l, n), n)] = true;

  double c_sigma = 0.0;
  bool scaled_indicator = true;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const double s = op.symbol(k, l);
      if (!in_omega[packed_index(PhasePoint{k, l}, n)]) {
        if (s != 0.0) throw SupportError("concentration: symbol mass outside Omega");
      } else {
        c_sigma = std::max(c_sigma, s);
      }
    }
  }
  if (c_sigma <= 0.0) throw SupportError("concentration: symbol vanishes on Omega");
  for (const PhasePoint& z : omega) {
    const PhasePoint zc = reduce(z.k, z.l, n);
    if (std::abs(op.symbol(zc.k, zc.l) - c_sigma) > 1e-14 * c_sigma) scaled_indicator = false;
  }

  const TFMatrix v = stft(op.window, Signal(decomp.eigenvectors.col(j).eval()));
  double lhs = 0.0;
  for (const PhasePoint& z : omega) {
    const PhasePoint zc = reduce(z.k, z.l, n);
    lhs += std::norm(v.m(zc.k, zc.l));
  }
  lhs /= static_cast<double>(n);

  return ConcentrationResult{lhs, decomp.eigenvalues[j] / c_sigma, scaled_indicator};
}

DecayProfile eigenvalue_decay_profile(const SpectralDecomposition& decomp, const RMatrix& sigma) {
  DecayProfile profile;
  profile.eigenvalues = decomp.eigenvalues;
  profile.trace = decomp.eigenvalues.sum();
  profile.symbol_mass = sigma.sum() / static_cast<double>(sigma.rows());
  for (double threshold : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    int count = 0;
    while (count < decomp.eigenvalues.size() && decomp.eigenvalues[count] > threshold) ++count;
    profile.counts_above.emplace_back(threshold, count);
  }
  return profile;
}

ConstructionResult construct_multiwindow_frame(const RMatrix& sigma, const Window& phi,
                                               const Lattice& lattice, SearchStrategy strategy,
                                               double condition_target) {
  const PartitionBounds pb = partition_check(sigma, lattice);
  if (pb.lower <= 0.0)
    throw PartitionError("construct_multiwindow_frame: symbol fails the covering hypothesis");
  if (strategy == SearchStrategy::Conditioned && condition_target < 1.0)
    throw Error("construct_multiwindow_frame: condition target must be >= 1");

  const LocOp op = localization_operator(sigma, phi);
  const SpectralDecomposition decomp = spectral_decomposition(op);
  const int n = op.dim();

  ConstructionResult result;
  CMatrix s = CMatrix::Zero(n, n);
  int built = 0;  // windows already folded into s
  int next_n = 1;
  while (next_n <= n) {
    // Include the whole degenerate cluster at the cutoff.
    int take = next_n;
    while (take < n && std::abs(decomp.eigenvalues[take - 1] - decomp.eigenvalues[take]) <=
                           kDegenerateTol * std::max(1.0, decomp.eigenvalues[0]))
      ++take;

    for (; built < take; ++built) {
      const WindowBundle one = WindowBundle::single(
          Window{Signal(decomp.eigenvectors.col(built).eval()), WindowNorm::UnitL2});
      s += frame_operator(one, lattice);
    }

    const FrameReport report = frame_bounds(s);
    result.tried_counts.push_back(take);
    result.tried_conditions.push_back(report.condition);

    const bool done = (strategy == SearchStrategy::FirstFrame)
                          ? report.is_frame
                          : (report.is_frame && report.condition <= condition_target);
    if (done) {
      result.n_windows = take;
      result.report = report;
      result.bundle.windows.reserve(take);
      for (int j = 0; j < take; ++j) {
        result.bundle.windows.push_back(
            Window{Signal(decomp.eigenvectors.col(j).eval()), WindowNorm::UnitL2});
      }
      return result;
    }
    next_n = take + 1;
  }
  throw ExhaustedError("construct_multiwindow_frame: no frame found up to n = " +
                       std::to_string(n));
}

}  // namespace tfl
