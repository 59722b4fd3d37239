#include "tfl/modnorm.hpp"

#include <cmath>
#include <limits>

#include "tfl/phase_space.hpp"

namespace tfl {

namespace {

// l^p aggregation of nonnegative terms with p in [1, inf].
double lp_fold(const std::vector<double>& terms, double p) {
  if (is_inf_exponent(p)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  double s = 0.0;
  for (double t : terms) s += std::pow(t, p);
  return std::pow(s, 1.0 / p);
}

void validate_spec(const NormSpec& spec) {
  if (!(spec.p >= 1.0) || !(spec.q >= 1.0))
    throw Error("NormSpec: exponents must lie in [1, inf]");
}

}  // namespace

double weighted_mixed_norm(const RMatrix& magnitudes, const NormSpec& spec, int n) {
  validate_spec(spec);
  require_same_dim(static_cast<int>(magnitudes.rows()), n, "weighted_mixed_norm");
  std::vector<double> rows(n);
  std::vector<double> inner(n);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) inner[static_cast<size_t>(k)] = magnitudes(k, l);
    rows[static_cast<size_t>(l)] = lp_fold(inner, spec.p);
  }
  return lp_fold(rows, spec.q);
}

double modulation_norm(const Signal& f, const Window& phi, const NormSpec& spec) {
  validate_spec(spec);
  const int n = f.dim();
  require_same_dim(phi.dim(), n, "modulation_norm");
  if (std::abs(phi.l2norm() - 1.0) > 1e-10)
    throw Error("modulation_norm: window must have unit l2 norm");

  const TFMatrix v = stft(phi, f);
  RMatrix weighted(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      weighted(k, l) = std::abs(v.m(k, l)) * spec.m(PhasePoint{k, l}, n);
  return weighted_mixed_norm(weighted, spec, n) / static_cast<double>(n);
}

double sequence_norm(const std::vector<double>& values, const CellMap& cells,
                     const NormSpec& spec) {
  validate_spec(spec);
  const Lattice& lattice = cells.lattice();
  const int n = lattice.ambient_dim();
  if (static_cast<int>(values.size()) != lattice.size())
    throw DimensionError("sequence_norm: need one value per lattice point");

  RMatrix spread(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const int owner = cells.owner_index(PhasePoint{k, l});
      const PhasePoint lam = lattice.elements()[static_cast<size_t>(owner)];
      spread(k, l) = std::abs(values[static_cast<size_t>(owner)]) * spec.m(lam, n);
    }
  }
  return weighted_mixed_norm(spread, spec, n);
}

double sequence_norm(const std::vector<double>& values, const Lattice& lattice,
                     const NormSpec& spec) {
  return sequence_norm(values, CellMap(lattice), spec);
}

std::vector<double> localization_coefficients(const Signal& f, const LocOp& base,
                                              const Lattice& lattice) {
  require_same_dim(f.dim(), base.dim(), "localization_coefficients");
  require_same_dim(base.dim(), lattice.ambient_dim(), "localization_coefficients");
  std::vector<double> a;
  a.reserve(lattice.size());
  for (const PhasePoint& lam : lattice.elements()) {
    a.push_back(apply_shifted(base, lam, f).l2norm());
  }
  return a;
}

double localization_norm(const Signal& f, const LocOp& base, const CellMap& cells,
                         const NormSpec& spec) {
  return sequence_norm(localization_coefficients(f, base, cells.lattice()), cells, spec);
}

double localization_norm(const Signal& f, const RMatrix& sigma, const Window& phi,
                         const Lattice& lattice, const NormSpec& spec) {
  const LocOp base = localization_operator(sigma, phi);
  return localization_norm(f, base, CellMap(lattice), spec);
}

double multiwindow_coefficient_norm(const Signal& f, const WindowBundle& bundle,
                                    const CellMap& cells, const NormSpec& spec) {
  const Lattice& lattice = cells.lattice();
  const Coefficients coeffs = analysis(bundle, lattice, f);
  std::vector<double> b(static_cast<size_t>(lattice.size()));
  for (int i = 0; i < lattice.size(); ++i) {
    b[static_cast<size_t>(i)] = coeffs.values.row(i).norm();
  }
  return sequence_norm(b, cells, spec);
}

double multiwindow_coefficient_norm(const Signal& f, const WindowBundle& bundle,
                                    const Lattice& lattice, const NormSpec& spec) {
  return multiwindow_coefficient_norm(f, bundle, CellMap(lattice), spec);
}

EquivalenceReport equivalence_estimate(const NormFn& norm_a, const NormFn& norm_b,
                                       const EnsembleSpec& ensemble) {
  const std::vector<Signal> signals = make_ensemble(ensemble);

  EquivalenceReport report;
  report.ensemble_descriptor = ensemble.describe();
  report.ratios.reserve(signals.size());
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = 0.0;
  for (const Signal& f : signals) {
    const double na = norm_a(f);
    const double nb = norm_b(f);
    if (!(na > 0.0) || !std::isfinite(na) || !std::isfinite(nb))
      throw Error("equivalence_estimate: degenerate norm value in ensemble");
    const double r = nb / na;
    report.ratios.push_back(r);
    r_min = std::min(r_min, r);
    r_max = std::max(r_max, r);
  }
  report.r_min = r_min;
  report.r_max = r_max;
  report.condition = r_max / r_min;
  return report;
}

double local_sup_norm(const TFMatrix& F, int block, const NormSpec& spec) {
  validate_spec(spec);
  const int n = F.dim();
  if (block < 1 || n % block != 0)
    throw BlockSizeError("local_sup_norm: block must divide the ambient dimension");

  const int g = n / block;  // blocks per axis
  RMatrix maxima(g, g);
  for (int bk = 0; bk < g; ++bk) {
    for (int bl = 0; bl < g; ++bl) {
      double m = 0.0;
      for (int k = bk * block; k < (bk + 1) * block; ++k)
        for (int l = bl * block; l < (bl + 1) * block; ++l)
          m = std::max(m, std::abs(F.m(k, l)));
      maxima(bk, bl) = m * spec.m(PhasePoint{bk * block, bl * block}, n);
    }
  }
  return weighted_mixed_norm(maxima, spec, g);
}

SamplingCheck sampling_check(const TFMatrix& F, const Lattice& lattice, int block,
                             const NormSpec& spec) {
  validate_spec(spec);
  const int n = lattice.ambient_dim();
  require_same_dim(F.dim(), n, "sampling_check");
  if (block < 1 || n % block != 0)
    throw BlockSizeError("sampling_check: block must divide the ambient dimension");

  SamplingCheck check;
  check.rhs = local_sup_norm(F, block, spec);

  // Restriction norm: group lattice points by frequency row, inner l^p over
  // the row, outer l^q across rows.
  {
    std::vector<std::vector<double>> rows(static_cast<size_t>(n));
    for (const PhasePoint& lam : lattice.elements()) {
      rows[static_cast<size_t>(lam.l)].push_back(std::abs(F.m(lam.k, lam.l)) * spec.m(lam, n));
    }
    std::vector<double> folded;
    for (const auto& row : rows) {
      if (!row.empty()) folded.push_back(lp_fold(row, spec.p));
    }
    check.lhs = lp_fold(folded, spec.q);
  }

  // C_Lambda components.
  const int g = n / block;
  int n_max = 0;
  double w_max = 0.0;
  for (int bk = 0; bk < g; ++bk) {
    for (int bl = 0; bl < g; ++bl) {
      const double anchor_w = spec.m(PhasePoint{bk * block, bl * block}, n);
      int points = 0;
      for (int k = bk * block; k < (bk + 1) * block; ++k) {
        for (int l = bl * block; l < (bl + 1) * block; ++l) {
          w_max = std::max(w_max, spec.m(PhasePoint{k, l}, n) / anchor_w);
          if (lattice.contains(PhasePoint{k, l})) ++points;
        }
      }
      n_max = std::max(n_max, points);
    }
  }
  check.max_points_per_block = n_max;
  check.max_weight_ratio = w_max;
  check.c_lambda = static_cast<double>(n_max) * w_max;
  check.passes = check.lhs <= check.c_lambda * check.rhs * (1.0 + 1e-12);
  return check;
}

}  // namespace tfl
