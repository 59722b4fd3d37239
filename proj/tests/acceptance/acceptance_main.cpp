// Acceptance suite: one check per numbered criterion, each printing a single
// [PASS]/[FAIL] line. Run with no arguments for all criteria or pass a list
// of criterion numbers. Exit code 0 iff every executed criterion passed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tfl/ensemble.hpp"
#include "tfl/gabor.hpp"
#include "tfl/json_writer.hpp"
#include "tfl/lattice.hpp"
#include "tfl/locop.hpp"
#include "tfl/modnorm.hpp"
#include "tfl/phase_space.hpp"
#include "tfl/rng.hpp"
#include "tfl/serialization.hpp"

using namespace tfl;
namespace fs = std::filesystem;

namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;
  int checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

CVector random_signal(Rng& rng, int n) {
  CVector v(n);
  for (int t = 0; t < n; ++t) v[t] = Complex(rng.next_gauss(), rng.next_gauss());
  return v;
}

RMatrix random_symbol(Rng& rng, int n) {
  RMatrix s(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) s(k, l) = rng.next_unit();
  return s;
}

RMatrix cell_indicator(const Lattice& lat) {
  const int n = lat.ambient_dim();
  RMatrix sigma = RMatrix::Zero(n, n);
  const CellMap cells(lat);
  for (const PhasePoint& q : cells.cell_representatives()) sigma(q.k, q.l) = 1.0;
  return sigma;
}

// All subgroups of Z_n x Z_n, via deduplicated two-generator closures.
std::vector<Lattice> all_subgroups(int n) {
  std::set<std::vector<PhasePoint>> seen;
  std::vector<Lattice> out;
  std::vector<PhasePoint> points;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) points.push_back({k, l});
  for (const PhasePoint& g1 : points) {
    for (const PhasePoint& g2 : points) {
      Lattice lat = Lattice::from_generators(n, {g1, g2});
      if (seen.insert(lat.elements()).second) out.push_back(std::move(lat));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool criterion_1() {
  Checker c;
  Rng rng(101);
  for (int n : {4, 6, 8}) {
    const Window g = gaussian_window(n);
    for (int rep = 0; rep < 100; ++rep) {
      // Unitarity.
      {
        const Signal f{random_signal(rng, n)};
        const PhasePoint z{rng.next_below(n), rng.next_below(n)};
        c.expect(std::abs(tf_shift(z, f).l2norm() - f.l2norm()) < 1e-11 * f.l2norm(),
                 "unitarity of pi(z)");
      }
      // Commutation law as matrices.
      {
        const PhasePoint z1{rng.next_below(n), rng.next_below(n)};
        const PhasePoint z2{rng.next_below(n), rng.next_below(n)};
        const CMatrix p1 = tf_shift_matrix(z1, n);
        const CMatrix p2 = tf_shift_matrix(z2, n);
        const Complex phase = commutation_phase(z1, z2, n);
        c.expect((p1 * p2 - phase * (p2 * p1)).norm() < 1e-11 * n, "commutation law");
      }
      // Moyal identity.
      {
        const CVector phi = random_signal(rng, n);
        const Signal f{random_signal(rng, n)};
        const TFMatrix v = stft(Window{Signal(CVector(phi))}, f);
        const double total = v.m.squaredNorm();
        const double expected = n * f.v.squaredNorm() * phi.squaredNorm();
        c.expect(std::abs(total / expected - 1.0) < 1e-11, "Moyal identity");
      }
      // Adjointness of V and V*.
      {
        const Window w{Signal(random_signal(rng, n))};
        const Signal h{random_signal(rng, n)};
        CMatrix fm(n, n);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) fm(k, l) = Complex(rng.next_gauss(), rng.next_gauss());
        const TFMatrix F(std::move(fm));
        const Complex lhs = inner(stft_adjoint(w, F), h);
        const Complex rhs = phase_space_inner(F, stft(w, h));
        const double scale = std::abs(lhs) + std::abs(rhs) + 1.0;
        c.expect(std::abs(lhs - rhs) < 1e-11 * scale, "V / V* adjointness");
      }
      // Intertwining pi(lam) H pi(lam)* = H_{T_lam sigma}.
      {
        const LocOp op = localization_operator(random_symbol(rng, n), g);
        const PhasePoint lam{rng.next_below(n), rng.next_below(n)};
        const CMatrix p = tf_shift_matrix(lam, n);
        const CMatrix conj = p * op.matrix * p.adjoint();
        const CMatrix moved = shifted_locop(op, lam).matrix;
        c.expect((conj - moved).norm() < 1e-11 * std::max(1.0, moved.norm()), "intertwining");
      }
    }
  }
  std::cout << "  exact identities checked: " << c.checks << " instances\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_2() {
  Checker c;
  Rng rng(102);
  const int n = 8;
  const Window g = gaussian_window(n);
  for (int rep = 0; rep < 50; ++rep) {
    const RMatrix sigma = random_symbol(rng, n);
    const LocOp op = localization_operator(sigma, g);

    c.expect((op.matrix - op.matrix.adjoint()).norm() < 1e-11, "hermiticity");

    const SpectralDecomposition d = spectral_decomposition(op);
    c.expect(d.eigenvalues[n - 1] >= 0.0, "PSD after clipping");
    c.expect(d.eigenvalues[0] <= sigma.maxCoeff() * (1.0 + 1e-11), "c_1 <= max sigma");

    CMatrix recon = CMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
      recon += d.eigenvalues[j] * (d.eigenvectors.col(j) * d.eigenvectors.col(j).adjoint());
    c.expect((recon - op.matrix).norm() < 1e-10 * std::max(1.0, op.matrix.norm()),
             "spectral reconstruction");

    const PhasePoint lam{rng.next_below(n), rng.next_below(n)};
    const SpectralDecomposition moved = spectral_decomposition(shifted_locop(op, lam));
    c.expect((moved.eigenvalues - d.eigenvalues).cwiseAbs().maxCoeff() < 1e-10,
             "lambda-invariance of spectra");
  }
  std::cout << "  spectral checks: " << c.checks << " assertions over 50 symbols\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_3() {
  Checker c;
  Rng rng(103);

  // Janssen after one-time calibration (kappa identical across instances).
  double kappa_seen = -1.0;
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 4 + 2 * rng.next_below(3);
    const Lattice lat = Lattice::separable(n, 1 + rng.next_below(2), 2);
    WindowBundle phi;
    for (int j = 0; j < 1 + rng.next_below(2); ++j)
      phi.windows.push_back(Window{Signal(random_signal(rng, n))});
    const JanssenResult jr = janssen_representation(phi, phi, lat);
    c.expect(jr.residual < 1e-10, "Janssen residual");
    const double expected_kappa = static_cast<double>(lat.size()) / n;
    c.expect(jr.kappa == expected_kappa, "kappa is N / s(Lambda), frozen");
    kappa_seen = jr.kappa;
  }
  (void)kappa_seen;

  // Wexler-Raz <=> exact reconstruction, both implications, 20 random frames.
  {
    const int n = 6;
    const Lattice lat = Lattice::separable(n, 2, 2);
    int frames = 0;
    while (frames < 20) {
      WindowBundle bundle;
      for (int j = 0; j < 2; ++j) bundle.windows.push_back(Window{Signal(random_signal(rng, n))});
      if (!frame_bounds(frame_operator(bundle, lat)).is_frame) continue;
      ++frames;
      const WindowBundle duals = dual_windows(bundle, lat);
      const CMatrix recon = analysis_matrix(duals, lat).adjoint() * analysis_matrix(bundle, lat);
      const bool reconstructs = (recon - CMatrix::Identity(n, n)).norm() < 1e-9;
      c.expect(wexler_raz_check(bundle, duals, lat).passes == reconstructs,
               "Wexler-Raz <=> reconstruction (canonical duals)");
      c.expect(reconstructs, "canonical duals reconstruct");

      WindowBundle off = duals;
      off.windows[0].s.v[rng.next_below(n)] += Complex(0.05, -0.02);
      const CMatrix recon_off = analysis_matrix(off, lat).adjoint() * analysis_matrix(bundle, lat);
      const bool reconstructs_off = (recon_off - CMatrix::Identity(n, n)).norm() < 1e-9;
      c.expect(wexler_raz_check(bundle, off, lat).passes == reconstructs_off,
               "Wexler-Raz <=> reconstruction (perturbed)");
    }
  }

  // Ron-Shen: frame bounds positive <=> adjoint-lattice Gramian positive definite.
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + 2 * rng.next_below(3);
    const Lattice lat = (rep % 2 == 0)
                            ? Lattice::separable(n, 1 + rng.next_below(2), 1 + rng.next_below(2))
                            : Lattice::from_generators(
                                  n, {{rng.next_below(n), rng.next_below(n)},
                                      {rng.next_below(n), rng.next_below(n)}});
    WindowBundle bundle;
    for (int j = 0; j < 1 + rng.next_below(2); ++j)
      bundle.windows.push_back(Window{Signal(random_signal(rng, n))});
    const FrameReport fr = frame_bounds(frame_operator(bundle, lat));
    const RieszBounds rb = riesz_bounds(gramian(bundle, adjoint_lattice(lat)));
    c.expect(fr.is_frame == (rb.lower > kFrameTolRel * std::max(rb.upper, 0.0)),
             "Ron-Shen duality");
  }

  // Adjoint lattice laws, exhaustively over all subgroups for N <= 12.
  for (int n = 2; n <= 12; ++n) {
    for (const Lattice& lat : all_subgroups(n)) {
      const Lattice adj = adjoint_lattice(lat);
      c.expect(static_cast<long long>(lat.size()) * adj.size() == static_cast<long long>(n) * n,
               "|Lambda| |Lambda°| = N^2");
      c.expect(adjoint_lattice(adj) == lat, "(Lambda°)° = Lambda");
    }
  }

  std::cout << "  duality checks: " << c.checks << " assertions\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_4() {
  Checker c;
  Rng rng(104);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 4 + rng.next_below(5);
    const Lattice lat = Lattice::from_generators(
        n, {{rng.next_below(n), rng.next_below(n)}, {rng.next_below(n), rng.next_below(n)}});
    WindowBundle bundle;
    for (int j = 0; j < 1 + rng.next_below(2); ++j)
      bundle.windows.push_back(Window{Signal(random_signal(rng, n))});
    const FrameCriteriaReport r = frame_criteria_report(bundle, lat);
    c.expect(r.all_agree, "criteria agreement");
  }
  std::cout << "  frame-criteria agreement over 50 randomized instances\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_5() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const int n = 8;
  const Window g = gaussian_window(n);
  int swept = 0;
  for (const Lattice& lat : all_subgroups(n)) {
    if (lat.size() < n) continue;
    ++swept;
    const RMatrix sigma = cell_indicator(lat);
    const ConstructionResult r =
        construct_multiwindow_frame(sigma, g, lat, SearchStrategy::FirstFrame);
    c.expect(r.n_windows <= n, "n <= N");
    c.expect(r.report.is_frame, "post-hoc frame report");
    const WindowBundle duals = dual_windows(r.bundle, lat);
    c.expect(wexler_raz_check(r.bundle, duals, lat).passes, "post-hoc Wexler-Raz");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "  swept " << swept << " lattices with |Lambda| >= 8 in " << seconds << " s\n";
  c.expect(seconds < 60.0, "sweep under 60 s");
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_6() {
  Checker c;
  const int n = 8;
  const Window g = gaussian_window(n);
  const Lattice lat = Lattice::separable(n, 2, 2);
  const RMatrix sigma = cell_indicator(lat);
  const LocOp base = localization_operator(sigma, g);
  const CellMap cells(lat);

  const std::string fixture_path = std::string(TFL_FIXTURE_DIR) + "/equivalence_n8.json";
  std::map<std::string, double> stored;
  const bool have_fixture = fs::exists(fixture_path);
  if (have_fixture) {
    // Fixture format: {"key": condition, ...} with keys "p=<p>,m=<kind>".
    const std::string text = read_text_file(fixture_path);
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token)) {
      const size_t quote = token.find('"');
      if (quote == std::string::npos) continue;
      const size_t quote2 = token.find('"', quote + 1);
      const size_t colon = token.find(':', quote2);
      if (quote2 == std::string::npos || colon == std::string::npos) continue;
      stored[token.substr(quote + 1, quote2 - quote - 1)] = std::stod(token.substr(colon + 1));
    }
  }

  JValue fixture_out = JValue::object();
  const std::vector<std::pair<std::string, Weight>> weights = {
      {"const", Weight::constant()}, {"poly1", Weight::polynomial(1.0)}};
  const std::vector<double> exponents = {1.0, 2.0, std::numeric_limits<double>::infinity()};

  for (double p : exponents) {
    for (const auto& [wname, weight] : weights) {
      NormSpec spec;
      spec.p = spec.q = p;
      spec.m = weight;
      const NormFn norm_a = [&](const Signal& f) { return modulation_norm(f, g, spec); };
      const NormFn norm_b = [&](const Signal& f) { return localization_norm(f, base, cells, spec); };

      EnsembleSpec es;
      es.n = n;
      es.count = 200;
      es.seed = 99991;
      const EquivalenceReport small = equivalence_estimate(norm_a, norm_b, es);
      c.expect(std::isfinite(small.condition) && small.r_min > 0.0, "finite ratio interval");

      EnsembleSpec big = es;
      big.count = 2000;
      const EquivalenceReport grown = equivalence_estimate(norm_a, norm_b, big);
      c.expect(grown.r_min <= small.r_min * (1 + 1e-12), "r_min non-increasing");
      c.expect(grown.r_max >= small.r_max * (1 - 1e-12), "r_max non-decreasing");
      c.expect(std::abs(grown.r_min - small.r_min) / small.r_min < 0.05, "r_min drift < 5%");
      c.expect(std::abs(grown.r_max - small.r_max) / small.r_max < 0.05, "r_max drift < 5%");

      std::ostringstream key;
      key << "p=" << (std::isinf(p) ? std::string("inf") : std::to_string(static_cast<int>(p)))
          << ",m=" << wname;
      fixture_out.set(key.str(), small.condition);
      if (have_fixture) {
        const auto it = stored.find(key.str());
        c.expect(it != stored.end(), "fixture has key " + key.str());
        if (it != stored.end()) {
          c.expect(std::abs(small.condition - it->second) / it->second < 0.05,
                   "condition within 5% of fixture for " + key.str());
        }
      }
    }
  }

  if (!have_fixture) {
    std::ofstream(fixture_path) << fixture_out.dump(2);
    std::cout << "  wrote first-run fixture " << fixture_path << "\n";
  }
  std::cout << "  equivalence over 6 (p, m) combinations, 200 -> 2000 signals\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_7() {
  Checker c;
  Rng rng(107);
  const int n = 8;
  int instances = 0;
  while (instances < 20) {
    ++instances;
    const Window g = gaussian_window(n);
    // Random region Omega of 6..16 points; alternate between scaled
    // indicators (equality expected) and general symbols (inequality only).
    std::set<std::pair<int, int>> omega_set;
    const int size = 6 + rng.next_below(11);
    while (static_cast<int>(omega_set.size()) < size)
      omega_set.insert({rng.next_below(n), rng.next_below(n)});
    std::vector<PhasePoint> omega;
    RMatrix sigma = RMatrix::Zero(n, n);
    const bool scaled = instances % 2 == 0;
    const double level = 0.25 + rng.next_unit();
    for (const auto& [k, l] : omega_set) {
      omega.push_back({k, l});
      sigma(k, l) = scaled ? level : level * (0.2 + rng.next_unit());
    }
    const LocOp op = localization_operator(sigma, g);
    const SpectralDecomposition d = spectral_decomposition(op);
    for (int j = 0; j < n; ++j) {
      const ConcentrationResult r = concentration(op, d, j, omega);
      c.expect(r.lhs >= r.bound - 1e-10, "concentration inequality");
      if (scaled) {
        c.expect(r.symbol_is_scaled_indicator, "scaled indicator detected");
        c.expect(std::abs(r.lhs - r.bound) < 1e-10, "equality for scaled indicator");
      }
    }
  }
  std::cout << "  concentration over 20 symbol/window instances, all eigenpairs\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_8() {
  Checker c;
  Rng rng(108);
  const int n = 8;
  const Window g = gaussian_window(n);

  for (int rep = 0; rep < 30; ++rep) {
    const RMatrix sigma = random_symbol(rng, n);
    const Signal f{random_signal(rng, n)};
    const PointwiseEstimate pe = pointwise_estimate_check(sigma, g, f);
    c.expect(pe.max_violation <= 1e-10 * std::max(pe.scale, 1.0), "pointwise majorant");
  }

  const Lattice lat = Lattice::separable(n, 2, 2);
  for (int rep = 0; rep < 30; ++rep) {
    CMatrix m(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) m(k, l) = Complex(rng.next_gauss(), rng.next_gauss());
    const TFMatrix F(std::move(m));
    NormSpec spec;
    spec.p = 1.0 + rng.next_below(2);
    spec.q = (rng.next_below(2) == 0) ? 2.0 : std::numeric_limits<double>::infinity();
    spec.m = (rep % 2 == 0) ? Weight::constant() : Weight::polynomial(1.0);
    const SamplingCheck sc = sampling_check(F, lat, 2, spec);
    c.expect(sc.passes, "sampling inequality");
  }

  std::cout << "  30 pointwise-majorant and 30 sampling instances, zero violations required\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

bool criterion_9() {
  Checker c;
  const char* bin = std::getenv("TFL_BIN");
  if (bin == nullptr) {
    std::cout << "  TFL_BIN not set; cannot drive the CLI\n";
    return false;
  }
  const fs::path dir =
      fs::temp_directory_path() / ("tfl_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto file = [&](const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  };
  const auto run = [&](const std::string& args) {
    const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  // Determinism: byte-identical reruns.
  const std::string cfg = file("eq.json", R"({
    "n": 8,
    "window": {"kind": "gaussian"},
    "lattice": {"kind": "separable", "a": 2, "b": 2},
    "symbol": {"kind": "fundamental-cell"},
    "norm": {"p": 2},
    "ensemble": {"count": 32, "seed": 271828},
    "norm_a": "modulation",
    "norm_b": "localization"
  })");
  c.expect(run("equivalence --config " + cfg + " --out " + (dir / "r1").string()) == 0, "run 1");
  c.expect(run("equivalence --config " + cfg + " --out " + (dir / "r2").string()) == 0, "run 2");
  c.expect(read_text_file((dir / "r1/equivalence.json").string()) ==
               read_text_file((dir / "r2/equivalence.json").string()),
           "byte-identical equivalence.json");

  const std::string stft_sig = file("sig.json", signal_to_json(Signal::zeros(8)));
  const std::string stft_cfg = file("st.json", R"({
    "n": 8, "window": {"kind": "gaussian"}, "input": ")" + stft_sig + R"("})");
  c.expect(run("stft --config " + stft_cfg + " --out " + (dir / "s1").string()) == 0, "stft run 1");
  c.expect(run("stft --config " + stft_cfg + " --out " + (dir / "s2").string()) == 0, "stft run 2");
  c.expect(read_text_file((dir / "s1/stft.json").string()) ==
               read_text_file((dir / "s2/stft.json").string()),
           "byte-identical stft.json");

  // Exit-code matrix.
  const std::string frame_good = file("fc0.json", R"({
    "n": 6, "window": {"kind": "gaussian"}, "lattice": {"kind": "full"}})");
  c.expect(run("frame-check --config " + frame_good + " --out " + (dir / "m0").string()) == 0,
           "exit 0: frame");
  const std::string frame_neg = file("fc1.json", R"({
    "n": 6, "window": {"kind": "gaussian"}, "lattice": {"kind": "trivial"}})");
  c.expect(run("frame-check --config " + frame_neg + " --out " + (dir / "m1").string()) == 1,
           "exit 1: not a frame");
  const std::string bad_key = file("fc2.json", R"({
    "n": 6, "window": {"kind": "gaussian"}, "lattice": {"kind": "full"}, "oops": 1})");
  c.expect(run("frame-check --config " + bad_key + " --out " + (dir / "m2").string()) == 2,
           "exit 2: unknown key");
  const std::string bad_json = file("fc3.json", "{");
  c.expect(run("frame-check --config " + bad_json + " --out " + (dir / "m3").string()) == 2,
           "exit 2: malformed config");
  const std::string dim_sig = file("dim.json", signal_to_json(Signal::zeros(4)));
  const std::string dim_cfg = file("fc4.json", R"({
    "n": 8, "window": {"kind": "gaussian"}, "input": ")" + dim_sig + R"("})");
  c.expect(run("stft --config " + dim_cfg + " --out " + (dir / "m4").string()) == 3,
           "exit 3: dimension mismatch");
  const std::string part_neg = file("fc5.json", R"({
    "n": 6, "lattice": {"kind": "separable", "a": 2, "b": 2},
    "symbol": {"kind": "indicator-box", "k0": 0, "l0": 0, "w": 0, "h": 0}})");
  c.expect(run("partition-check --config " + part_neg + " --out " + (dir / "m5").string()) == 1,
           "exit 1: partition failure");

  fs::remove_all(dir);
  std::cout << "  CLI determinism and exit-code matrix (" << c.checks << " checks)\n";
  if (!c.ok) std::cout << "  first failure: " << c.first_failure << "\n";
  return c.ok;
}

const std::map<int, std::pair<std::string, std::function<bool()>>> kCriteria = {
    {1, {"exact-identity suite (unitarity, commutation, Moyal, adjointness, intertwining)", criterion_1}},
    {2, {"spectral suite (hermitian PSD, reconstruction, eigenvalue bound, shift invariance)", criterion_2}},
    {3, {"duality suite (Janssen, Wexler-Raz, Ron-Shen, adjoint lattice laws)", criterion_3}},
    {4, {"frame-criteria agreement over randomized instances", criterion_4}},
    {5, {"constructive multi-window frame sweep over Z_8^2", criterion_5}},
    {6, {"empirical norm equivalence with regression fixture", criterion_6}},
    {7, {"eigenfunction concentration inequality and equality cases", criterion_7}},
    {8, {"pointwise majorant and sampling inequality", criterion_8}},
    {9, {"CLI determinism and exit-code contract", criterion_9}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& [num, entry] : kCriteria) selected.push_back(num);

  bool all_ok = true;
  for (int num : selected) {
    const auto it = kCriteria.find(num);
    if (it == kCriteria.end()) {
      std::cout << "[FAIL] criterion " << num << ": unknown criterion\n";
      all_ok = false;
      continue;
    }
    const bool ok = it->second.second();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << it->second.first
              << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
