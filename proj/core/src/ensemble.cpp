#include "tfl/ensemble.hpp"

#include <cmath>

#include "tfl/phase_space.hpp"
#include "tfl/rng.hpp"

namespace tfl {

namespace {

Signal make_noise(Rng& rng, int n) {
  CVector v(n);
  for (int t = 0; t < n; ++t) v[t] = Complex(rng.next_gauss(), rng.next_gauss());
  return Signal(std::move(v));
}

// Shifts are swept through a seeded permutation of all N^2 phase points
// (without replacement, cycling), so every atom of this finite family enters
// the ensemble as early as possible.
class TfGaussianSweep {
 public:
  TfGaussianSweep(std::uint64_t seed, int n) : n_(n), order_(static_cast<size_t>(n) * n) {
    for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    Rng rng(Rng::derive(seed, 0x7f6aULL));
    for (size_t i = order_.size() - 1; i > 0; --i) {
      std::swap(order_[i], order_[static_cast<size_t>(rng.next_below(static_cast<int>(i + 1)))]);
    }
  }

  Signal next() {
    const int packed = order_[draw_++ % order_.size()];
    const PhasePoint z{packed / n_, packed % n_};
    return tf_shift(z, gaussian_window(n_).s);
  }

 private:
  int n_;
  size_t draw_ = 0;
  std::vector<int> order_;
};

Signal make_chirp(Rng& rng, int n) {
  const double rate = 2.0 * rng.next_unit();
  const double offset = static_cast<double>(n) * rng.next_unit();
  CVector v(n);
  for (int t = 0; t < n; ++t) {
    const double phase = kPi * rate * t * t / n + kTwoPi * offset * t / n;
    v[t] = std::polar(1.0, phase);
  }
  return Signal(std::move(v));
}

Signal make_spikes(Rng& rng, int n) {
  CVector v = CVector::Zero(n);
  const int spikes = 1 + rng.next_below(3);
  for (int s = 0; s < spikes; ++s) {
    v[rng.next_below(n)] += Complex(rng.next_gauss(), rng.next_gauss());
  }
  if (v.norm() == 0.0) v[0] = Complex(1.0, 0.0);
  return Signal(std::move(v));
}

}  // namespace

std::string EnsembleSpec::describe() const {
  std::string d = "n=" + std::to_string(n) + ";count=" + std::to_string(count) +
                  ";seed=" + std::to_string(seed) + ";mix=";
  for (size_t i = 0; i < mix.size(); ++i) {
    if (i) d += ",";
    d += mix[i];
  }
  return d;
}

std::vector<Signal> make_ensemble(const EnsembleSpec& spec) {
  if (spec.count <= 0) throw EmptyEnsembleError("make_ensemble: count must be positive");
  if (spec.mix.empty()) throw EmptyEnsembleError("make_ensemble: empty generator mix");

  std::vector<Signal> out;
  out.reserve(spec.count);
  TfGaussianSweep sweep(spec.seed, spec.n);
  for (int i = 0; i < spec.count; ++i) {
    Rng rng(Rng::derive(spec.seed, static_cast<std::uint64_t>(i)));
    const std::string& family = spec.mix[i % spec.mix.size()];
    if (family == "noise") {
      out.push_back(make_noise(rng, spec.n));
    } else if (family == "tfgauss") {
      out.push_back(sweep.next());
    } else if (family == "chirp") {
      out.push_back(make_chirp(rng, spec.n));
    } else if (family == "spikes") {
      out.push_back(make_spikes(rng, spec.n));
    } else {
      throw Error("make_ensemble: unknown generator family '" + family + "'");
    }
  }
  return out;
}

}  // namespace tfl
