#include "tfl/phase_space.hpp"

#include <cmath>

namespace tfl {

namespace {

Complex unit_phase(double turns) {
  // e^{2 pi i * turns}; turns need not be reduced.
  return std::polar(1.0, kTwoPi * turns);
}

void require_nonzero_window(const Window& phi, const char* where) {
  if (phi.l2norm() == 0.0) throw ZeroWindowError(std::string(where) + ": zero window");
}

}  // namespace

Signal tf_shift(PhasePoint z, const Signal& f) {
  const int n = f.dim();
  if (n == 0) throw DimensionError("tf_shift: empty signal");
  const PhasePoint zc = reduce(z.k, z.l, n);
  CVector out(n);
  for (int t = 0; t < n; ++t) {
    const int src = (t - zc.k + n) % n;
    out[t] = unit_phase(static_cast<double>(zc.l) * t / n) * f.v[src];
  }
  return Signal(std::move(out));
}

CMatrix tf_shift_matrix(PhasePoint z, int n) {
  const PhasePoint zc = reduce(z.k, z.l, n);
  CMatrix m = CMatrix::Zero(n, n);
  for (int t = 0; t < n; ++t) {
    m(t, (t - zc.k + n) % n) = unit_phase(static_cast<double>(zc.l) * t / n);
  }
  return m;
}

Complex commutation_phase(PhasePoint z1, PhasePoint z2, int n) {
  const long long e = static_cast<long long>(z1.l) * z2.k - static_cast<long long>(z2.l) * z1.k;
  return unit_phase(static_cast<double>(e % n) / n);
}

Complex composition_phase(PhasePoint z1, PhasePoint z2, int n) {
  const long long e = -static_cast<long long>(z2.l) * z1.k;
  return unit_phase(static_cast<double>(e % n) / n);
}

TFMatrix stft(const Window& phi, const Signal& f) {
  const int n = f.dim();
  require_same_dim(phi.dim(), n, "stft");
  require_nonzero_window(phi, "stft");

  // g_k(t) = f(t) conj(phi(t-k)); V(k, l) is the order-N Fourier sum of g_k.
  CMatrix v(n, n);
  CMatrix twiddle(n, n);  // twiddle(l, t) = e^{-2 pi i l t / N}
  for (int l = 0; l < n; ++l)
    for (int t = 0; t < n; ++t)
      twiddle(l, t) = unit_phase(-static_cast<double>((static_cast<long long>(l) * t) % n) / n);

  for (int k = 0; k < n; ++k) {
    CVector g(n);
    for (int t = 0; t < n; ++t) g[t] = f.v[t] * std::conj(phi.s.v[(t - k + n) % n]);
    for (int l = 0; l < n; ++l) v(k, l) = twiddle.row(l).transpose().cwiseProduct(g).sum();
  }
  return TFMatrix(std::move(v));
}

Signal stft_adjoint(const Window& phi, const TFMatrix& F) {
  const int n = phi.dim();
  require_same_dim(F.dim(), n, "stft_adjoint");

  // out(t) = sum_k [ sum_l F(k,l) e^{2 pi i l t / N} ] phi(t-k)
  CVector out = CVector::Zero(n);
  CMatrix twiddle(n, n);  // twiddle(t, l) = e^{+2 pi i l t / N}
  for (int t = 0; t < n; ++t)
    for (int l = 0; l < n; ++l)
      twiddle(t, l) = unit_phase(static_cast<double>((static_cast<long long>(l) * t) % n) / n);

  for (int t = 0; t < n; ++t) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      Complex row_sum(0.0, 0.0);
      for (int l = 0; l < n; ++l) row_sum += F.m(k, l) * twiddle(t, l);
      acc += row_sum * phi.s.v[(t - k + n) % n];
    }
    out[t] = acc;
  }
  return Signal(std::move(out));
}

Window gaussian_window(int n) {
  if (n < 2) throw DimensionError("gaussian_window: need n >= 2");
  // Tail term at |j| = J is e^{-pi (J-1)^2 n}; pick J so that it is < 1e-18.
  const int j_max = 1 + static_cast<int>(std::ceil(std::sqrt(42.0 / (kPi * n))));
  CVector v(n);
  for (int t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int j = -j_max; j <= j_max; ++j) {
      const double x = static_cast<double>(t) + static_cast<double>(j) * n;
      acc += std::exp(-kPi * x * x / n);
    }
    v[t] = Complex(acc, 0.0);
  }
  v /= v.norm();
  return Window{Signal(std::move(v)), WindowNorm::UnitL2};
}

Window box_window(int n, int width) {
  if (n < 1) throw DimensionError("box_window: need n >= 1");
  if (width < 1 || width > n) throw DimensionError("box_window: width must be in [1, n]");
  CVector v = CVector::Zero(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(width));
  for (int t = 0; t < width; ++t) v[t] = Complex(amp, 0.0);
  return Window{Signal(std::move(v)), WindowNorm::UnitL2};
}

}  // namespace tfl
