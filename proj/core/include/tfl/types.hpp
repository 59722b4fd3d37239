#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "tfl/errors.hpp"

namespace tfl {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// A point z = (k, l) of the phase space Z_N x Z_N. k is the time shift,
// l the frequency shift. Stored as canonical representatives 0 <= k, l < N;
// construction through reduce() enforces this.
struct PhasePoint {
  int k = 0;
  int l = 0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
  friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;
};

// Canonical representative of (k, l) mod n.
inline PhasePoint reduce(long long k, long long l, int n) {
  long long rk = k % n;
  long long rl = l % n;
  if (rk < 0) rk += n;
  if (rl < 0) rl += n;
  return PhasePoint{static_cast<int>(rk), static_cast<int>(rl)};
}

inline PhasePoint add(PhasePoint a, PhasePoint b, int n) {
  return reduce(static_cast<long long>(a.k) + b.k, static_cast<long long>(a.l) + b.l, n);
}

inline PhasePoint negate(PhasePoint a, int n) {
  return reduce(-static_cast<long long>(a.k), -static_cast<long long>(a.l), n);
}

inline PhasePoint subtract(PhasePoint a, PhasePoint b, int n) {
  return reduce(static_cast<long long>(a.k) - b.k, static_cast<long long>(a.l) - b.l, n);
}

// Packed index of a phase point, row-major in (k, l).
inline int packed_index(PhasePoint z, int n) { return z.k * n + z.l; }

// Complex vector of length N, the finite model of a function in L2.
struct Signal {
  CVector v;

  Signal() = default;
  explicit Signal(CVector values) : v(std::move(values)) {}

  static Signal zeros(int n) { return Signal(CVector::Zero(n)); }

  int dim() const { return static_cast<int>(v.size()); }
  double l2norm() const { return v.norm(); }
};

// <f, g> = sum_t f(t) conj(g(t)), linear in the first slot.
inline Complex inner(const Signal& f, const Signal& g) {
  if (f.dim() != g.dim()) throw DimensionError("inner: signal dimensions differ");
  return g.v.dot(f.v);  // Eigen's dot conjugates its object, i.e. g here
}

enum class WindowNorm { UnitL2, Raw };

// A Signal used as an STFT window, with a normalization tag. Windows tagged
// UnitL2 satisfy | ||w||_2 - 1 | <= 1e-12.
struct Window {
  Signal s;
  WindowNorm tag = WindowNorm::Raw;

  int dim() const { return s.dim(); }
  double l2norm() const { return s.l2norm(); }
};

// Complex N x N array over the phase space, entry (k, l) at row k, column l.
// Houses STFTs V_phi f and (real-valued) symbols.
struct TFMatrix {
  CMatrix m;

  TFMatrix() = default;
  explicit TFMatrix(CMatrix values) : m(std::move(values)) {
    if (m.rows() != m.cols()) throw DimensionError("TFMatrix: array must be square");
  }

  static TFMatrix zeros(int n) { return TFMatrix(CMatrix::Zero(n, n)); }

  int dim() const { return static_cast<int>(m.rows()); }

  Complex& operator()(PhasePoint z) { return m(z.k, z.l); }
  Complex operator()(PhasePoint z) const { return m(z.k, z.l); }
};

// Phase-space inner product <F, G> = sum_{k,l} F(k,l) conj(G(k,l)).
inline Complex phase_space_inner(const TFMatrix& F, const TFMatrix& G) {
  if (F.dim() != G.dim()) throw DimensionError("phase_space_inner: dimensions differ");
  return (F.m.array() * G.m.array().conjugate()).sum();
}

inline void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace tfl
