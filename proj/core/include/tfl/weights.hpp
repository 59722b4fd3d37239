#pragma once

#include <cstdint>
#include <string>

#include "tfl/types.hpp"

namespace tfl {

// Wrapped (torus) distance of z from the origin:
// |z| = sqrt(min(k, N-k)^2 + min(l, N-l)^2).
double wrapped_abs(PhasePoint z, int n);

enum class WeightKind { Constant, Polynomial, Exponential };

// Weight function on the phase space, evaluated through the wrapped distance
// so that it is even and translation-compatible with lattices.
//   constant(c):       w(z) = c
//   polynomial(s):     w(z) = (1 + |z|)^s
//   exponential(a, b): w(z) = e^{a |z|^b}, 0 < b <= 1 for submultiplicativity
class Weight {
 public:
  static Weight constant(double value = 1.0);
  static Weight polynomial(double s);
  static Weight exponential(double a, double b);

  double operator()(PhasePoint z, int n) const;

  WeightKind kind() const { return kind_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  std::string describe() const;

 private:
  Weight(WeightKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
  WeightKind kind_ = WeightKind::Constant;
  double a_ = 1.0;  // constant value / exponent s / rate a
  double b_ = 1.0;  // exponential power b
};

// Mixed-norm specification (p, q, m, nu): inner exponent p over the time
// index, outer exponent q over the frequency index, weight m, reference
// submultiplicative weight nu. p, q in [1, inf].
struct NormSpec {
  double p = 2.0;
  double q = 2.0;
  Weight m = Weight::constant();
  Weight nu = Weight::constant();
};

inline bool is_inf_exponent(double p) { return std::isinf(p); }

struct WeightCheckResult {
  bool passes = false;
  double worst_ratio = 0.0;  // largest lhs / rhs encountered (>1 means violation)
  PhasePoint z1, z2;         // witness pair
};

// nu(z1 + z2) <= nu(z1) nu(z2); exhaustive over all pairs for N <= 8,
// seeded random pairs for larger N.
WeightCheckResult submultiplicative_check(const Weight& nu, int n, std::uint64_t seed = 0x5eed);

// m(z1 + z2) <= nu(z1) m(z2); same sampling policy.
WeightCheckResult moderate_check(const Weight& m, const Weight& nu, int n,
                                 std::uint64_t seed = 0x5eed);

}  // namespace tfl
