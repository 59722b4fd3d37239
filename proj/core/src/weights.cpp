#include "tfl/weights.hpp"

#include <cmath>

#include "tfl/rng.hpp"

namespace tfl {

double wrapped_abs(PhasePoint z, int n) {
  const PhasePoint zc = reduce(z.k, z.l, n);
  const double dk = std::min(zc.k, n - zc.k);
  const double dl = std::min(zc.l, n - zc.l);
  return std::hypot(dk, dl);
}

Weight Weight::constant(double value) {
  if (!(value > 0.0)) throw Error("Weight::constant: value must be positive");
  return Weight(WeightKind::Constant, value, 0.0);
}

Weight Weight::polynomial(double s) {
  if (s < 0.0) throw Error("Weight::polynomial: exponent must be >= 0");
  return Weight(WeightKind::Polynomial, s, 0.0);
}

Weight Weight::exponential(double a, double b) {
  if (a < 0.0 || b <= 0.0 || b > 1.0)
    throw Error("Weight::exponential: need a >= 0 and 0 < b <= 1");
  return Weight(WeightKind::Exponential, a, b);
}

double Weight::operator()(PhasePoint z, int n) const {
  switch (kind_) {
    case WeightKind::Constant:
      return a_;
    case WeightKind::Polynomial:
      return std::pow(1.0 + wrapped_abs(z, n), a_);
    case WeightKind::Exponential:
      return std::exp(a_ * std::pow(wrapped_abs(z, n), b_));
  }
  return 1.0;
}

std::string Weight::describe() const {
  switch (kind_) {
    case WeightKind::Constant:
      return "constant(" + std::to_string(a_) + ")";
    case WeightKind::Polynomial:
      return "polynomial(" + std::to_string(a_) + ")";
    case WeightKind::Exponential:
      return "exponential(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }
  return "?";
}

namespace {

constexpr double kPairTol = 1.0 + 1e-12;

template <typename Fn>
WeightCheckResult scan_pairs(int n, std::uint64_t seed, Fn&& ratio_of) {
  WeightCheckResult result{true, 0.0, {0, 0}, {0, 0}};
  auto consider = [&](PhasePoint z1, PhasePoint z2) {
    const double r = ratio_of(z1, z2);
    if (r > result.worst_ratio) {
      result.worst_ratio = r;
      result.z1 = z1;
      result.z2 = z2;
    }
  };
  if (n <= 8) {
    for (int k1 = 0; k1 < n; ++k1)
      for (int l1 = 0; l1 < n; ++l1)
        for (int k2 = 0; k2 < n; ++k2)
          for (int l2 = 0; l2 < n; ++l2) consider({k1, l1}, {k2, l2});
  } else {
    Rng rng(seed);
    for (int i = 0; i < 20000; ++i) {
      consider({rng.next_below(n), rng.next_below(n)}, {rng.next_below(n), rng.next_below(n)});
    }
  }
  result.passes = result.worst_ratio <= kPairTol;
  return result;
}

}  // namespace

WeightCheckResult submultiplicative_check(const Weight& nu, int n, std::uint64_t seed) {
  return scan_pairs(n, seed, [&](PhasePoint z1, PhasePoint z2) {
    return nu(add(z1, z2, n), n) / (nu(z1, n) * nu(z2, n));
  });
}

WeightCheckResult moderate_check(const Weight& m, const Weight& nu, int n, std::uint64_t seed) {
  return scan_pairs(n, seed, [&](PhasePoint z1, PhasePoint z2) {
    return m(add(z1, z2, n), n) / (nu(z1, n) * m(z2, n));
  });
}

}  // namespace tfl
