#include "tfl/lattice.hpp"

#include <algorithm>
#include <string>

namespace tfl {

Lattice::Lattice(int n, std::vector<PhasePoint> generators, std::vector<PhasePoint> elements)
    : n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    index_[packed_index(elements_[i], n_)] = i;
  const long long total = static_cast<long long>(n_) * n_;
  volume_ = total / static_cast<long long>(elements_.size());
}

Lattice Lattice::separable(int n, int a, int b) {
  if (n < 1) throw LatticeError("separable: need n >= 1");
  if (a < 1 || b < 1 || n % a != 0 || n % b != 0)
    throw LatticeError("separable: steps must divide n (got a=" + std::to_string(a) +
                       ", b=" + std::to_string(b) + ", n=" + std::to_string(n) + ")");
  std::vector<PhasePoint> elems;
  elems.reserve(static_cast<size_t>(n / a) * (n / b));
  for (int k = 0; k < n / a; ++k)
    for (int l = 0; l < n / b; ++l) elems.push_back(PhasePoint{a * k, b * l});
  return Lattice(n, {PhasePoint{a, 0}, PhasePoint{0, b}}, std::move(elems));
}

Lattice Lattice::from_generators(int n, std::vector<PhasePoint> generators) {
  if (n < 1) throw LatticeError("from_generators: need n >= 1");
  if (generators.empty()) throw LatticeError("from_generators: need at least one generator");
  for (auto& g : generators) g = reduce(g.k, g.l, n);

  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  std::vector<PhasePoint> elems;
  std::vector<PhasePoint> frontier{PhasePoint{0, 0}};
  seen[0] = true;
  while (!frontier.empty()) {
    const PhasePoint e = frontier.back();
    frontier.pop_back();
    elems.push_back(e);
    for (const PhasePoint& g : generators) {
      const PhasePoint s = add(e, g, n);
      if (!seen[packed_index(s, n)]) {
        seen[packed_index(s, n)] = true;
        frontier.push_back(s);
      }
    }
  }
  return Lattice(n, std::move(generators), std::move(elems));
}

Lattice adjoint_lattice(const Lattice& lattice) {
  const int n = lattice.ambient_dim();
  // commutation_phase(lam, mu) == 1 for all lam is a character condition; it
  // suffices to test the generators, and the test is exact integer arithmetic.
  std::vector<PhasePoint> elems;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      bool commutes = true;
      for (const PhasePoint& g : lattice.generators()) {
        const long long e = static_cast<long long>(g.l) * k - static_cast<long long>(l) * g.k;
        if (e % n != 0) {
          commutes = false;
          break;
        }
      }
      if (commutes) elems.push_back(PhasePoint{k, l});
    }
  }
  std::vector<PhasePoint> gens = elems;  // any element set generates itself
  return Lattice::from_generators(n, std::move(gens));
}

CellMap::CellMap(Lattice lattice) : lattice_(std::move(lattice)) {
  const int n = lattice_.ambient_dim();
  owner_.assign(static_cast<size_t>(n) * n, -1);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const PhasePoint q{k, l};
      if (owner_[packed_index(q, n)] >= 0) continue;
      reps_.push_back(q);
      for (int i = 0; i < lattice_.size(); ++i) {
        const PhasePoint z = add(q, lattice_.elements()[i], n);
        owner_[packed_index(z, n)] = i;
      }
    }
  }
}

PhasePoint CellMap::owner(PhasePoint z) const {
  return lattice_.elements()[static_cast<size_t>(owner_index(z))];
}

int CellMap::owner_index(PhasePoint z) const {
  return owner_[packed_index(reduce(z.k, z.l, lattice_.ambient_dim()), lattice_.ambient_dim())];
}

}  // namespace tfl
