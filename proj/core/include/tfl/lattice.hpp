#pragma once

#include <vector>

#include "tfl/types.hpp"

namespace tfl {

// A subgroup of Z_N x Z_N with its element list in sorted order, generators,
// and volume s(Lambda) = N^2 / |Lambda|. Immutable after construction.
class Lattice {
 public:
  // Lambda = {(a k mod N, b l mod N)}; requires a | N and b | N.
  static Lattice separable(int n, int a, int b);

  // Subgroup generated by the given phase points (closure under addition mod N).
  static Lattice from_generators(int n, std::vector<PhasePoint> generators);

  // Convenience: the full phase space Z_N x Z_N.
  static Lattice full(int n) { return separable(n, 1, 1); }

  // Convenience: the trivial subgroup {(0,0)}.
  static Lattice trivial(int n) { return from_generators(n, {PhasePoint{0, 0}}); }

  int ambient_dim() const { return n_; }
  const std::vector<PhasePoint>& generators() const { return generators_; }
  const std::vector<PhasePoint>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  // s(Lambda) = N^2 / |Lambda|; always an integer by Lagrange's theorem.
  long long volume() const { return volume_; }

  bool contains(PhasePoint z) const { return index_[packed_index(reduce(z.k, z.l, n_), n_)] >= 0; }

  // Position of z in elements(), or -1 when absent.
  int index_of(PhasePoint z) const { return index_[packed_index(reduce(z.k, z.l, n_), n_)]; }

  // Lattices are equal when they are the same subgroup of the same phase space.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  Lattice(int n, std::vector<PhasePoint> generators, std::vector<PhasePoint> elements);

  int n_ = 0;
  std::vector<PhasePoint> generators_;
  std::vector<PhasePoint> elements_;
  std::vector<int> index_;
  long long volume_ = 0;
};

// Adjoint lattice: all mu whose time-frequency shift commutes with pi(lambda)
// for every lambda in Lambda, i.e. l_lam * k_mu - l_mu * k_lam == 0 mod N for
// all generators. Satisfies |Lambda| * |adjoint| == N^2 and involutivity.
Lattice adjoint_lattice(const Lattice& lattice);

// A fundamental domain Q of Lambda together with the tiling it induces:
// every phase point z decomposes uniquely as z = q + lambda with q in Q,
// lambda in Lambda; owner(z) returns that lambda. Q is built greedily, taking
// the lexicographically smallest unassigned point as the next representative.
// For separable lattices this yields Q = {0..a-1} x {0..b-1}.
class CellMap {
 public:
  explicit CellMap(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<PhasePoint>& cell_representatives() const { return reps_; }
  int cell_size() const { return static_cast<int>(reps_.size()); }

  PhasePoint owner(PhasePoint z) const;
  int owner_index(PhasePoint z) const;

 private:
  Lattice lattice_;
  std::vector<PhasePoint> reps_;
  std::vector<int> owner_;  // packed z -> index into lattice_.elements()
};

inline CellMap fundamental_domain(const Lattice& lattice) { return CellMap(lattice); }

}  // namespace tfl
