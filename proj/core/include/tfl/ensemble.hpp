#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfl/types.hpp"

namespace tfl {

// Seeded signal ensemble. The mix lists generator family names, cycled
// round-robin; supported families:
//   "noise"   complex gaussian white noise
//   "tfgauss" time-frequency shifted periodized Gaussians, shifts swept
//             through a seeded permutation of all N^2 phase points
//   "chirp"   unimodular linear chirps
//   "spikes"  sparse spikes with gaussian amplitudes
// Each signal draws from its own derived stream, so the ensemble is stable
// under reordering or parallel evaluation. The default cycle gives the
// finite tfgauss family two slots, so its full atom sweep finishes early
// (within 160 signals at N = 8) and the ensemble's ratio extremes stabilize.
struct EnsembleSpec {
  int n = 8;
  int count = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> mix = {"noise", "tfgauss", "chirp", "tfgauss", "spikes"};

  std::string describe() const;
};

// Generates spec.count nonzero signals. Throws EmptyEnsembleError when
// count == 0 and Error for an unknown family name.
std::vector<Signal> make_ensemble(const EnsembleSpec& spec);

}  // namespace tfl
