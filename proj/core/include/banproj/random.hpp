#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "banproj/lp_space.hpp"

namespace banproj {

using Rng = std::mt19937_64;

/// Derives the seed of an independent sub-stream. Used to partition sampling
/// so that results depend only on (seed, stream) and never on worker count.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::vector<double> gaussian_coords(Rng& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> v(n);
  for (double& c : v) c = normal(rng);
  return v;
}

inline PrimalVector random_primal(Rng& rng, std::size_t n, double scale = 1.0) {
  return PrimalVector(gaussian_coords(rng, n, scale));
}

inline DualVector random_dual(Rng& rng, std::size_t n, double scale = 1.0) {
  return DualVector(gaussian_coords(rng, n, scale));
}

/// Uniformly random direction on the unit sphere of the space (p-norm 1).
inline PrimalVector random_unit(Rng& rng, const LpSpace& space) {
  for (;;) {
    PrimalVector v = random_primal(rng, space.n());
    const double n = space.norm(v);
    if (n > 1e-12) return v / n;
  }
}

}  // namespace banproj
