#pragma once
// Seeded sampling with bit-reproducible output across platforms
// (mt19937_64 stream + explicit 53-bit uniforms; no std::distribution).
#include <cstdint>
#include <random>

#include "phasekit/core.hpp"

namespace pk {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) { return a + (b - a) * ((eng() >> 11) * 0x1.0p-53); }
  // Phase point inside the trusted box |q| <= qmax, |p| <= pmax.
  PhasePoint phase_point(int N, double qmax, double pmax) {
    PhasePoint Z;
    for (int k = 0; k < N; ++k) {
      double q = uniform(-qmax, qmax);
      double p = uniform(-pmax, pmax);
      Z.z.emplace_back(q, p);
    }
    return Z;
  }
};

// Default sample box: half the grid's faithful position/momentum ranges.
inline double sample_qmax(const GridSpec& g) { return g.L / 2.0; }
inline double sample_pmax(const GridSpec& g) { return PI * g.hbar * g.n / (4.0 * g.L); }

}  // namespace pk
