#pragma once

#include <cstdint>
#include <random>

#include "hyperham/dynamics.hpp"
#include "hyperham/linalg.hpp"
#include "hyperham/polynomial.hpp"
#include "hyperham/quaternion.hpp"

namespace hyperham {

/// Seeded generator with hand-rolled distributions, so that a given
/// seed produces the same stream on every platform and standard
/// library.  Every randomized check in the project reports the seed it
/// ran with; this class is what makes those reports reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

 private:
  std::mt19937_64 gen_;
};

/// Stable per-case seed derivation (splitmix64 of seed, salt, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t index);

Vec random_point(Rng& rng, std::size_t dim, double lo = -1.0, double hi = 1.0);

Quaternion random_unit_quaternion(Rng& rng);
Quaternion random_unit_imaginary(Rng& rng);

/// Uniformly random rotation in SO(3) (via a random unit quaternion).
Matrix random_rotation3(Rng& rng);

/// Random polynomial with the given number of terms, each of total
/// degree <= max_total_degree, coefficients uniform in [-1, 1].
ScalarField random_polynomial(Rng& rng, std::size_t dim, unsigned max_total_degree,
                              std::size_t term_count);

HamiltonianField random_hamiltonian(Rng& rng, std::size_t dim, unsigned max_total_degree,
                                    std::size_t terms_per_component);

}  // namespace hyperham
