#include "hyperham/random.hpp"

#include <cmath>

namespace hyperham {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(salt)) + index);
}

Vec random_point(Rng& rng, std::size_t dim, double lo, double hi) {
  Vec p(dim);
  for (double& v : p) v = rng.uniform(lo, hi);
  return p;
}

Quaternion random_unit_quaternion(Rng& rng) {
  // Shoemake's method: uniform on S^3 from three uniforms.
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double u3 = rng.uniform();
  const double two_pi = 2.0 * 3.14159265358979323846;
  return {std::sqrt(1.0 - u1) * std::sin(two_pi * u2),
          std::sqrt(1.0 - u1) * std::cos(two_pi * u2),
          std::sqrt(u1) * std::sin(two_pi * u3),
          std::sqrt(u1) * std::cos(two_pi * u3)};
}

Quaternion random_unit_imaginary(Rng& rng) {
  while (true) {
    Quaternion q{0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double n = q.norm();
    if (n > 0.1 && n <= 1.0) return q * (1.0 / n);
  }
}

Matrix random_rotation3(Rng& rng) {
  const Quaternion q = random_unit_quaternion(rng);
  const double w = q.t, x = q.x, y = q.y, z = q.z;
  Matrix r(3, 3);
  r(0, 0) = 1.0 - 2.0 * (y * y + z * z);
  r(0, 1) = 2.0 * (x * y - z * w);
  r(0, 2) = 2.0 * (x * z + y * w);
  r(1, 0) = 2.0 * (x * y + z * w);
  r(1, 1) = 1.0 - 2.0 * (x * x + z * z);
  r(1, 2) = 2.0 * (y * z - x * w);
  r(2, 0) = 2.0 * (x * z - y * w);
  r(2, 1) = 2.0 * (y * z + x * w);
  r(2, 2) = 1.0 - 2.0 * (x * x + y * y);
  return r;
}

ScalarField random_polynomial(Rng& rng, std::size_t dim, unsigned max_total_degree,
                              std::size_t term_count) {
  ScalarField f(dim);
  for (std::size_t t = 0; t < term_count; ++t) {
    std::vector<unsigned> exps(dim, 0);
    const unsigned degree = static_cast<unsigned>(rng.index(max_total_degree + 1));
    for (unsigned k = 0; k < degree; ++k) exps[rng.index(dim)] += 1;
    f.add_term(std::move(exps), rng.uniform(-1.0, 1.0));
  }
  return f;
}

HamiltonianField random_hamiltonian(Rng& rng, std::size_t dim, unsigned max_total_degree,
                                    std::size_t terms_per_component) {
  ScalarField h1 = random_polynomial(rng, dim, max_total_degree, terms_per_component);
  ScalarField h2 = random_polynomial(rng, dim, max_total_degree, terms_per_component);
  ScalarField h3 = random_polynomial(rng, dim, max_total_degree, terms_per_component);
  return {std::move(h1), std::move(h2), std::move(h3)};
}

}  // namespace hyperham
