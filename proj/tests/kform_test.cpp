#include "doctest.h"

#include <algorithm>

#include "hyperham/errors.hpp"
#include "hyperham/hyperkahler.hpp"
#include "hyperham/kform.hpp"
#include "hyperham/random.hpp"

#include "test_util.hpp"

using namespace hyperham;
using hyperham::testing::basis;

namespace {

// Brute-force wedge used as an oracle: concatenate index tuples and
// bubble-sort with sign, no merge tricks.
KForm naive_wedge(const KForm& a, const KForm& b) {
  KForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      KForm::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      int sign = 1;
      bool repeated = false;
      for (std::size_t i = 0; i + 1 < idx.size() && !repeated; ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
          if (idx[j] == idx[j + 1]) { repeated = true; break; }
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            sign = -sign;
          }
        }
      if (repeated || (!idx.empty() && std::adjacent_find(idx.begin(), idx.end()) != idx.end()))
        continue;
      out.add_term(std::move(idx), sign * ca * cb);
    }
  return out;
}

KForm random_form(Rng& rng, std::size_t dim, std::size_t degree, std::size_t terms) {
  KForm f(dim, degree);
  for (std::size_t t = 0; t < terms; ++t) {
    KForm::Index idx;
    while (idx.size() < degree) {
      const std::size_t v = rng.index(dim);
      if (std::find(idx.begin(), idx.end(), v) == idx.end()) idx.push_back(v);
    }
    f.add_term(std::move(idx), rng.uniform(-1.0, 1.0));
  }
  return f;
}

double max_coeff_diff(const KForm& a, const KForm& b) {
  double worst = 0.0;
  for (const auto& [idx, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(idx)));
  for (const auto& [idx, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(idx)));
  return worst;
}

}  // namespace

TEST_CASE("wedge of coordinate forms") {
  const KForm dx0 = KForm::dx(4, 0);
  const KForm dx1 = KForm::dx(4, 1);

  CHECK(wedge(dx0, dx1).coefficient({0, 1}) == 1.0);
  CHECK(wedge(dx1, dx0).coefficient({0, 1}) == -1.0);
  CHECK(wedge(dx0, dx0).is_zero());

  KForm w(4, 2);
  w.add_term({0, 1}, 1.0);
  w.add_term({2, 3}, 1.0);
  const KForm sq = wedge(w, w);
  CHECK(sq == KForm::volume(4) * 2.0);
}

TEST_CASE("wedge errors and vanishing") {
  CHECK_THROWS_AS(wedge(KForm::dx(4, 0), KForm::dx(8, 0)), DimensionMismatch);
  // degree beyond the ambient dimension collapses to zero
  const KForm cube = wedge(KForm::volume(4), KForm::dx(4, 2));
  CHECK(cube.is_zero());
  CHECK(cube.degree() == 5);
}

TEST_CASE("wedge is graded-commutative and associative") {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const std::size_t dim = 4 + 4 * rng.index(2);
    const std::size_t da = 1 + rng.index(2);
    const std::size_t db = 1 + rng.index(2);
    const KForm a = random_form(rng, dim, da, 3);
    const KForm b = random_form(rng, dim, db, 3);
    const KForm c = random_form(rng, dim, 1, 3);

    const double sign = (da * db) % 2 == 0 ? 1.0 : -1.0;
    CHECK(max_coeff_diff(wedge(a, b), wedge(b, a) * sign) <= 1e-13);
    CHECK(max_coeff_diff(wedge(wedge(a, b), c), wedge(a, wedge(b, c))) <= 1e-13);
  }
}

TEST_CASE("wedge agrees with the brute-force expansion") {
  Rng rng(33);
  for (int k = 0; k < 30; ++k) {
    const std::size_t dim = 8;
    const KForm a = random_form(rng, dim, 1 + rng.index(3), 4);
    const KForm b = random_form(rng, dim, 1 + rng.index(3), 4);
    CHECK(max_coeff_diff(wedge(a, b), naive_wedge(a, b)) <= 1e-13);
  }
}

TEST_CASE("wedge powers") {
  const HyperKahlerStructure s8(2);
  const KForm w1 = s8.symplectic_form(1);  // (01) + (23) + (45) + (67)

  CHECK(wedge_power(w1, 0) == KForm::scalar(8, 1.0));
  CHECK_THROWS_AS(wedge_power(KForm::dx(4, 0), 2), OddDegreeBase);

  const KForm sq = wedge_power(w1, 2);
  // every product of two distinct coordinate planes appears twice
  CHECK(sq.coefficient({0, 1, 2, 3}) == 2.0);
  CHECK(sq.coefficient({0, 1, 4, 5}) == 2.0);
  CHECK(sq.coefficient({0, 1, 6, 7}) == 2.0);
  CHECK(sq.coefficient({2, 3, 4, 5}) == 2.0);
  CHECK(sq.coefficient({2, 3, 6, 7}) == 2.0);
  CHECK(sq.coefficient({4, 5, 6, 7}) == 2.0);
  CHECK(sq.terms().size() == 6);
  CHECK(naive_wedge(w1, w1) == sq);

  CHECK(wedge_power(w1, 4) == KForm::volume(8) * 24.0);
}

TEST_CASE("interior product basics") {
  const KForm w01 = wedge(KForm::dx(4, 0), KForm::dx(4, 1));
  CHECK(interior_product(basis(4, 0), w01) == KForm::dx(4, 1));
  CHECK(interior_product(basis(4, 1), w01) == KForm::dx(4, 0) * -1.0);

  const KForm omega = KForm::volume(4);
  KForm expected(4, 3);
  expected.add_term({0, 2, 3}, -1.0);
  CHECK(interior_product(basis(4, 1), omega) == expected);

  CHECK_THROWS_AS(interior_product(Vec(3, 0.0), w01), DimensionMismatch);
  CHECK_THROWS_AS(interior_product(basis(4, 0), KForm::scalar(4, 2.0)), DegreeZero);
}

TEST_CASE("interior product satisfies the graded Leibniz rule") {
  Rng rng(55);
  for (int k = 0; k < 30; ++k) {
    const std::size_t dim = 8;
    const std::size_t da = 1 + rng.index(2);
    const KForm a = random_form(rng, dim, da, 3);
    const KForm b = random_form(rng, dim, 1 + rng.index(2), 3);
    const Vec x = random_point(rng, dim);

    const KForm lhs = interior_product(x, wedge(a, b));
    const double sign = da % 2 == 0 ? 1.0 : -1.0;
    const KForm rhs = wedge(interior_product(x, a), b) + wedge(a, interior_product(x, b)) * sign;
    CHECK(max_coeff_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("solve_contraction inverts the volume contraction") {
  const KForm omega = KForm::volume(4);

  KForm rho(4, 3);
  rho.add_term({1, 2, 3}, 1.0);
  CHECK(solve_contraction(omega, rho) == basis(4, 0));

  KForm rho2(4, 3);
  rho2.add_term({0, 2, 3}, 1.0);
  Vec expected(4, 0.0);
  expected[1] = -1.0;
  CHECK(solve_contraction(omega, rho2) == expected);

  CHECK(solve_contraction(omega, KForm(4, 3)) == Vec(4, 0.0));

  CHECK_THROWS_AS(solve_contraction(omega, KForm(4, 2)), DegreeMismatch);
  CHECK_THROWS_AS(solve_contraction(KForm(4, 3), KForm(4, 3)), DegreeMismatch);

  SUBCASE("round trip is exact") {
    Rng rng(8);
    for (std::size_t dim : {4, 8}) {
      const KForm vol = KForm::volume(dim);
      for (int k = 0; k < 25; ++k) {
        const Vec x = random_point(rng, dim);
        CHECK(solve_contraction(vol, interior_product(x, vol)) == x);
      }
    }
  }
}

TEST_CASE("contraction of symplectic powers: X _| w^2n = 2n (X _| w) ^ w^(2n-1)") {
  Rng rng(13);
  for (std::size_t n : {1, 2}) {
    const HyperKahlerStructure s(n);
    for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
      const KForm w = s.symplectic_form(alpha);
      const Vec x = random_point(rng, s.dim());
      const KForm lhs = interior_product(x, wedge_power(w, 2 * n));
      const KForm rhs =
          wedge(interior_product(x, w), wedge_power(w, 2 * n - 1)) * (2.0 * double(n));
      CHECK(max_coeff_diff(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("canonical sparse form") {
  KForm f(4, 2);
  f.add_term({1, 0}, 2.0);  // unsorted: picks up a sign
  CHECK(f.coefficient({0, 1}) == -2.0);

  f.add_term({0, 1}, 2.0);  // cancels exactly
  CHECK(f.is_zero());

  f.add_term({2, 2}, 5.0);  // repeated index vanishes
  CHECK(f.is_zero());

  f.add_term({0, 1}, 1e-15);  // below the pruning threshold
  CHECK(f.is_zero());

  CHECK_THROWS_AS(f.add_term({0, 1, 2}, 1.0), DegreeMismatch);
  CHECK_THROWS_AS(f.add_term({0, 7}, 1.0), Error);
}
