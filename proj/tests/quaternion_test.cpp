#include "doctest.h"

#include "hyperham/errors.hpp"
#include "hyperham/quaternion.hpp"
#include "hyperham/random.hpp"

#include "test_util.hpp"

using namespace hyperham;
using hyperham::testing::close;

TEST_CASE("unit multiplication table") {
  const auto i1 = Quaternion::i1(), i2 = Quaternion::i2(), i3 = Quaternion::i3();
  CHECK(i1 * i1 == Quaternion(-1.0));
  CHECK(i2 * i2 == Quaternion(-1.0));
  CHECK(i3 * i3 == Quaternion(-1.0));
  CHECK(i1 * i2 == i3);
  CHECK(i2 * i3 == i1);
  CHECK(i3 * i1 == i2);
  // anticommutation
  CHECK(i2 * i1 == -i3);
  CHECK(i3 * i2 == -i1);
  CHECK(i1 * i3 == -i2);
}

TEST_CASE("conjugate products") {
  const Quaternion a{1.0, 1.0, 0.0, 0.0};  // 1 + i1
  CHECK(a * conj(a) == Quaternion(2.0));

  CHECK(conj(Quaternion{1.0, 2.0, 0.0, 0.0}) == Quaternion{1.0, -2.0, 0.0, 0.0});
  CHECK(conj(Quaternion(5.0)) == Quaternion(5.0));
  CHECK(conj(Quaternion::i3()) == -Quaternion::i3());
}

TEST_CASE("conj is an anti-automorphism") {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Quaternion a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                       rng.uniform(-1, 1)};
    const Quaternion b{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                       rng.uniform(-1, 1)};
    const Quaternion lhs = conj(a * b);
    const Quaternion rhs = conj(b) * conj(a);
    CHECK(abs(lhs - rhs) <= 1e-14 * (1.0 + abs(lhs)));
  }
}

TEST_CASE("imaginary units form a sphere of square roots of -1") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Quaternion u = random_unit_imaginary(rng);
    CHECK(close(u + conj(u), Quaternion(0.0), 1e-15));
    CHECK(close(u * u, Quaternion(-1.0), 1e-14));
  }
}

TEST_CASE("make_triple on the identity gives the standard units") {
  const UnitTriple t = make_triple(Matrix::identity(3));
  CHECK(t.units[0] == Quaternion::i1());
  CHECK(t.units[1] == Quaternion::i2());
  CHECK(t.units[2] == Quaternion::i3());
}

TEST_CASE("make_triple for a quarter turn about axis 3") {
  Matrix c(3, 3);
  c(0, 1) = 1.0;
  c(1, 0) = -1.0;
  c(2, 2) = 1.0;
  const UnitTriple t = make_triple(c);
  CHECK(t.units[0] == Quaternion::i2());
  CHECK(t.units[1] == -Quaternion::i1());
  CHECK(t.units[2] == Quaternion::i3());
  CHECK(t.units[0] * t.units[1] == t.units[2]);
}

TEST_CASE("make_triple rejects bad matrices") {
  Matrix reflect = Matrix::identity(3);
  reflect(2, 2) = -1.0;  // j1 j2 = i3 but j3 = -i3
  CHECK_THROWS_AS(make_triple(reflect), OrientationReversing);

  Matrix skew = Matrix::identity(3);
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(make_triple(skew), NonOrthogonal);

  CHECK_THROWS_AS(make_triple(Matrix(2, 2)), NonOrthogonal);
}

TEST_CASE("a valid triple relabels the whole unit table") {
  Rng rng(99);
  for (int k = 0; k < 50; ++k) {
    const UnitTriple t = make_triple(random_rotation3(rng));
    const auto& j = t.units;
    for (int a = 0; a < 3; ++a) {
      CHECK(close(j[a] * j[a], Quaternion(-1.0), 1e-13));
      for (int b = 0; b < 3; ++b)
        if (a != b) CHECK(close(j[a] * j[b], -(j[b] * j[a]), 1e-13));
    }
    CHECK(close(j[0] * j[1], j[2], 1e-13));
    CHECK(close(j[1] * j[2], j[0], 1e-13));
    CHECK(close(j[2] * j[0], j[1], 1e-13));
  }
}
