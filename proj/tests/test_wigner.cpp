#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hysturm/wigner.hpp"

using hysturm::wigner3j;
using hysturm::wigner6j;

TEST_CASE("wigner3j fixed values") {
  CHECK(wigner3j(0, 0, 0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wigner3j(1, 1, 0, 0, 0, 0) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  // independent evaluation of the Racah sum gives sqrt(2/15)
  CHECK(wigner3j(1, 1, 2, 0, 0, 0) ==
        doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-14));
  // half-integer stretched case: (1/2 1/2 1; 1/2 1/2 -1) = -1/sqrt(3)
  CHECK(wigner3j(0.5, 0.5, 1, 0.5, 0.5, -1) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(wigner3j(2, 1, 1, 2, -1, -1) ==
        doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("wigner3j selection rules return zero") {
  CHECK(wigner3j(1, 1, 3, 0, 0, 0) == 0.0);      // triangle violated
  CHECK(wigner3j(1, 1, 1, 1, 1, 1) == 0.0);      // m-sum nonzero
  CHECK(wigner3j(2, 1, 1, 2, 0, -2) == 0.0);  // |m3| > j3
  CHECK_THROWS_AS(wigner3j(0.3, 0, 0.3, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(wigner3j(1, 1, 2, 0.5, -0.5, 0), std::invalid_argument);
}

TEST_CASE("wigner6j fixed values") {
  CHECK(wigner6j(0, 0, 0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wigner6j(1, 1, 0, 1, 1, 1) ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(wigner6j(1, 1, 1, 1, 1, 1) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(wigner6j(1, 2, 3, 4, 5, 6) ==
        doctest::Approx(0.01762952951159817).epsilon(1e-12));
  CHECK(wigner6j(1, 1, 1, 1, 1, 3) == 0.0);  // (1,1,3) triad open
}

TEST_CASE("wigner3j permutation symmetries") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> two_j(0, 20);
  int tested = 0;
  while (tested < 200) {
    const double j1 = two_j(rng) / 2.0, j2 = two_j(rng) / 2.0,
                 j3 = two_j(rng) / 2.0;
    std::uniform_int_distribution<int> pick_m1(0, int(2 * j1)),
        pick_m2(0, int(2 * j2));
    const double m1 = -j1 + pick_m1(rng);
    const double m2 = -j2 + pick_m2(rng);
    const double m3 = -m1 - m2;
    if (std::abs(m3) > j3) continue;
    if (std::abs(std::remainder(j3 - m3, 1.0)) > 1e-9) continue;
    ++tested;
    const double v = wigner3j(j1, j2, j3, m1, m2, m3);
    // even permutation
    CHECK(wigner3j(j2, j3, j1, m2, m3, m1) == doctest::Approx(v).epsilon(1e-13));
    // odd permutation picks up (-1)^(j1+j2+j3)
    const double sign = (std::lround(j1 + j2 + j3) % 2 == 0) ? 1.0 : -1.0;
    CHECK(wigner3j(j2, j1, j3, m2, m1, m3) ==
          doctest::Approx(sign * v).epsilon(1e-13));
    // m negation
    CHECK(wigner3j(j1, j2, j3, -m1, -m2, -m3) ==
          doctest::Approx(sign * v).epsilon(1e-13));
  }
}

TEST_CASE("wigner3j orthogonality sum") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> two_j(0, 16);
  int tested = 0;
  while (tested < 50) {
    const double j1 = two_j(rng) / 2.0, j2 = two_j(rng) / 2.0;
    std::uniform_int_distribution<int> pick_m1(0, int(2 * j1)),
        pick_m2(0, int(2 * j2));
    const double m1 = -j1 + pick_m1(rng);
    const double m2 = -j2 + pick_m2(rng);
    ++tested;
    double sum = 0.0;
    for (double j3 = std::abs(j1 - j2); j3 <= j1 + j2 + 0.1; j3 += 1.0) {
      const double w = wigner3j(j1, j2, j3, m1, m2, -m1 - m2);
      sum += (2.0 * j3 + 1.0) * w * w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("wigner6j permutation symmetries") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> two_j(0, 16);
  for (int trial = 0; trial < 200; ++trial) {
    const double j1 = two_j(rng) / 2.0, j2 = two_j(rng) / 2.0,
                 j3 = two_j(rng) / 2.0, j4 = two_j(rng) / 2.0,
                 j5 = two_j(rng) / 2.0, j6 = two_j(rng) / 2.0;
    const double v = wigner6j(j1, j2, j3, j4, j5, j6);
    CHECK(wigner6j(j2, j1, j3, j5, j4, j6) == doctest::Approx(v).epsilon(1e-13));
    CHECK(wigner6j(j3, j1, j2, j6, j4, j5) == doctest::Approx(v).epsilon(1e-13));
    CHECK(wigner6j(j4, j5, j3, j1, j2, j6) == doctest::Approx(v).epsilon(1e-13));
  }
}
