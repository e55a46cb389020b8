#include <doctest.h>

#include <cmath>

#include "hysturm/bspline.hpp"

using hysturm::BsplineBasis;
using hysturm::MeshKind;
using hysturm::MeshSpec;

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

TEST_CASE("basis dimension and boundary values") {
  BsplineBasis basis(7, {MeshKind::Uniform, 40});
  CHECK(basis.size() == 40 + 7 - 3);
  for (int i = 0; i < basis.size(); ++i) {
    CHECK(std::abs(basis.eval(i, 0.0)) < 1e-14);
    CHECK(std::abs(basis.eval(i, kHalfPi)) < 1e-14);
  }
}

TEST_CASE("partition of unity holds after adding back the edge splines") {
  // interior points: the retained splines alone sum to 1 away from the ends
  BsplineBasis basis(6, {MeshKind::Graded, 30});
  for (double a : {0.3, 0.7, 1.0, 1.3}) {
    double sum = 0.0;
    for (int i = 0; i < basis.size(); ++i) sum += basis.eval(i, a);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("derivatives match finite differences") {
  BsplineBasis basis(7, {MeshKind::Graded, 24});
  const double h = 1e-6;
  for (double a : {0.2, 0.77, 1.31}) {
    for (int i = 0; i < basis.size(); i += 5) {
      const double fd = (basis.eval(i, a + h) - basis.eval(i, a - h)) / (2 * h);
      CHECK(basis.eval_deriv(i, a) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("mesh is mirror symmetric with a breakpoint at pi/4") {
  for (auto kind : {MeshKind::Uniform, MeshKind::Graded}) {
    BsplineBasis basis(7, {kind, 36});
    const auto& bp = basis.breakpoints();
    CHECK(bp[18] == doctest::Approx(kHalfPi / 2.0).epsilon(1e-15));
    for (size_t i = 0; i < bp.size(); ++i)
      CHECK(bp[i] == doctest::Approx(kHalfPi - bp[bp.size() - 1 - i]).epsilon(1e-14));
    // reflection maps retained spline i onto retained spline size-1-i
    for (double a : {0.3, 0.9}) {
      for (int i = 0; i < basis.size(); i += 7) {
        CHECK(basis.eval(i, a) ==
              doctest::Approx(basis.eval(basis.size() - 1 - i, kHalfPi - a))
                  .epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("graded mesh concentrates breakpoints near the endpoints") {
  BsplineBasis graded(7, {MeshKind::Graded, 100});
  const auto& bp = graded.breakpoints();
  // first interval much smaller than the middle one
  CHECK((bp[1] - bp[0]) < 0.4 * (bp[51] - bp[50]));
}

TEST_CASE("overlap integrals against a dense Simpson oracle") {
  BsplineBasis basis(5, {MeshKind::Uniform, 16});
  auto quad = basis.quadrature(5 + 6);
  const int nfine = 200001;  // Simpson on a very fine grid
  const double h = kHalfPi / (nfine - 1);
  for (auto [i, j] : {std::pair{0, 0}, {3, 5}, {7, 7}, {10, 12}}) {
    double simpson = 0.0;
    for (int k = 0; k < nfine; ++k) {
      const double x = k * h;
      const double w = (k == 0 || k == nfine - 1) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      simpson += w * basis.eval(i, x) * basis.eval(j, x);
    }
    simpson *= h / 3.0;
    double gl = 0.0;
    for (Eigen::Index k = 0; k < quad.nodes.size(); ++k)
      gl += quad.weights[k] * basis.eval(i, quad.nodes[k]) *
            basis.eval(j, quad.nodes[k]);
    CHECK(gl == doctest::Approx(simpson).epsilon(1e-12).scale(1e-3));
  }
}

TEST_CASE("endpoint-singular integrand B_i^2 / sin^2 against adaptive oracle") {
  BsplineBasis basis(7, {MeshKind::Graded, 40});
  auto quad = basis.quadrature(13);
  const int i = 0;  // the spline hugging alpha = 0
  double gl = 0.0;
  for (Eigen::Index k = 0; k < quad.nodes.size(); ++k) {
    const double s = std::sin(quad.nodes[k]);
    const double b = basis.eval(i, quad.nodes[k]);
    gl += quad.weights[k] * b * b / (s * s);
  }
  // adaptive oracle: recursive Simpson, seeded on the breakpoint segments
  auto f0 = [&](double x) {
    const double v = basis.eval(i, x);
    const double s = std::sin(x);
    return x == 0.0 ? 0.0 : v * v / (s * s);
  };
  std::function<double(double, double, double, double, double, double, int)>
      adapt = [&](double a, double b, double fa, double fm, double fb,
                  double tol, int depth) -> double {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f0(lm), frm = f0(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double split =
        (b - a) / 12.0 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb);
    if (depth > 40 || std::abs(whole - split) < tol)
      return split + (split - whole) / 15.0;
    return adapt(a, m, fa, flm, fm, tol / 2, depth + 1) +
           adapt(m, b, fm, frm, fb, tol / 2, depth + 1);
  };
  double ref = 0.0;
  const auto& bp = basis.breakpoints();
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    const double a = bp[k], b = bp[k + 1];
    ref += adapt(a, b, f0(a), f0(0.5 * (a + b)), f0(b), 1e-10, 0);
  }
  CHECK(gl == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("construction guards") {
  CHECK_THROWS(BsplineBasis(3, {MeshKind::Uniform, 10}));
  CHECK_THROWS(BsplineBasis(7, {MeshKind::Uniform, 6}));   // fewer than order+1
  CHECK_THROWS(BsplineBasis(7, {MeshKind::Uniform, 11}));  // odd interval count
}
