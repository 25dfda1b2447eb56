#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "landau/sphere.hpp"

using namespace landau;

namespace {
constexpr double kPi = 3.14159265358979323846;

SphereField mode_field_2d(int k, double eps, int n) {
  std::vector<double> lv(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) lv[static_cast<size_t>(t)] = eps * std::cos(k * 2.0 * kPi * t / n);
  return make_circle_field(lv, k % 2 == 0);
}
}  // namespace

TEST_CASE("gauss_legendre integrates high-degree polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  REQUIRE(x.size() == 8);
  double s = 0.0, s14 = 0.0;
  for (size_t k = 0; k < 8; ++k) {
    s += w[k];
    s14 += w[k] * std::pow(x[k], 14);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));  // int x^14 on [-1,1]
}

TEST_CASE("quadrature weights sum to the sphere area") {
  std::mt19937_64 rng(3);
  const SphereField c = random_circle_field(128, 6, 0.3, false, rng);
  double s = 0.0;
  for (double w : evaluate(c).weight) s += w;
  CHECK(s == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  const SphereField f = random_sphere_field(6, 0.3, false, rng);
  s = 0.0;
  for (double w : evaluate(f).weight) s += w;
  CHECK(s == doctest::Approx(4.0 * kPi).epsilon(1e-10));
}

TEST_CASE("linearized ratio pins at d=2: modes 1 and 2 give 1 and 4") {
  // for log phi = eps cos(k theta), Gamma2/Gamma -> k^2 as eps -> 0
  CHECK(ratio(mode_field_2d(1, 1e-5, 512)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(ratio(mode_field_2d(2, 1e-5, 512)) == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("linearized ratio pin at d=3: degree 1 gives 2") {
  std::vector<std::complex<double>> coeff(4, 0.0);
  coeff[2] = 1e-5;  // Y_1^0
  const SphereField phi = make_sphere_field(1, coeff, false);
  CHECK(ratio(phi) == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("Gamma2 inequalities hold on random batteries") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const SphereField c = random_circle_field(512, 8, 0.5, false, rng);
    CHECK(check_inequality(c, false).pass);
    const SphereField ca = random_circle_field(512, 8, 0.5, true, rng);
    CHECK(check_inequality(ca, true).pass);
    const SphereField s = random_sphere_field(6, 0.5, false, rng);
    CHECK(check_inequality(s, false).pass);
    const SphereField sa = random_sphere_field(6, 0.5, true, rng);
    CHECK(check_inequality(sa, true).pass);
  }
}

TEST_CASE("antipodal improves the constant: lambda choice is enforced") {
  std::mt19937_64 rng(13);
  const SphereField sa = random_sphere_field(6, 0.4, true, rng);
  const InequalityVerdict general = check_inequality(sa, false);
  const InequalityVerdict sym = check_inequality(sa, true);
  CHECK(general.lambda == doctest::Approx(2.0));
  CHECK(sym.lambda == doctest::Approx(3.0 + 3.0 - 0.5));  // d+3-1/(d-1) = 5.5
  CHECK(sym.margin <= general.margin + 1e-12);
}

TEST_CASE("the ratio is invariant under rotations at d=3") {
  std::mt19937_64 rng(17);
  const SphereField phi = random_sphere_field(4, 0.4, false, rng);
  const double r0 = ratio(phi);
  for (int axis = 0; axis < 3; ++axis) {
    const SphereField rot = rotate(phi, axis, 0.7 + axis);
    CHECK(ratio(rot) == doctest::Approx(r0).epsilon(1e-9));
  }
}
