#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "landau/errors.hpp"
#include "landau/grid.hpp"

using namespace landau;

TEST_CASE("make_grid validates parameters") {
  CHECK_THROWS_AS(make_grid(1, 6.0, 32), ParameterError);
  CHECK_THROWS_AS(make_grid(4, 6.0, 32), ParameterError);
  CHECK_THROWS_AS(make_grid(2, -1.0, 32), ParameterError);
  CHECK_THROWS_AS(make_grid(2, 6.0, 6), ParameterError);
  CHECK_THROWS_AS(make_grid(2, 6.0, 33), ParameterError);
}

TEST_CASE("midpoint nodes are symmetric and avoid the origin") {
  const VelocityGrid g = make_grid(2, 6.0, 32);
  CHECK(g.spacing == doctest::Approx(12.0 / 32).epsilon(1e-15));
  for (int m = 0; m < g.points_per_axis; ++m) {
    CHECK(g.nodes[m] == doctest::Approx(-g.nodes[g.points_per_axis - 1 - m]).epsilon(1e-14));
    CHECK(std::abs(g.nodes[m]) > 0.1 * g.spacing);
  }
}

TEST_CASE("gradient is exact on quadratics, boundary layers included") {
  const VelocityGrid g = make_grid(2, 3.0, 16);
  GridField f = make_field(g);
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    const Vec v = g.node(idx);
    f.values[static_cast<size_t>(idx)] =
        1.5 + 2.0 * v[0] - 0.5 * v[1] + 0.25 * v[0] * v[0] + 0.75 * v[1] * v[1] - v[0] * v[1];
  }
  const GridVectorField G = gradient(f);
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    const Vec v = g.node(idx);
    const size_t m = static_cast<size_t>(idx);
    CHECK(G.comp[0][m] == doctest::Approx(2.0 + 0.5 * v[0] - v[1]).epsilon(1e-12));
    CHECK(G.comp[1][m] == doctest::Approx(-0.5 + 1.5 * v[1] - v[0]).epsilon(1e-12));
  }
}

TEST_CASE("divergence is the exact negative adjoint of gradient") {
  for (int d : {2, 3}) {
    const VelocityGrid g = make_grid(d, 5.0, d == 2 ? 24 : 12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    GridField a = make_field(g);
    GridVectorField F = make_vector_field(g);
    for (auto& x : a.values) x = U(rng);
    for (int c = 0; c < d; ++c)
      for (auto& x : F.comp[c]) x = U(rng);
    const double lhs = inner(a, divergence(F));
    const double rhs = -inner(gradient(a), F);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("integrate uses midpoint quadrature") {
  const VelocityGrid g = make_grid(3, 2.0, 8);
  CHECK(integrate(make_field(g, 1.0)) == doctest::Approx(64.0).epsilon(1e-13));
  GridField f = make_field(g);
  for (std::int64_t idx = 0; idx < g.size(); ++idx) f.values[static_cast<size_t>(idx)] = g.node(idx)[0];
  CHECK(integrate(f) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("log_field clamps below the floor and counts nodes") {
  const VelocityGrid g = make_grid(2, 1.0, 8);
  GridField f = make_field(g, 2.0);
  f.values[3] = 1e-40;
  f.values[17] = 0.0;
  const LogFieldResult r = log_field(f, 1e-30);
  CHECK(r.clamped == 2);
  CHECK(r.field.values[0] == doctest::Approx(std::log(2.0)));
  CHECK(r.field.values[3] == doctest::Approx(std::log(1e-30)));
}

TEST_CASE("flux_weight is the identity on resolved profiles") {
  const VelocityGrid g = make_grid(2, 3.0, 16);
  GridField f = make_field(g);
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    const Vec v = g.node(idx);
    f.values[static_cast<size_t>(idx)] = std::exp(-0.5 * norm2(v, 2));  // max cell jump e^1.06
  }
  const GridField w = flux_weight(f);
  for (size_t m = 0; m < f.values.size(); ++m)
    CHECK(w.values[m] == doctest::Approx(f.values[m]).epsilon(1e-15));
}

TEST_CASE("flux_weight caps deposits into under-resolved nodes") {
  const VelocityGrid g = make_grid(2, 3.0, 16);
  GridField f = make_field(g, 1.0);
  const std::int64_t hole = 8 * 16 + 8;
  f.values[static_cast<size_t>(hole)] = 1e-20;
  const GridField w = flux_weight(f);
  for (size_t m = 0; m < f.values.size(); ++m) {
    CHECK(w.values[m] <= f.values[m] * (1.0 + 1e-15));
    CHECK(w.values[m] > 0.0);
  }
  // neighbors of the hole are eroded to kFluxJump times the hole density
  CHECK(w.values[static_cast<size_t>(hole + 1)] ==
        doctest::Approx(kFluxJump * 1e-20).epsilon(1e-14));
  CHECK(w.values[static_cast<size_t>(hole + 16)] ==
        doctest::Approx(kFluxJump * 1e-20).epsilon(1e-14));
  // nodes outside the stencil footprint keep their value
  CHECK(w.values[static_cast<size_t>(hole + 3)] == doctest::Approx(1.0));
}

TEST_CASE("apply_d1_transpose matches the dense transpose") {
  const VelocityGrid g = make_grid(2, 2.0, 10);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> x(static_cast<size_t>(g.size())), y(x.size()), Dx, Dty;
  for (auto& v : x) v = U(rng);
  for (auto& v : y) v = U(rng);
  for (int axis = 0; axis < 2; ++axis) {
    apply_d1(g, axis, x, Dx);
    apply_d1_transpose(g, axis, y, Dty);
    double a = 0.0, b = 0.0;
    for (size_t m = 0; m < x.size(); ++m) {
      a += y[m] * Dx[m];
      b += Dty[m] * x[m];
    }
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}
