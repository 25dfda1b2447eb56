#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "landau/equilibrium.hpp"
#include "landau/functionals.hpp"
#include "landau/mixture.hpp"
#include "landau/species.hpp"

using namespace landau;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("maxwellian reproduces its macroscopic parameters by quadrature") {
  const VelocityGrid g = make_grid(2, 7.0, 48);
  MacroState mac;
  mac.n = 1.3;
  mac.u = Vec{0.4, -0.2, 0.0};
  mac.theta = 0.8;
  const double m = 2.0;
  const GridField mu = maxwellian(g, m, mac);
  const SpeciesSet sp = make_species_set({m}, {{1.0}}, {{0.0}}, 2);
  const MixtureState st = make_state(sp, g, {mu});
  const Moments mom = moments(st);
  CHECK(mom.n[0] == doctest::Approx(mac.n).epsilon(1e-10));
  CHECK(mom.u[0] == doctest::Approx(mac.u[0]).epsilon(1e-9));
  CHECK(mom.u[1] == doctest::Approx(mac.u[1]).epsilon(1e-9));
  CHECK(mom.theta == doctest::Approx(mac.theta).epsilon(1e-8));
  // E = (m/2) n |u|^2 + (d/2) n theta
  const double Eexact = 0.5 * m * mac.n * (0.4 * 0.4 + 0.2 * 0.2) + mac.n * mac.theta;
  CHECK(mom.E == doctest::Approx(Eexact).epsilon(1e-8));
}

TEST_CASE("entropy and Fisher information of a Maxwellian match closed forms") {
  const double m = 1.5, n = 0.9, theta = 0.7;
  const int d = 2;
  MacroState mac;
  mac.n = n;
  mac.theta = theta;
  double err[2];
  int k = 0;
  for (int N : {48, 96}) {
    const VelocityGrid g = make_grid(2, 7.0, N);
    const GridField mu = maxwellian(g, m, mac);
    const SpeciesSet sp = make_species_set({m}, {{1.0}}, {{0.0}}, 2);
    const MixtureState st = make_state(sp, g, {mu});
    if (N == 48) {
      // H(mu) = n (log(n (m / 2 pi theta)^{d/2}) - d/2); quadrature is spectral
      const double Hexact =
          n * (std::log(n * std::pow(m / (2.0 * kPi * theta), 0.5 * d)) - 0.5 * d);
      CHECK(entropy(st) == doctest::Approx(Hexact).epsilon(1e-8));
    }
    // I(mu) = (d / theta) n (mass-weighted); the gradient stencil makes this
    // O(h^4) accurate, so refinement must cut the error by ~16
    err[k++] = std::abs(fisher(st) / (d * n / theta) - 1.0);
  }
  CHECK(err[0] < 1e-2);
  CHECK(err[1] < err[0] / 4.0);
}

TEST_CASE("equilibrium_of matches the state moments and relative entropy vanishes") {
  const VelocityGrid g = make_grid(2, 6.0, 32);
  const SpeciesSet sp = make_species_set({1.0, 2.0}, {{1, 1}, {1, 1}}, {{0, 0}, {0, 0}}, 2);
  MacroState a, b;
  a.theta = 0.5;
  a.u = Vec{0.5, 0.0, 0.0};
  b.theta = 2.0;
  b.u = Vec{-0.5, 0.0, 0.0};
  const MixtureState st =
      make_state(sp, g, {maxwellian(g, 1.0, a), maxwellian(g, 2.0, b)});
  const MixtureState eq = equilibrium_of(st);
  const Moments m0 = moments(st);
  const Moments m1 = moments(eq);
  // the target moments are matched up to the quadrature truncation of the
  // sampled Maxwellian at N = 32
  CHECK(m1.n[0] == doctest::Approx(m0.n[0]).epsilon(1e-5));
  CHECK(m1.P[0] == doctest::Approx(m0.P[0]).epsilon(1e-5));
  CHECK(m1.E == doctest::Approx(m0.E).epsilon(1e-5));
  CHECK(relative_entropy(st.fields[0], st.fields[0]) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(relative_entropy(st.fields[0], eq.fields[0]) > 0.0);
}

TEST_CASE("gaussian sampling and stats round-trip") {
  const VelocityGrid g = make_grid(2, 7.0, 48);
  GaussianSpec s0;
  s0.dim = 2;
  s0.mass = 1.2;
  s0.mean = Vec{0.3, -0.1, 0.0};
  s0.cov = {0.5, 0.1, 0.0, 0.1, 0.9, 0.0, 0.0, 0.0, 0.0};
  const GridField f = sample_gaussian(g, s0);
  const GaussianSpec s1 = gaussian_stats(f);
  CHECK(s1.mass == doctest::Approx(s0.mass).epsilon(1e-9));
  CHECK(s1.mean[0] == doctest::Approx(s0.mean[0]).epsilon(1e-8));
  CHECK(s1.mean[1] == doctest::Approx(s0.mean[1]).epsilon(1e-8));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(s1.cov[static_cast<size_t>(3 * r + c)] ==
            doctest::Approx(s0.cov[static_cast<size_t>(3 * r + c)]).epsilon(5e-7));
}

TEST_CASE("gaussian oracle endpoints") {
  GaussianSpec s0;
  s0.dim = 2;
  s0.mass = 1.0;
  s0.mean = Vec{1.0, 0.0, 0.0};
  s0.cov = {0.4, 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0};
  MacroState mac;
  mac.theta = 0.9;
  const double m = 2.0;
  const GaussianSpec at0 = gaussian_oracle(s0, m, mac, 0.0);
  CHECK(at0.mean[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at0.cov[0] == doctest::Approx(0.4).epsilon(1e-14));
  const GaussianSpec late = gaussian_oracle(s0, m, mac, 50.0);
  CHECK(late.mean[0] == doctest::Approx(mac.u[0]).epsilon(1e-12));
  CHECK(late.cov[0] == doctest::Approx(mac.theta / m).epsilon(1e-12));
  CHECK(late.cov[4] == doctest::Approx(mac.theta / m).epsilon(1e-12));
}

TEST_CASE("fokker_planck_apply annihilates its own Maxwellian") {
  const VelocityGrid g = make_grid(2, 6.0, 32);
  MacroState mac;
  mac.theta = 1.0;
  const GridField mu = maxwellian(g, 1.0, mac);
  const GridField q = fokker_planck_apply(mu, mu, 1.0);
  double mx = 0.0;
  for (double x : q.values) mx = std::max(mx, std::abs(x));
  CHECK(mx <= 1e-12);
}
