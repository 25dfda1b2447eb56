#ifndef LANDAULAB_EQUILIBRIUM_HPP
#define LANDAULAB_EQUILIBRIUM_HPP

#include <array>

#include "landau/grid.hpp"
#include "landau/mixture.hpp"
#include "landau/vec.hpp"

namespace landau {

/// Conserved macroscopic parameters of one species' Maxwellian.
struct MacroState {
  double n = 1.0;      // number density
  Vec u = vec0();      // bulk velocity
  double theta = 1.0;  // temperature
};

/// mu(v) = n (m/2 pi theta)^{d/2} exp(-m |v-u|^2 / 2 theta) sampled at nodes.
GridField maxwellian(const VelocityGrid& grid, double mass, const MacroState& macro);

/// The Maxwellian vector with the (n_i, u, theta) computed from `state`.
MixtureState equilibrium_of(const MixtureState& state);

/// int f log(f/mu) dv with floored logarithms.
double relative_entropy(const GridField& f, const GridField& mu, double floor = 1e-30);

/// Linear Fokker-Planck operator (1/m) div( f grad log(f/mu) ) built from the
/// adjoint-consistent grid operators; shares discretization with the Landau
/// flow so oracle failures isolate time-integration bugs.
GridField fokker_planck_apply(const GridField& f, const GridField& mu, double mass,
                              double floor = 1e-30);

/// Gaussian described by its mass, mean and covariance.
struct GaussianSpec {
  int dim = 0;
  double mass = 1.0;
  Vec mean = vec0();
  std::array<double, 9> cov{};  // row-major d x d, symmetric positive-definite
};

/// Closed-form solution of the linear Fokker-Planck flow on Gaussian data:
/// mean(t) = u + e^{-t/theta}(mean0 - u),
/// cov(t)  = (theta/m) I + e^{-2t/theta}(cov0 - (theta/m) I).
GaussianSpec gaussian_oracle(const GaussianSpec& spec0, double mass, const MacroState& macro,
                             double t);

/// Sample a general Gaussian on the grid (test oracle support).
GridField sample_gaussian(const VelocityGrid& grid, const GaussianSpec& spec);

/// Mass, mean and covariance of a field by quadrature.
GaussianSpec gaussian_stats(const GridField& f);

}  // namespace landau

#endif
