#ifndef LANDAULAB_FUNCTIONALS_HPP
#define LANDAULAB_FUNCTIONALS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "landau/geometry.hpp"
#include "landau/mixture.hpp"
#include "landau/vec.hpp"

namespace landau {

struct Moments {
  std::vector<double> n;  // per-species number densities
  Vec P = vec0();         // total momentum
  double E = 0.0;         // total energy
  double rho = 0.0;       // sum m_i n_i
  Vec u = vec0();         // P / rho
  double theta = 0.0;     // (2E - rho|u|^2) / (d sum n_i)
};

Moments moments(const MixtureState& state);

/// Pair rate limiter. Each (v, v*) pair enters the kernels with weight
/// chi = min(1, cap / (alpha r^2 |u|)), which bounds the advective velocity a
/// node can receive by cap times the partner density and hence keeps the
/// vacuum tail (where |grad psi| spans many decades) from dictating the
/// explicit step size. The weight is one wherever pair rates are moderate, so
/// the bulk dynamics is untouched; it is symmetric under (i,v) <-> (j,v*) and
/// nonnegative, so conservation, the H-theorem pairing and the breakdown
/// identity all remain exact. The same weight must be applied in rhs,
/// collision_pair and every dissipation functional.
inline double pair_rate_weight(double alpha_r2_u) {
  constexpr double cap = 300.0;
  return alpha_r2_u <= cap ? 1.0 : cap / alpha_r2_u;
}

/// Boltzmann entropy sum_i int f_i log f_i (floored logs).
double entropy(const MixtureState& state);

/// Mass-weighted Fisher information sum_i (1/m_i) int |grad f_i|^2 / f_i.
double fisher(const MixtureState& state);

/// Nonnegative entropy production D = -dH/dt from the symmetrized pair form.
double entropy_dissipation(const MixtureState& state);

/// dI/dt from the vector-field dissipation formula (squared-gradient form
/// minus the (alpha')^2/4alpha remainder).
double fisher_dissipation(const MixtureState& state);
double fisher_dissipation(const MixtureState& state, const SkewBasis& basis);

/// dI/dt from the symmetrized Xi-form (Xi = 2 Lap psi + |grad psi|^2);
/// exists solely to cross-validate fisher_dissipation.
double fisher_dissipation_xi(const MixtureState& state);

/// Parallel / radial / spherical / remainder split of the Fisher dissipation,
/// per unordered species pair. Stored values carry the mass prefactor
/// c~_ij = c_ij (m_i m_j)^-3 (m_i+m_j)^3 factored out, so
/// total = sum c~_ij (-D_par - D_rad - D_sph + R_sph).
struct PairBreakdown {
  int i = 0, j = 0;
  double prefactor = 0.0;  // c~_ij
  double d_parallel = 0.0;
  double d_radial = 0.0;
  double d_spherical = 0.0;
  double r_spherical = 0.0;
};

struct DissipationBreakdown {
  std::vector<PairBreakdown> pairs;  // unordered {i,j}, i <= j
  double total = 0.0;
};

DissipationBreakdown dissipation_breakdown(const MixtureState& state);
DissipationBreakdown dissipation_breakdown(const MixtureState& state, const SkewBasis& basis);

struct DiagnosticsRecord {
  double time = 0.0;
  Moments mom;
  double H = 0.0;
  double I = 0.0;
  double entropy_dissipation = 0.0;
  double fisher_dissipation = 0.0;
  double fisher_dissipation_xi = 0.0;
  DissipationBreakdown breakdown;
  std::int64_t clamped_node_count = 0;
  double clamped_mass = 0.0;  // mass added by positivity clamping so far
};

DiagnosticsRecord diagnostics(const MixtureState& state);

/// Per-species fields derived from log f that the pair kernels consume.
struct SpeciesDerivatives {
  std::vector<GridField> fw;             // flux_weight(f_i), the pair-kernel density weight
  std::vector<GridField> psi;            // floored log f_i
  std::vector<GridVectorField> grad;     // grad psi_i
  std::vector<GridVectorField> grad_scaled;  // grad psi_i / m_i
  std::vector<std::vector<std::vector<double>>> hess;  // [s][a*d+b] -> field values
  std::vector<GridField> xi;             // 2 Lap psi + |grad psi|^2
  std::vector<GridVectorField> grad_xi;
  std::int64_t clamped = 0;
};

SpeciesDerivatives species_derivatives(const MixtureState& state, bool with_second_order);

}  // namespace landau

#endif
