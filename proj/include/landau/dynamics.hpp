#ifndef LANDAULAB_DYNAMICS_HPP
#define LANDAULAB_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "landau/functionals.hpp"
#include "landau/mixture.hpp"

namespace landau {

enum class Flow { landau, fokker_planck };
enum class Scheme { euler, rk4 };

struct RunConfig {
  Flow flow = Flow::landau;
  Scheme scheme = Scheme::rk4;
  double dt = 1e-3;
  double t_end = 0.0;
  int diagnostics_every = 1;
  double floor = 1e-30;
  bool deterministic_reduction = true;
};

/// Right-hand side of the selected flow. For fokker_planck the attractor
/// Maxwellians are rebuilt from the current moments (which the flow
/// conserves, so this matches freezing them at t = 0).
std::vector<GridField> flow_rhs(const MixtureState& state, const RunConfig& config);

/// One explicit step (euler or rk4). Negative post-update values are clamped
/// to the floor; the mass added by clamping and the node count are reported
/// through the optional out-parameters.
MixtureState step(const MixtureState& state, const RunConfig& config,
                  double* clamped_mass_added = nullptr,
                  std::int64_t* clamped_nodes = nullptr);

struct RunResult {
  std::vector<DiagnosticsRecord> records;   // t=0, every diagnostics_every, t_end
  std::vector<MixtureState> snapshots;      // states at the emitted times
  bool clamping_flagged = false;            // cumulative clamped mass > 1e-8 of total
};

RunResult run(const MixtureState& initial, const RunConfig& config);

/// Largest dt with max |rhs_i| dt <= 0.1 f_i at nodes where f_i >= 1e3 floor,
/// capped at config.dt.
double suggest_dt(const MixtureState& state, const RunConfig& config);

}  // namespace landau

#endif
