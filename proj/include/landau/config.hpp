#ifndef LANDAULAB_CONFIG_HPP
#define LANDAULAB_CONFIG_HPP

#include <string>
#include <vector>

#include "landau/dynamics.hpp"
#include "landau/mixture.hpp"
#include "landau/vec.hpp"

namespace landau {

/// One Maxwellian bump of the initial condition of a species.
struct GaussianBump {
  double n = 1.0;
  Vec u = vec0();
  double theta = 1.0;
};

struct ExperimentConfig {
  int dim = 2;
  double extent = 6.0;
  int points_per_axis = 32;
  std::vector<double> masses;
  std::vector<std::vector<double>> couplings;
  std::vector<std::vector<double>> exponents;
  std::vector<std::vector<GaussianBump>> initial;  // per species
  RunConfig run;
  std::string output_dir = ".";
};

/// Parse + validate a JSON config. Errors are ParameterError with a
/// JSON-pointer-style path to the offending entry.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

MixtureState initial_state(const ExperimentConfig& config);

/// diagnostics.csv with the fixed column order:
/// t, n_1..n_S, P_1..P_d, E, rho, u_1..u_d, theta, H, I,
/// dH_formula, dI_formula, dI_xi, dI_decomp_total,
/// D_par_{ij}.., D_rad_{ij}.., D_sph_{ij}.., R_sph_{ij}.., clamped_mass.
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records, int species_count,
                           int dim);

/// Snapshot = raw row-major doubles (S fields back to back) + JSON sidecar
/// describing grid, species, time and floor. `prefix` gains .bin / .json.
void write_snapshot(const std::string& prefix, const MixtureState& state);
MixtureState read_snapshot(const std::string& prefix);

}  // namespace landau

#endif
