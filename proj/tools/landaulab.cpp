#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "landau/collision.hpp"
#include "landau/config.hpp"
#include "landau/dynamics.hpp"
#include "landau/errors.hpp"
#include "landau/parallel.hpp"
#include "landau/species.hpp"
#include "landau/sphere.hpp"

namespace {

using namespace landau;

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* cap = std::getenv("LANDAULAB_THREADS")) {
    const int n = std::atoi(cap);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

int cmd_simulate(const std::string& config_path) {
  const ExperimentConfig config = load_config(config_path);
  std::filesystem::create_directories(config.output_dir);
  MixtureState state = initial_state(config);
  set_parallel_reduction(!config.run.deterministic_reduction);

  const int S = static_cast<int>(config.masses.size());
  std::vector<DiagnosticsRecord> records;
  double clamped_mass = 0.0;
  std::int64_t clamped_nodes = 0;
  int snapshot_id = 0;
  const std::string csv_path = config.output_dir + "/diagnostics.csv";

  auto emit = [&](const MixtureState& s) {
    DiagnosticsRecord rec = diagnostics(s);
    rec.clamped_mass = clamped_mass;
    rec.clamped_node_count = clamped_nodes;
    records.push_back(std::move(rec));
    write_snapshot(config.output_dir + "/snapshot_" + std::to_string(snapshot_id++), s);
  };

  try {
    emit(state);
    const std::int64_t nsteps = static_cast<std::int64_t>(
        std::ceil(config.run.t_end / config.run.dt - 1e-9));
    for (std::int64_t k = 0; k < nsteps; ++k) {
      RunConfig rc = config.run;
      if (k == nsteps - 1)
        rc.dt = config.run.t_end - static_cast<double>(k) * config.run.dt;
      double added = 0.0;
      std::int64_t nn = 0;
      state = step(state, rc, &added, &nn);
      clamped_mass += added;
      clamped_nodes += nn;
      if ((k + 1) % config.run.diagnostics_every == 0 || k == nsteps - 1) emit(state);
    }
  } catch (const NumericalError& e) {
    // keep what we have plus an error record, then report failure
    write_diagnostics_csv(csv_path, records, S, config.dim);
    std::FILE* fp = std::fopen(csv_path.c_str(), "a");
    if (fp) {
      std::fprintf(fp, "# error at t=%.17g: %s\n", state.time, e.what());
      std::fclose(fp);
    }
    throw;
  }
  write_diagnostics_csv(csv_path, records, S, config.dim);
  std::printf("wrote %s (%zu records, %d snapshots)\n", csv_path.c_str(), records.size(),
              snapshot_id);
  return 0;
}

int cmd_threshold(int dim) {
  const double cross = admissible_threshold(dim, false);
  const double same = admissible_threshold(dim, true);
  std::printf("d = %d\n", dim);
  std::printf("cross-species |gamma| threshold: %.12f\n", cross);
  std::printf("same-species  |gamma| threshold: %.12f\n", same);
  if (dim == 3) {
    std::printf("Coulomb gamma = -3:\n");
    std::printf("  same-species:  %s (margin %+.12f)\n",
                3.0 <= same ? "admissible" : "not admissible", same - 3.0);
    std::printf("  cross-species: %s (margin %+.12f)\n",
                3.0 <= cross ? "admissible" : "not admissible", cross - 3.0);
  }
  return 0;
}

int cmd_sphere_check(int dim, bool symmetric, int samples, std::uint64_t seed,
                     const std::string& output) {
  std::mt19937_64 rng(seed);
  std::FILE* fp = output.empty() ? stdout : std::fopen(output.c_str(), "w");
  if (!fp) throw ParameterError("sphere-check: cannot write " + output);
  std::fprintf(fp, "sample,symmetric,gamma_integral,gamma2_integral,ratio,margin\n");
  bool failed = false;
  for (int s = 0; s < samples; ++s) {
    const SphereField phi = dim == 2
                                ? random_circle_field(512, 8, 0.5, symmetric, rng)
                                : random_sphere_field(6, 0.5, symmetric, rng);
    const InequalityVerdict v = check_inequality(phi, symmetric);
    const double rt = v.gamma_integral > 1e-14 ? v.gamma2_integral / v.gamma_integral : 0.0;
    std::fprintf(fp, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", s, symmetric ? 1 : 0,
                 v.gamma_integral, v.gamma2_integral, rt, v.margin);
    if (!v.pass) failed = true;
  }
  if (fp != stdout) std::fclose(fp);
  if (failed) throw NumericalError("sphere-check: at least one margin below tolerance");
  return 0;
}

int cmd_decompose(const std::string& config_path, const std::string& snapshot_prefix) {
  const ExperimentConfig config = load_config(config_path);
  set_parallel_reduction(!config.run.deterministic_reduction);
  const MixtureState state = read_snapshot(snapshot_prefix);
  const DiagnosticsRecord rec = diagnostics(state);
  std::vector<DiagnosticsRecord> one{rec};
  const std::string out = config.output_dir + "/decompose.csv";
  std::filesystem::create_directories(config.output_dir);
  write_diagnostics_csv(out, one, state.species.count, state.grid.dim);
  std::printf("t = %.17g\n", rec.time);
  std::printf("dI_formula      = %.17g\n", rec.fisher_dissipation);
  std::printf("dI_xi           = %.17g\n", rec.fisher_dissipation_xi);
  std::printf("dI_decomp_total = %.17g\n", rec.breakdown.total);
  for (const PairBreakdown& pb : rec.breakdown.pairs)
    std::printf("pair (%d,%d): prefactor %.17g D_par %.17g D_rad %.17g D_sph %.17g R_sph %.17g\n",
                pb.i + 1, pb.j + 1, pb.prefactor, pb.d_parallel, pb.d_radial, pb.d_spherical,
                pb.r_spherical);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

int cmd_estimate(int dim, bool symmetric, std::uint64_t seed) {
  SearchOptions opt;
  opt.seed = seed;
  const double best = estimate_constant(dim, symmetric, opt);
  const double lambda = symmetric ? (dim + 3 - 1.0 / (dim - 1)) : (dim - 1.0);
  std::printf("d = %d, %s: smallest ratio found %.6f (reference constant %.6f)\n", dim,
              symmetric ? "antipodal" : "general", best, lambda);
  std::printf("exploratory search; reported, not asserted\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"landaulab: multi-species Landau kinetics laboratory"};
  app.require_subcommand(1);

  std::string config_path, snapshot_prefix, output;
  int dim = 3, samples = 100;
  std::uint64_t seed = 1;
  bool symmetric = false;

  auto* sim = app.add_subcommand("simulate", "run a configured experiment");
  sim->add_option("config", config_path, "JSON config file")->required();

  auto* thr = app.add_subcommand("threshold", "print the Theorem-1.1 gamma thresholds");
  thr->add_option("--dim", dim, "sphere/velocity dimension")->required();

  auto* sph = app.add_subcommand("sphere-check", "randomized Gamma2 inequality battery");
  sph->add_option("--dim", dim, "2 or 3")->required();
  sph->add_flag("--symmetric", symmetric, "antipodally symmetric battery");
  sph->add_option("--samples", samples, "number of random fields")->default_val(100);
  sph->add_option("--seed", seed, "RNG seed")->default_val(1);
  sph->add_option("--output", output, "CSV destination (default stdout)");

  auto* dec = app.add_subcommand("decompose", "dissipation breakdown of a stored snapshot");
  dec->add_option("config", config_path, "JSON config file")->required();
  dec->add_option("snapshot", snapshot_prefix, "snapshot prefix (without .bin/.json)")->required();

  auto* est = app.add_subcommand("estimate", "explore the optimal Gamma2 constant");
  est->add_option("--dim", dim, "2 or 3")->required();
  est->add_flag("--symmetric", symmetric, "antipodally symmetric family");
  est->add_option("--seed", seed, "RNG seed")->default_val(1);

  CLI11_PARSE(app, argc, argv);
  apply_thread_cap();

  try {
    if (sim->parsed()) return cmd_simulate(config_path);
    if (thr->parsed()) {
      if (dim != 2 && dim != 3) throw landau::ParameterError("threshold: dim must be 2 or 3");
      return cmd_threshold(dim);
    }
    if (sph->parsed()) {
      if (dim != 2 && dim != 3) throw landau::ParameterError("sphere-check: dim must be 2 or 3");
      if (samples < 1) throw landau::ParameterError("sphere-check: samples must be >= 1");
      return cmd_sphere_check(dim, symmetric, samples, seed, output);
    }
    if (dec->parsed()) return cmd_decompose(config_path, snapshot_prefix);
    if (est->parsed()) return cmd_estimate(dim, symmetric, seed);
  } catch (const landau::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const landau::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
