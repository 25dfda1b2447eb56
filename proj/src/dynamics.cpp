#include "landau/dynamics.hpp"

#include <cmath>
#include <string>

#include "landau/collision.hpp"
#include "landau/equilibrium.hpp"
#include "landau/errors.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {

void check_finite(const std::vector<GridField>& r, const VelocityGrid& grid) {
  for (size_t i = 0; i < r.size(); ++i) {
    const auto& vals = r[i].values;
    for (size_t m = 0; m < vals.size(); ++m) {
      if (!std::isfinite(vals[m])) {
        const Vec v = grid.node(static_cast<std::int64_t>(m));
        std::string where = "(";
        for (int c = 0; c < grid.dim; ++c)
          where += (c ? ", " : "") + std::to_string(v[c]);
        where += ")";
        throw NumericalError("step: non-finite rhs for species " + std::to_string(i) +
                             " at node " + std::to_string(m) + " v = " + where +
                             " (dt too large or state degenerate)");
      }
    }
  }
}

MixtureState axpy(const MixtureState& base, double a, const std::vector<GridField>& r) {
  MixtureState s = base;
  for (size_t i = 0; i < s.fields.size(); ++i)
    for (size_t m = 0; m < s.fields[i].values.size(); ++m)
      s.fields[i].values[m] += a * r[i].values[m];
  return s;
}

}  // namespace

std::vector<GridField> flow_rhs(const MixtureState& state, const RunConfig& config) {
  std::vector<GridField> r;
  if (config.flow == Flow::landau) {
    r = rhs(state);
  } else {
    const MixtureState eq = equilibrium_of(state);
    r.reserve(state.fields.size());
    for (int i = 0; i < state.species.count; ++i)
      r.push_back(fokker_planck_apply(state.fields[static_cast<size_t>(i)],
                                      eq.fields[static_cast<size_t>(i)],
                                      state.species.masses[static_cast<size_t>(i)],
                                      state.floor));
  }
  check_finite(r, state.grid);
  return r;
}

namespace {

MixtureState step_dt(const MixtureState& state, const RunConfig& config, double dt,
                     double* clamped_mass_added, std::int64_t* clamped_nodes) {
  MixtureState next = state;
  if (config.scheme == Scheme::euler) {
    const auto k1 = flow_rhs(state, config);
    next = axpy(state, dt, k1);
  } else {
    const auto k1 = flow_rhs(state, config);
    const auto k2 = flow_rhs(axpy(state, 0.5 * dt, k1), config);
    const auto k3 = flow_rhs(axpy(state, 0.5 * dt, k2), config);
    const auto k4 = flow_rhs(axpy(state, dt, k3), config);
    next = state;
    const double w = dt / 6.0;
    for (size_t i = 0; i < next.fields.size(); ++i)
      for (size_t m = 0; m < next.fields[i].values.size(); ++m)
        next.fields[i].values[m] += w * (k1[i].values[m] + 2.0 * k2[i].values[m] +
                                         2.0 * k3[i].values[m] + k4[i].values[m]);
  }
  double added = 0.0;
  std::int64_t nodes = 0;
  for (auto& f : next.fields)
    for (double& x : f.values)
      if (x < 0.0) {
        added += config.floor - x;
        x = config.floor;
        ++nodes;
      }
  if (clamped_mass_added)
    *clamped_mass_added = added * std::pow(state.grid.spacing, state.grid.dim);
  if (clamped_nodes) *clamped_nodes = nodes;
  next.time = state.time + dt;
  return next;
}

}  // namespace

MixtureState step(const MixtureState& state, const RunConfig& config,
                  double* clamped_mass_added, std::int64_t* clamped_nodes) {
  if (!(config.dt > 0.0)) throw ParameterError("step: dt must be positive");
  return step_dt(state, config, config.dt, clamped_mass_added, clamped_nodes);
}

RunResult run(const MixtureState& initial, const RunConfig& config) {
  if (!(config.dt > 0.0)) throw ParameterError("run: dt must be positive");
  if (config.t_end < 0.0) throw ParameterError("run: t_end must be nonnegative");
  if (config.diagnostics_every < 1)
    throw ParameterError("run: diagnostics_every must be >= 1");
  set_parallel_reduction(!config.deterministic_reduction);

  MixtureState state = initial;
  state.floor = config.floor;

  RunResult result;
  double clamped_mass = 0.0;
  std::int64_t clamped_nodes = 0;
  const double total_mass0 = [&] {
    double s = 0.0;
    for (const auto& f : state.fields) s += integrate(f);
    return s;
  }();

  auto emit = [&](const MixtureState& s) {
    DiagnosticsRecord rec = diagnostics(s);
    rec.clamped_mass = clamped_mass;
    rec.clamped_node_count = clamped_nodes;
    result.records.push_back(std::move(rec));
    result.snapshots.push_back(s);
  };

  emit(state);
  const std::int64_t nsteps =
      static_cast<std::int64_t>(std::ceil(config.t_end / config.dt - 1e-9));
  for (std::int64_t k = 0; k < nsteps; ++k) {
    const double dt =
        (k == nsteps - 1) ? config.t_end - static_cast<double>(k) * config.dt : config.dt;
    double added = 0.0;
    std::int64_t nn = 0;
    state = step_dt(state, config, dt, &added, &nn);
    clamped_mass += added;
    clamped_nodes += nn;
    if ((k + 1) % config.diagnostics_every == 0 || k == nsteps - 1) emit(state);
  }
  result.clamping_flagged = clamped_mass > 1e-8 * total_mass0;
  return result;
}

double suggest_dt(const MixtureState& state, const RunConfig& config) {
  const auto r = flow_rhs(state, config);
  double dt = config.dt;
  const double cutoff = 1e3 * state.floor;
  for (size_t i = 0; i < r.size(); ++i) {
    const auto& f = state.fields[i].values;
    for (size_t m = 0; m < f.size(); ++m) {
      if (f[m] < cutoff) continue;
      const double rv = std::abs(r[i].values[m]);
      if (rv > 0.0) dt = std::min(dt, 0.1 * f[m] / rv);
    }
  }
  return dt;
}

}  // namespace landau
