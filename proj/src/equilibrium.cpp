#include "landau/equilibrium.hpp"

#include <cmath>

#include "landau/errors.hpp"
#include "landau/functionals.hpp"

namespace landau {

GridField maxwellian(const VelocityGrid& grid, double mass, const MacroState& macro) {
  if (!(macro.theta > 0.0)) throw ParameterError("maxwellian: theta must be positive");
  if (!(macro.n > 0.0)) throw ParameterError("maxwellian: n must be positive");
  GridField f = make_field(grid);
  const double pref = macro.n * std::pow(mass / (2.0 * M_PI * macro.theta), 0.5 * grid.dim);
  const double a = mass / (2.0 * macro.theta);
  const std::int64_t total = grid.size();
  for (std::int64_t m = 0; m < total; ++m) {
    const Vec v = grid.node(m);
    const double w2 = norm2(sub(v, macro.u, grid.dim), grid.dim);
    f.values[static_cast<size_t>(m)] = pref * std::exp(-a * w2);
  }
  return f;
}

MixtureState equilibrium_of(const MixtureState& state) {
  const Moments mom = moments(state);
  if (!(mom.theta > 0.0)) throw NumericalError("equilibrium_of: degenerate state (theta <= 0)");
  MixtureState eq = state;
  for (int i = 0; i < state.species.count; ++i) {
    if (!(mom.n[static_cast<size_t>(i)] > 0.0))
      throw NumericalError("equilibrium_of: nonpositive density for species " + std::to_string(i));
    MacroState macro{mom.n[static_cast<size_t>(i)], mom.u, mom.theta};
    eq.fields[static_cast<size_t>(i)] =
        maxwellian(state.grid, state.species.masses[static_cast<size_t>(i)], macro);
  }
  return eq;
}

double relative_entropy(const GridField& f, const GridField& mu, double floor) {
  if (!(f.grid == mu.grid)) throw ParameterError("relative_entropy: grid mismatch");
  const auto lf = log_field(f, floor);
  const auto lmu = log_field(mu, floor);
  double s = 0.0, comp = 0.0;
  for (size_t m = 0; m < f.values.size(); ++m) {
    const double y = f.values[m] * (lf.field.values[m] - lmu.field.values[m]) - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s * std::pow(f.grid.spacing, f.grid.dim);
}

GridField fokker_planck_apply(const GridField& f, const GridField& mu, double mass,
                              double floor) {
  if (!(f.grid == mu.grid)) throw ParameterError("fokker_planck_apply: grid mismatch");
  const auto lf = log_field(f, floor);
  const auto lmu = log_field(mu, floor);
  GridField ratio = make_field(f.grid);
  for (size_t m = 0; m < f.values.size(); ++m)
    ratio.values[m] = lf.field.values[m] - lmu.field.values[m];
  GridVectorField G = gradient(ratio);
  for (int a = 0; a < f.grid.dim; ++a)
    for (size_t m = 0; m < f.values.size(); ++m) G.comp[a][m] *= f.values[m];
  GridField out = divergence(G);
  for (double& x : out.values) x /= mass;
  return out;
}

GaussianSpec gaussian_oracle(const GaussianSpec& spec0, double mass, const MacroState& macro,
                             double t) {
  if (t < 0.0) throw ParameterError("gaussian_oracle: t must be nonnegative");
  GaussianSpec s = spec0;
  const int d = spec0.dim;
  const double e1 = std::exp(-t / macro.theta);
  const double e2 = std::exp(-2.0 * t / macro.theta);
  const double ceq = macro.theta / mass;
  for (int c = 0; c < d; ++c) s.mean[c] = macro.u[c] + e1 * (spec0.mean[c] - macro.u[c]);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const double eq = (a == b) ? ceq : 0.0;
      s.cov[static_cast<size_t>(a) * 3 + b] =
          eq + e2 * (spec0.cov[static_cast<size_t>(a) * 3 + b] - eq);
    }
  return s;
}

GridField sample_gaussian(const VelocityGrid& grid, const GaussianSpec& spec) {
  const int d = grid.dim;
  // invert the covariance (2x2 or 3x3)
  double inv[9] = {0};
  double det = 0.0;
  const auto C = [&](int a, int b) { return spec.cov[static_cast<size_t>(a) * 3 + b]; };
  if (d == 2) {
    det = C(0, 0) * C(1, 1) - C(0, 1) * C(1, 0);
    inv[0] = C(1, 1) / det;
    inv[1] = -C(0, 1) / det;
    inv[3] = -C(1, 0) / det;
    inv[4] = C(0, 0) / det;
  } else {
    det = C(0, 0) * (C(1, 1) * C(2, 2) - C(1, 2) * C(2, 1)) -
          C(0, 1) * (C(1, 0) * C(2, 2) - C(1, 2) * C(2, 0)) +
          C(0, 2) * (C(1, 0) * C(2, 1) - C(1, 1) * C(2, 0));
    inv[0] = (C(1, 1) * C(2, 2) - C(1, 2) * C(2, 1)) / det;
    inv[1] = (C(0, 2) * C(2, 1) - C(0, 1) * C(2, 2)) / det;
    inv[2] = (C(0, 1) * C(1, 2) - C(0, 2) * C(1, 1)) / det;
    inv[3] = (C(1, 2) * C(2, 0) - C(1, 0) * C(2, 2)) / det;
    inv[4] = (C(0, 0) * C(2, 2) - C(0, 2) * C(2, 0)) / det;
    inv[5] = (C(0, 2) * C(1, 0) - C(0, 0) * C(1, 2)) / det;
    inv[6] = (C(1, 0) * C(2, 1) - C(1, 1) * C(2, 0)) / det;
    inv[7] = (C(0, 1) * C(2, 0) - C(0, 0) * C(2, 1)) / det;
    inv[8] = (C(0, 0) * C(1, 1) - C(0, 1) * C(1, 0)) / det;
  }
  if (!(det > 0.0)) throw ParameterError("sample_gaussian: covariance not positive-definite");
  const double pref =
      spec.mass / (std::pow(2.0 * M_PI, 0.5 * d) * std::sqrt(det));
  GridField f = make_field(grid);
  const std::int64_t total = grid.size();
  for (std::int64_t m = 0; m < total; ++m) {
    const Vec v = grid.node(m);
    const Vec w = sub(v, spec.mean, d);
    double q = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) q += w[a] * inv[a * 3 + b] * w[b];
    f.values[static_cast<size_t>(m)] = pref * std::exp(-0.5 * q);
  }
  return f;
}

GaussianSpec gaussian_stats(const GridField& f) {
  const int d = f.grid.dim;
  GaussianSpec s;
  s.dim = d;
  s.mass = integrate(f);
  if (!(s.mass > 0.0)) throw NumericalError("gaussian_stats: nonpositive mass");
  const std::int64_t total = f.grid.size();
  Vec first = vec0();
  for (std::int64_t m = 0; m < total; ++m) {
    const Vec v = f.grid.node(m);
    const double fv = f.values[static_cast<size_t>(m)];
    for (int a = 0; a < d; ++a) first[a] += fv * v[a];
  }
  const double hd = std::pow(f.grid.spacing, d);
  for (int a = 0; a < d; ++a) s.mean[a] = first[a] * hd / s.mass;
  double second[9] = {0};
  for (std::int64_t m = 0; m < total; ++m) {
    const Vec v = f.grid.node(m);
    const double fv = f.values[static_cast<size_t>(m)];
    const Vec w = sub(v, s.mean, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) second[a * 3 + b] += fv * w[a] * w[b];
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s.cov[static_cast<size_t>(a) * 3 + b] = second[a * 3 + b] * hd / s.mass;
  return s;
}

}  // namespace landau
