#include "landau/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "landau/errors.hpp"

namespace landau {

VelocityGrid make_grid(int dim, double extent, int points_per_axis) {
  if (dim != 2 && dim != 3)
    throw ParameterError("invalid grid: dim must be 2 or 3, got " + std::to_string(dim));
  if (!(extent > 0.0))
    throw ParameterError("invalid grid: extent must be positive");
  if (points_per_axis < 8)
    throw ParameterError("invalid grid: points_per_axis must be >= 8, got " +
                         std::to_string(points_per_axis));
  if (points_per_axis % 2 != 0)
    throw ParameterError("invalid grid: points_per_axis must be even, got " +
                         std::to_string(points_per_axis));
  VelocityGrid g;
  g.dim = dim;
  g.extent = extent;
  g.points_per_axis = points_per_axis;
  g.spacing = 2.0 * extent / points_per_axis;
  g.nodes.resize(points_per_axis);
  for (int m = 0; m < points_per_axis; ++m)
    g.nodes[m] = -extent + (m + 0.5) * g.spacing;
  return g;
}

GridField make_field(const VelocityGrid& g, double fill) {
  return GridField{g, std::vector<double>(static_cast<size_t>(g.size()), fill)};
}

GridVectorField make_vector_field(const VelocityGrid& g) {
  GridVectorField F;
  F.grid = g;
  F.comp.assign(g.dim, std::vector<double>(static_cast<size_t>(g.size()), 0.0));
  return F;
}

namespace {

// Iterate the grid as lines along `axis`: base indices step through all nodes
// with the axis coordinate fixed at 0; elements along the line are base + m*s.
template <class LineFn>
void for_each_line(const VelocityGrid& g, int axis, LineFn&& fn) {
  const std::int64_t n = g.points_per_axis;
  std::int64_t s = 1;
  for (int c = 0; c < axis; ++c) s *= n;
  const std::int64_t block = s * n;
  const std::int64_t total = g.size();
  for (std::int64_t outer = 0; outer < total; outer += block)
    for (std::int64_t in = 0; in < s; ++in) fn(outer + in, s);
}

}  // namespace

void apply_d1(const VelocityGrid& g, int axis, const std::vector<double>& in,
              std::vector<double>& out) {
  const int n = g.points_per_axis;
  const double c = 1.0 / (2.0 * g.spacing);
  out.resize(in.size());
  for_each_line(g, axis, [&](std::int64_t base, std::int64_t s) {
    const double* f = in.data();
    double* o = out.data();
    o[base] = c * (-3.0 * f[base] + 4.0 * f[base + s] - f[base + 2 * s]);
    for (int m = 1; m < n - 1; ++m)
      o[base + m * s] = c * (f[base + (m + 1) * s] - f[base + (m - 1) * s]);
    const std::int64_t l = base + (n - 1) * s;
    o[l] = c * (3.0 * f[l] - 4.0 * f[l - s] + f[l - 2 * s]);
  });
}

void apply_d1_transpose(const VelocityGrid& g, int axis, const std::vector<double>& in,
                        std::vector<double>& out) {
  const int n = g.points_per_axis;
  const double c = 1.0 / (2.0 * g.spacing);
  out.assign(in.size(), 0.0);
  for_each_line(g, axis, [&](std::int64_t base, std::int64_t s) {
    const double* y = in.data();
    double* o = out.data();
    const double y0 = y[base];
    o[base] += -3.0 * c * y0;
    o[base + s] += 4.0 * c * y0;
    o[base + 2 * s] += -c * y0;
    for (int m = 1; m < n - 1; ++m) {
      const double ym = c * y[base + m * s];
      o[base + (m - 1) * s] -= ym;
      o[base + (m + 1) * s] += ym;
    }
    const std::int64_t l = base + (n - 1) * s;
    const double yl = y[l];
    o[l] += 3.0 * c * yl;
    o[l - s] += -4.0 * c * yl;
    o[l - 2 * s] += c * yl;
  });
}

GridField flux_weight(const GridField& f) {
  const int n = f.grid.points_per_axis;
  // per-axis minimum of f over the nodes whose rhs a flux stored here can
  // reach through the divergence stencil
  GridField out = make_field(f.grid, std::numeric_limits<double>::infinity());
  std::vector<double> tmp(f.values.size());
  for (int axis = 0; axis < f.grid.dim; ++axis) {
    for_each_line(f.grid, axis, [&](std::int64_t base, std::int64_t s) {
      const double* v = f.values.data();
      const double head = std::min({v[base], v[base + s], v[base + 2 * s]});
      tmp[static_cast<size_t>(base)] = head;
      tmp[static_cast<size_t>(base + s)] = head;
      for (int m = 2; m < n - 2; ++m)
        tmp[static_cast<size_t>(base + m * s)] =
            std::min({v[base + (m - 1) * s], v[base + m * s], v[base + (m + 1) * s]});
      const std::int64_t l = base + (n - 1) * s;
      const double tail = std::min({v[l], v[l - s], v[l - 2 * s]});
      tmp[static_cast<size_t>(l)] = tail;
      tmp[static_cast<size_t>(l - s)] = tail;
    });
    for (size_t m = 0; m < out.values.size(); ++m)
      out.values[m] = std::min(out.values[m], tmp[m]);
  }
  for (size_t m = 0; m < out.values.size(); ++m)
    out.values[m] = std::min(f.values[m], kFluxJump * out.values[m]);
  return out;
}

GridVectorField gradient(const GridField& f) {
  GridVectorField F = make_vector_field(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) apply_d1(f.grid, a, f.values, F.comp[a]);
  return F;
}

GridField divergence(const GridVectorField& F) {
  GridField out = make_field(F.grid);
  std::vector<double> tmp;
  for (int a = 0; a < F.grid.dim; ++a) {
    apply_d1_transpose(F.grid, a, F.comp[a], tmp);
    for (size_t m = 0; m < out.values.size(); ++m) out.values[m] -= tmp[m];
  }
  return out;
}

double integrate(const GridField& f) {
  double s = 0.0, comp = 0.0;
  for (double x : f.values) { // Kahan
    const double y = x - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s * std::pow(f.grid.spacing, f.grid.dim);
}

double inner(const GridField& f, const GridField& g) {
  if (!(f.grid == g.grid)) throw ParameterError("inner: grid mismatch");
  double s = 0.0, comp = 0.0;
  for (size_t m = 0; m < f.values.size(); ++m) {
    const double y = f.values[m] * g.values[m] - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s * std::pow(f.grid.spacing, f.grid.dim);
}

double inner(const GridVectorField& F, const GridVectorField& G) {
  if (!(F.grid == G.grid)) throw ParameterError("inner: grid mismatch");
  double s = 0.0, comp = 0.0;
  for (int a = 0; a < F.grid.dim; ++a) {
    for (size_t m = 0; m < F.comp[a].size(); ++m) {
      const double y = F.comp[a][m] * G.comp[a][m] - comp;
      const double t = s + y;
      comp = (t - s) - y;
      s = t;
    }
  }
  return s * std::pow(F.grid.spacing, F.grid.dim);
}

LogFieldResult log_field(const GridField& f, double floor) {
  if (!(floor > 0.0)) throw ParameterError("log_field: floor must be positive");
  LogFieldResult r{make_field(f.grid), 0};
  const double lf = std::log(floor);
  for (size_t m = 0; m < f.values.size(); ++m) {
    if (f.values[m] < floor) {
      r.field.values[m] = lf;
      ++r.clamped;
    } else {
      r.field.values[m] = std::log(f.values[m]);
    }
  }
  return r;
}

}  // namespace landau
