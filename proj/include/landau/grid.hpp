#ifndef LANDAULAB_GRID_HPP
#define LANDAULAB_GRID_HPP

#include <cstdint>
#include <vector>

#include "landau/vec.hpp"

namespace landau {

/// Uniform cell-centered velocity grid on [-L, L]^d.
///
/// Nodes sit at midpoints v_m = -L + (m + 1/2) h with h = 2L/N, so the node
/// set is symmetric under v -> -v for even N and never contains v = 0.
struct VelocityGrid {
  int dim = 0;             // d in {2, 3}
  double extent = 0.0;     // L
  int points_per_axis = 0; // N, even, >= 8
  double spacing = 0.0;    // h = 2L/N
  std::vector<double> nodes; // 1d node coordinates, size N

  std::int64_t size() const {
    std::int64_t t = 1;
    for (int c = 0; c < dim; ++c) t *= points_per_axis;
    return t;
  }

  /// Decompose a flat index (axis 0 fastest).
  void unflatten(std::int64_t idx, int* out) const {
    for (int c = 0; c < dim; ++c) {
      out[c] = static_cast<int>(idx % points_per_axis);
      idx /= points_per_axis;
    }
  }

  Vec node(std::int64_t idx) const {
    int m[3] = {0, 0, 0};
    unflatten(idx, m);
    Vec v = vec0();
    for (int c = 0; c < dim; ++c) v[c] = nodes[m[c]];
    return v;
  }

  bool operator==(const VelocityGrid& o) const {
    return dim == o.dim && extent == o.extent && points_per_axis == o.points_per_axis;
  }
};

VelocityGrid make_grid(int dim, double extent, int points_per_axis);

struct GridField {
  VelocityGrid grid;
  std::vector<double> values;
};

struct GridVectorField {
  VelocityGrid grid;
  std::vector<std::vector<double>> comp; // dim arrays of size N^d
};

GridField make_field(const VelocityGrid& g, double fill = 0.0);
GridVectorField make_vector_field(const VelocityGrid& g);

/// Second-order gradient: central differences inside, one-sided at the two
/// boundary layers. Exact on affine and quadratic fields.
GridVectorField gradient(const GridField& f);

/// Exact negative adjoint of `gradient` under <f,g> = h^d sum f g, so
/// <g, div F> = -<grad g, F> holds to rounding for all g, F.
GridField divergence(const GridVectorField& F);

/// Midpoint quadrature h^d sum_m f(v_m).
double integrate(const GridField& f);

/// Quadrature inner product h^d sum f g.
double inner(const GridField& f, const GridField& g);
double inner(const GridVectorField& F, const GridVectorField& G);

struct LogFieldResult {
  GridField field;
  std::int64_t clamped = 0; // nodes where f < floor
};

/// log(max(f, floor)) with the clamp count recorded.
LogFieldResult log_field(const GridField& f, double floor);

/// Largest per-cell density jump the pair fluxes treat as resolved;
/// flux_weight leaves f untouched wherever neighboring values stay within
/// this ratio.
inline constexpr double kFluxJump = 4.5;

/// Density weight for the pair fluxes: pointwise min(f, kFluxJump * m) where
/// m is the minimum of f over every node the divergence stencil lets a flux
/// stored here reach. Equal to f wherever f is resolved (per-cell jumps below
/// kFluxJump); in under-resolved tails it caps what one step can deposit into
/// a node at a multiple of that node's own density, so explicit steps cannot
/// drive the tail negative at bulk scale. Used as the f-weight of every pair
/// kernel (the logs psi still come from f itself); being a symmetric
/// pointwise weight it leaves conservation and the entropy pairing exact.
GridField flux_weight(const GridField& f);

/// Apply the 1d derivative stencil along one axis (building block for
/// gradient); transpose_apply is its exact adjoint-transpose.
void apply_d1(const VelocityGrid& g, int axis, const std::vector<double>& in,
              std::vector<double>& out);
void apply_d1_transpose(const VelocityGrid& g, int axis, const std::vector<double>& in,
                        std::vector<double>& out);

}  // namespace landau

#endif
