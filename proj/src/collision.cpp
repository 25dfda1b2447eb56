#include "landau/collision.hpp"

#include <cmath>

#include "landau/functionals.hpp"

namespace landau {

namespace {

std::array<std::vector<double>, 3> node_coords(const VelocityGrid& g) {
  std::array<std::vector<double>, 3> C;
  const std::int64_t total = g.size();
  for (int a = 0; a < g.dim; ++a) C[a].resize(static_cast<size_t>(total));
  int m[3];
  for (std::int64_t idx = 0; idx < total; ++idx) {
    g.unflatten(idx, m);
    for (int a = 0; a < g.dim; ++a) C[a][static_cast<size_t>(idx)] = g.nodes[m[a]];
  }
  return C;
}

struct AlphaZero {
  double operator()(double) const { return 1.0; }
};
struct AlphaOne {
  double operator()(double r2) const { return std::sqrt(r2); }
};
struct AlphaMinusOne {
  double operator()(double r2) const { return 1.0 / std::sqrt(r2); }
};
struct AlphaTwo {
  double operator()(double r2) const { return r2; }
};
struct AlphaMinusTwo {
  double operator()(double r2) const { return 1.0 / r2; }
};
struct AlphaGeneral {
  double half_gamma;
  double operator()(double r2) const { return std::pow(r2, half_gamma); }
};

// K arrays: per species, d component arrays over the flat index.
using Scatter = std::vector<std::array<std::vector<double>, 3>>;

// Accumulate the unordered-pair contributions of one unordered species pair
// {i, j} (i == j allowed) into K_i / K_j.
template <int D, class AlphaF>
void accumulate_species_pair(const MixtureState& state,
                             const std::array<std::vector<double>, 3>& C,
                             const SpeciesDerivatives& sd, int i, int j, double c,
                             AlphaF alpha, Scatter& K) {
  const std::int64_t total = state.grid.size();
  const auto& fi = sd.fw[static_cast<size_t>(i)].values;
  const auto& fj = sd.fw[static_cast<size_t>(j)].values;
  const auto& gsi = sd.grad_scaled[static_cast<size_t>(i)];
  const auto& gsj = sd.grad_scaled[static_cast<size_t>(j)];
  auto& Ki = K[static_cast<size_t>(i)];
  auto& Kj = K[static_cast<size_t>(j)];

  for (std::int64_t a = 0; a < total; ++a) {
    const size_t ia = static_cast<size_t>(a);
    double va[D], gia[D], gja[D];
    for (int cd = 0; cd < D; ++cd) {
      va[cd] = C[cd][ia];
      gia[cd] = gsi.comp[cd][ia];
      gja[cd] = gsj.comp[cd][ia];
    }
    const double fia = fi[ia];
    const double fja = fj[ia];
    double accKiA[D] = {}, accKjA[D] = {};
    for (std::int64_t b = a + 1; b < total; ++b) {
      const size_t ib = static_cast<size_t>(b);
      double w[D], r2 = 0.0;
      for (int cd = 0; cd < D; ++cd) {
        w[cd] = va[cd] - C[cd][ib];
        r2 += w[cd] * w[cd];
      }
      const double al = alpha(r2);
      const double ca = c * al;

      // (i at a, j at b) and its swapped form (j at b, i at a)
      double u1[D], wu1 = 0.0, u1n = 0.0;
      for (int cd = 0; cd < D; ++cd) {
        u1[cd] = gia[cd] - gsj.comp[cd][ib];
        wu1 += w[cd] * u1[cd];
        u1n += u1[cd] * u1[cd];
      }
      const double chi1 = pair_rate_weight(al * r2 * std::sqrt(u1n));
      const double s1a = chi1 * ca * fj[ib];
      const double s1b = chi1 * ca * fia;
      for (int cd = 0; cd < D; ++cd) {
        const double x = r2 * u1[cd] - wu1 * w[cd];
        accKiA[cd] += s1a * x;
        Kj[cd][ib] -= s1b * x;
      }
      if (i != j) {
        // (i at b, j at a) and its swap
        double u2[D], wu2 = 0.0, u2n = 0.0;
        for (int cd = 0; cd < D; ++cd) {
          u2[cd] = gsi.comp[cd][ib] - gja[cd];
          wu2 += w[cd] * u2[cd];
          u2n += u2[cd] * u2[cd];
        }
        const double chi2 = pair_rate_weight(al * r2 * std::sqrt(u2n));
        const double s2a = chi2 * ca * fja;
        const double s2b = chi2 * ca * fi[ib];
        for (int cd = 0; cd < D; ++cd) {
          const double x = r2 * u2[cd] - wu2 * w[cd];
          Ki[cd][ib] += s2a * x;
          accKjA[cd] -= s2b * x;
        }
      }
    }
    for (int cd = 0; cd < D; ++cd) {
      Ki[cd][ia] += accKiA[cd];
      if (i != j) Kj[cd][ia] += accKjA[cd];
    }
  }
}

template <int D>
void accumulate_dispatch(const MixtureState& state,
                         const std::array<std::vector<double>, 3>& C,
                         const SpeciesDerivatives& sd, int i, int j, double c,
                         double gamma, Scatter& K) {
  if (gamma == 0.0)
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaZero{}, K);
  else if (gamma == 1.0)
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaOne{}, K);
  else if (gamma == -1.0)
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaMinusOne{}, K);
  else if (gamma == 2.0)
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaTwo{}, K);
  else if (gamma == -2.0)
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaMinusTwo{}, K);
  else
    accumulate_species_pair<D>(state, C, sd, i, j, c, AlphaGeneral{0.5 * gamma}, K);
}

}  // namespace

GridField collision_pair(const MixtureState& state, int i, int j) {
  const int d = state.grid.dim;
  const std::int64_t total = state.grid.size();
  const auto C = node_coords(state.grid);
  const SpeciesDerivatives sd = species_derivatives(state, false);
  const double c = state.species.coupling(i, j);
  const double mi = state.species.masses[static_cast<size_t>(i)];
  const double gamma = state.species.exponent(i, j);
  const double hd = std::pow(state.grid.spacing, d);
  const auto& fi = sd.fw[static_cast<size_t>(i)].values;
  const auto& fj = sd.fw[static_cast<size_t>(j)].values;
  const auto& gsi = sd.grad_scaled[static_cast<size_t>(i)];
  const auto& gsj = sd.grad_scaled[static_cast<size_t>(j)];

  GridVectorField J = make_vector_field(state.grid);
  for (std::int64_t a = 0; a < total; ++a) {
    const size_t ia = static_cast<size_t>(a);
    Vec va = vec0(), ga = vec0();
    for (int cd = 0; cd < d; ++cd) {
      va[cd] = C[cd][ia];
      ga[cd] = gsi.comp[cd][ia];
    }
    Vec acc = vec0();
    for (std::int64_t b = 0; b < total; ++b) {
      if (b == a) continue;
      const size_t ib = static_cast<size_t>(b);
      Vec w, u;
      double r2 = 0.0, wu = 0.0, u2 = 0.0;
      for (int cd = 0; cd < d; ++cd) {
        w[cd] = va[cd] - C[cd][ib];
        u[cd] = ga[cd] - gsj.comp[cd][ib];
        r2 += w[cd] * w[cd];
        wu += w[cd] * u[cd];
        u2 += u[cd] * u[cd];
      }
      const double al = std::pow(r2, 0.5 * gamma);
      const double chi = pair_rate_weight(al * r2 * std::sqrt(u2));
      const double s = chi * al * fj[ib];
      for (int cd = 0; cd < d; ++cd) acc[cd] += s * (r2 * u[cd] - wu * w[cd]);
    }
    for (int cd = 0; cd < d; ++cd) J.comp[cd][ia] = hd * fi[ia] * acc[cd];
  }
  GridField out = divergence(J);
  const double scale = c / mi;
  for (double& x : out.values) x *= scale;
  return out;
}

std::vector<GridField> rhs(const MixtureState& state) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const std::int64_t total = state.grid.size();
  const auto C = node_coords(state.grid);
  const SpeciesDerivatives sd = species_derivatives(state, false);
  const double hd = std::pow(state.grid.spacing, d);

  Scatter K(static_cast<size_t>(S));
  for (auto& Ks : K)
    for (int cd = 0; cd < d; ++cd) Ks[cd].assign(static_cast<size_t>(total), 0.0);

  for (int i = 0; i < S; ++i) {
    for (int j = i; j < S; ++j) {
      const double c = state.species.coupling(i, j);
      if (c == 0.0) continue;
      const double gamma = state.species.exponent(i, j);
      if (d == 2)
        accumulate_dispatch<2>(state, C, sd, i, j, c, gamma, K);
      else
        accumulate_dispatch<3>(state, C, sd, i, j, c, gamma, K);
    }
  }

  std::vector<GridField> out;
  out.reserve(static_cast<size_t>(S));
  for (int i = 0; i < S; ++i) {
    const auto& fi = sd.fw[static_cast<size_t>(i)].values;
    GridVectorField J = make_vector_field(state.grid);
    for (int cd = 0; cd < d; ++cd)
      for (std::int64_t m = 0; m < total; ++m) {
        const size_t im = static_cast<size_t>(m);
        J.comp[cd][im] = hd * fi[im] * K[static_cast<size_t>(i)][cd][im];
      }
    GridField q = divergence(J);
    const double inv_mi = 1.0 / state.species.masses[static_cast<size_t>(i)];
    for (double& x : q.values) x *= inv_mi;
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace landau
