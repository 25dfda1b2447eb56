#include "landau/functionals.hpp"

#include <atomic>
#include <cmath>

#include "landau/errors.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {
bool g_parallel_reduction = false;
}

void set_parallel_reduction(bool enabled) { g_parallel_reduction = enabled; }
bool parallel_reduction() { return g_parallel_reduction; }

namespace {

// Per-axis node coordinate arrays over the flat index.
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

// alpha(r) = r^gamma evaluated from r^2, with the common exponents special-cased.
struct Alpha {
  double gamma;
  int kind;  // 0: gamma=0, 1: gamma=1, -1, 2, -2, 99: general
  explicit Alpha(double g) : gamma(g) {
    if (g == 0.0) kind = 0;
    else if (g == 1.0) kind = 1;
    else if (g == -1.0) kind = -1;
    else if (g == 2.0) kind = 2;
    else if (g == -2.0) kind = -2;
    else kind = 99;
  }
  double operator()(double r2) const {
    switch (kind) {
      case 0: return 1.0;
      case 1: return std::sqrt(r2);
      case -1: return 1.0 / std::sqrt(r2);
      case 2: return r2;
      case -2: return 1.0 / r2;
      default: return std::pow(r2, 0.5 * gamma);
    }
  }
};

}  // namespace

Moments moments(const MixtureState& state) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const double hd = std::pow(state.grid.spacing, d);
  Moments mom;
  mom.n.resize(static_cast<size_t>(S));
  double nsum = 0.0;
  const std::int64_t total = state.grid.size();
  for (int i = 0; i < S; ++i) {
    const double mi = state.species.masses[static_cast<size_t>(i)];
    const auto& f = state.fields[static_cast<size_t>(i)].values;
    double n = 0.0, e = 0.0;
    Vec p = vec0();
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const double fv = f[static_cast<size_t>(idx)];
      const Vec v = state.grid.node(idx);
      n += fv;
      e += fv * norm2(v, d);
      for (int a = 0; a < d; ++a) p[a] += fv * v[a];
    }
    mom.n[static_cast<size_t>(i)] = n * hd;
    nsum += n * hd;
    mom.E += 0.5 * mi * e * hd;
    for (int a = 0; a < d; ++a) mom.P[a] += mi * p[a] * hd;
    mom.rho += mi * mom.n[static_cast<size_t>(i)];
  }
  if (!(nsum > 0.0)) throw NumericalError("moments: degenerate state (zero total density)");
  for (int a = 0; a < d; ++a) mom.u[a] = mom.P[a] / mom.rho;
  mom.theta = (2.0 * mom.E - mom.rho * norm2(mom.u, d)) / (d * nsum);
  return mom;
}

double entropy(const MixtureState& state) {
  double H = 0.0;
  for (const auto& f : state.fields) {
    const auto lf = log_field(f, state.floor);
    H += inner(f, lf.field);
  }
  return H;
}

double fisher(const MixtureState& state) {
  double I = 0.0;
  const double hd = std::pow(state.grid.spacing, state.grid.dim);
  for (int i = 0; i < state.species.count; ++i) {
    const auto& f = state.fields[static_cast<size_t>(i)];
    const GridVectorField G = gradient(f);
    double s = 0.0, comp = 0.0;
    for (size_t m = 0; m < f.values.size(); ++m) {
      double g2 = 0.0;
      for (int a = 0; a < state.grid.dim; ++a) g2 += G.comp[a][m] * G.comp[a][m];
      const double y = g2 / std::max(f.values[m], state.floor) - comp;
      const double t = s + y;
      comp = (t - s) - y;
      s = t;
    }
    I += s * hd / state.species.masses[static_cast<size_t>(i)];
  }
  return I;
}

SpeciesDerivatives species_derivatives(const MixtureState& state, bool with_second_order) {
  const int S = state.species.count;
  const int d = state.grid.dim;
  SpeciesDerivatives sd;
  sd.psi.reserve(static_cast<size_t>(S));
  sd.grad.reserve(static_cast<size_t>(S));
  sd.grad_scaled.reserve(static_cast<size_t>(S));
  for (int i = 0; i < S; ++i) {
    sd.fw.push_back(flux_weight(state.fields[static_cast<size_t>(i)]));
    auto lf = log_field(state.fields[static_cast<size_t>(i)], state.floor);
    sd.clamped += lf.clamped;
    sd.grad.push_back(gradient(lf.field));
    sd.psi.push_back(std::move(lf.field));
    GridVectorField gs = sd.grad.back();
    const double mi = state.species.masses[static_cast<size_t>(i)];
    for (int a = 0; a < d; ++a)
      for (double& x : gs.comp[a]) x /= mi;
    sd.grad_scaled.push_back(std::move(gs));
  }
  if (with_second_order) {
    sd.hess.resize(static_cast<size_t>(S));
    for (int i = 0; i < S; ++i) {
      auto& H = sd.hess[static_cast<size_t>(i)];
      H.assign(static_cast<size_t>(d) * d, {});
      // second derivatives by applying the gradient stencil twice
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          apply_d1(state.grid, b, sd.grad[static_cast<size_t>(i)].comp[a],
                   H[static_cast<size_t>(a) * d + b]);
      GridField xi = make_field(state.grid);
      for (size_t m = 0; m < xi.values.size(); ++m) {
        double lap = 0.0, g2 = 0.0;
        for (int a = 0; a < d; ++a) {
          lap += H[static_cast<size_t>(a) * d + a][m];
          const double g = sd.grad[static_cast<size_t>(i)].comp[a][m];
          g2 += g * g;
        }
        xi.values[m] = 2.0 * lap + g2;
      }
      sd.grad_xi.push_back(gradient(xi));
      sd.xi.push_back(std::move(xi));
    }
  }
  return sd;
}

double entropy_dissipation(const MixtureState& state) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const std::int64_t total = state.grid.size();
  const auto C = node_coords(state.grid);
  const SpeciesDerivatives sd = species_derivatives(state, false);
  const double h2d = std::pow(state.grid.spacing, 2 * d);

  double result = 0.0;
  for (int i = 0; i < S; ++i) {
    for (int j = 0; j < S; ++j) {
      const double c = state.species.coupling(i, j);
      if (c == 0.0) continue;
      const Alpha alpha(state.species.exponent(i, j));
      const auto& fi = sd.fw[static_cast<size_t>(i)].values;
      const auto& fj = sd.fw[static_cast<size_t>(j)].values;
      const auto& gsi = sd.grad_scaled[static_cast<size_t>(i)];
      const auto& gsj = sd.grad_scaled[static_cast<size_t>(j)];
      const double pair_sum = outer_reduce(total, [&](std::int64_t a) {
        const size_t ia = static_cast<size_t>(a);
        Vec va = vec0(), ga = vec0();
        for (int cdim = 0; cdim < d; ++cdim) {
          va[cdim] = C[cdim][ia];
          ga[cdim] = gsi.comp[cdim][ia];
        }
        const double fia = fi[ia];
        double acc = 0.0;
        for (std::int64_t b = 0; b < total; ++b) {
          if (b == a) continue;
          const size_t ib = static_cast<size_t>(b);
          double r2 = 0.0, wu = 0.0, u2 = 0.0;
          Vec w, u;
          for (int cdim = 0; cdim < d; ++cdim) {
            w[cdim] = va[cdim] - C[cdim][ib];
            u[cdim] = ga[cdim] - gsj.comp[cdim][ib];
            r2 += w[cdim] * w[cdim];
            wu += w[cdim] * u[cdim];
            u2 += u[cdim] * u[cdim];
          }
          const double al = alpha(r2);
          const double chi = pair_rate_weight(al * r2 * std::sqrt(u2));
          acc += chi * al * fj[ib] * (r2 * u2 - wu * wu);
        }
        return fia * acc;
      });
      result += 0.5 * c * pair_sum;
    }
  }
  return result * h2d;
}

namespace {

// Shared per-(a,b,k) geometry for the dissipation formulas: G = L_k Psi and
// its analytic v / v_* gradients assembled from per-species grad/hess fields.
struct PairTermInputs {
  const MixtureState& state;
  const SkewBasis& basis;
  const SpeciesDerivatives sd;
  const std::array<std::vector<double>, 3> coords;

  PairTermInputs(const MixtureState& s, const SkewBasis& b)
      : state(s), basis(b), sd(species_derivatives(s, true)), coords(node_coords(s.grid)) {}
};

}  // namespace

double fisher_dissipation(const MixtureState& state, const SkewBasis& basis) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const int M = basis.size();
  const std::int64_t total = state.grid.size();
  const PairTermInputs in(state, basis);
  const double h2d = std::pow(state.grid.spacing, 2 * d);

  double result = 0.0;
  for (int i = 0; i < S; ++i) {
    const double mi = state.species.masses[static_cast<size_t>(i)];
    for (int j = 0; j < S; ++j) {
      const double c = state.species.coupling(i, j);
      if (c == 0.0) continue;
      const double mj = state.species.masses[static_cast<size_t>(j)];
      const double gamma = state.species.exponent(i, j);
      const double mass_rem = (mi + mj) / (mi * mj);
      const auto& fi = in.sd.fw[static_cast<size_t>(i)].values;
      const auto& fj = in.sd.fw[static_cast<size_t>(j)].values;
      const auto& gsi = in.sd.grad_scaled[static_cast<size_t>(i)];
      const auto& gsj = in.sd.grad_scaled[static_cast<size_t>(j)];
      const auto& Hi = in.sd.hess[static_cast<size_t>(i)];
      const auto& Hj = in.sd.hess[static_cast<size_t>(j)];

      const double pair_sum = outer_reduce(total, [&](std::int64_t a) {
        const size_t ia = static_cast<size_t>(a);
        Vec va = vec0(), ga = vec0();
        for (int cd = 0; cd < d; ++cd) {
          va[cd] = in.coords[cd][ia];
          ga[cd] = gsi.comp[cd][ia];
        }
        const double fia = fi[ia];
        double acc = 0.0;
        for (std::int64_t b = 0; b < total; ++b) {
          if (b == a) continue;
          const size_t ib = static_cast<size_t>(b);
          const double F = fia * fj[ib];
          Vec w = vec0(), u = vec0();
          double r2 = 0.0, u2 = 0.0;
          for (int cd = 0; cd < d; ++cd) {
            w[cd] = va[cd] - in.coords[cd][ib];
            u[cd] = ga[cd] - gsj.comp[cd][ib];
            r2 += w[cd] * w[cd];
            u2 += u[cd] * u[cd];
          }
          const double r = std::sqrt(r2);
          const double sqrt_alpha = std::pow(r, 0.5 * gamma);
          const double dr_sqrt_alpha = 0.5 * gamma * std::pow(r, 0.5 * gamma - 1.0);
          const double chi =
              pair_rate_weight(sqrt_alpha * sqrt_alpha * r2 * std::sqrt(u2));
          double term = 0.0;
          for (int k = 0; k < M; ++k) {
            const auto [p, q] = basis.pairs[static_cast<size_t>(k)];
            Vec bk = vec0();
            bk[p] = w[q];
            bk[q] = -w[p];
            double G = 0.0;
            for (int cd = 0; cd < d; ++cd) G += bk[cd] * u[cd];
            // grad_v G = -K u + H_i(v) b_k / m_i ; grad_v* G = K u - H_j(v*) b_k / m_j
            Vec Gv = vec0(), Gvs = vec0();
            for (int cd = 0; cd < d; ++cd) {
              double hbi = 0.0, hbj = 0.0;
              hbi = Hi[static_cast<size_t>(cd) * d + p][ia] * w[q] -
                    Hi[static_cast<size_t>(cd) * d + q][ia] * w[p];
              hbj = Hj[static_cast<size_t>(cd) * d + p][ib] * w[q] -
                    Hj[static_cast<size_t>(cd) * d + q][ib] * w[p];
              Gv[cd] = hbi / mi;
              Gvs[cd] = -hbj / mj;
            }
            Gv[p] -= u[q];
            Gv[q] += u[p];
            Gvs[p] += u[q];
            Gvs[q] -= u[p];
            // grad(sqrt_alpha G) on both slots; sigma = w / r
            double nv = 0.0, nvs = 0.0;
            for (int cd = 0; cd < d; ++cd) {
              const double sig = w[cd] / r;
              const double xv = dr_sqrt_alpha * sig * G + sqrt_alpha * Gv[cd];
              const double xvs = -dr_sqrt_alpha * sig * G + sqrt_alpha * Gvs[cd];
              nv += xv * xv;
              nvs += xvs * xvs;
            }
            term += -F * (nv / mi + nvs / mj) +
                    mass_rem * dr_sqrt_alpha * dr_sqrt_alpha * F * G * G;
          }
          acc += chi * term;
        }
        return acc;
      });
      result += c * pair_sum;
    }
  }
  return result * h2d;
}

double fisher_dissipation(const MixtureState& state) {
  return fisher_dissipation(state, SkewBasis::standard(state.grid.dim));
}

double fisher_dissipation_xi(const MixtureState& state) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const std::int64_t total = state.grid.size();
  const auto C = node_coords(state.grid);
  const SpeciesDerivatives sd = species_derivatives(state, true);
  const double h2d = std::pow(state.grid.spacing, 2 * d);

  double result = 0.0;
  for (int i = 0; i < S; ++i) {
    const double mi = state.species.masses[static_cast<size_t>(i)];
    const double mi2 = mi * mi;
    for (int j = 0; j < S; ++j) {
      const double c = state.species.coupling(i, j);
      if (c == 0.0) continue;
      const double mj = state.species.masses[static_cast<size_t>(j)];
      const double mj2 = mj * mj;
      const Alpha alpha(state.species.exponent(i, j));
      const auto& fi = sd.fw[static_cast<size_t>(i)].values;
      const auto& fj = sd.fw[static_cast<size_t>(j)].values;
      const auto& gsi = sd.grad_scaled[static_cast<size_t>(i)];
      const auto& gsj = sd.grad_scaled[static_cast<size_t>(j)];
      const auto& gxi = sd.grad_xi[static_cast<size_t>(i)];
      const auto& gxj = sd.grad_xi[static_cast<size_t>(j)];

      const double pair_sum = outer_reduce(total, [&](std::int64_t a) {
        const size_t ia = static_cast<size_t>(a);
        Vec va = vec0(), ga = vec0(), xa = vec0();
        for (int cd = 0; cd < d; ++cd) {
          va[cd] = C[cd][ia];
          ga[cd] = gsi.comp[cd][ia];
          xa[cd] = gxi.comp[cd][ia] / mi2;
        }
        const double fia = fi[ia];
        double acc = 0.0;
        for (std::int64_t b = 0; b < total; ++b) {
          if (b == a) continue;
          const size_t ib = static_cast<size_t>(b);
          Vec w = vec0(), u = vec0(), x = vec0();
          double r2 = 0.0, wu = 0.0, ux = 0.0, wx = 0.0, u2 = 0.0;
          for (int cd = 0; cd < d; ++cd) {
            w[cd] = va[cd] - C[cd][ib];
            u[cd] = ga[cd] - gsj.comp[cd][ib];
            x[cd] = xa[cd] - gxj.comp[cd][ib] / mj2;
            r2 += w[cd] * w[cd];
            wu += w[cd] * u[cd];
            ux += u[cd] * x[cd];
            wx += w[cd] * x[cd];
            u2 += u[cd] * u[cd];
          }
          const double al = alpha(r2);
          const double chi = pair_rate_weight(al * r2 * std::sqrt(u2));
          // (A u) . x = r^2 u.x - (w.u)(w.x)
          acc += chi * al * fj[ib] * (r2 * ux - wu * wx);
        }
        return fia * acc;
      });
      result += 0.5 * c * pair_sum;
    }
  }
  return result * h2d;
}

DissipationBreakdown dissipation_breakdown(const MixtureState& state, const SkewBasis& basis) {
  const int d = state.grid.dim;
  const int S = state.species.count;
  const int M = basis.size();
  const std::int64_t total = state.grid.size();
  const PairTermInputs in(state, basis);
  const double h2d = std::pow(state.grid.spacing, 2 * d);

  // ordered-pair Cartesian integrals (coupling included)
  std::vector<std::array<double, 4>> ordered(static_cast<size_t>(S) * S, {0, 0, 0, 0});

  for (int i = 0; i < S; ++i) {
    const double mi = state.species.masses[static_cast<size_t>(i)];
    for (int j = 0; j < S; ++j) {
      const double c = state.species.coupling(i, j);
      if (c == 0.0) continue;
      const double mj = state.species.masses[static_cast<size_t>(j)];
      const double msum = mi + mj;
      const double gamma = state.species.exponent(i, j);
      const double mass_rem = msum / (mi * mj);
      const auto& fi = in.sd.fw[static_cast<size_t>(i)].values;
      const auto& fj = in.sd.fw[static_cast<size_t>(j)].values;
      const auto& gsi = in.sd.grad_scaled[static_cast<size_t>(i)];
      const auto& gsj = in.sd.grad_scaled[static_cast<size_t>(j)];
      const auto& Hi = in.sd.hess[static_cast<size_t>(i)];
      const auto& Hj = in.sd.hess[static_cast<size_t>(j)];

      // four accumulators via one pass per component
      std::array<double, 4> sums{0, 0, 0, 0};
      for (int comp = 0; comp < 4; ++comp) {
        sums[static_cast<size_t>(comp)] = outer_reduce(total, [&](std::int64_t a) {
          const size_t ia = static_cast<size_t>(a);
          Vec va = vec0(), ga = vec0();
          for (int cd = 0; cd < d; ++cd) {
            va[cd] = in.coords[cd][ia];
            ga[cd] = gsi.comp[cd][ia];
          }
          const double fia = fi[ia];
          double acc = 0.0;
          for (std::int64_t b = 0; b < total; ++b) {
            if (b == a) continue;
            const size_t ib = static_cast<size_t>(b);
            const double F = fia * fj[ib];
            Vec w = vec0(), u = vec0();
            double r2 = 0.0, u2 = 0.0;
            for (int cd = 0; cd < d; ++cd) {
              w[cd] = va[cd] - in.coords[cd][ib];
              u[cd] = ga[cd] - gsj.comp[cd][ib];
              r2 += w[cd] * w[cd];
              u2 += u[cd] * u[cd];
            }
            const double r = std::sqrt(r2);
            const double alpha = std::pow(r, gamma);
            const double sqrt_alpha = std::pow(r, 0.5 * gamma);
            const double dr_sqrt_alpha = 0.5 * gamma * std::pow(r, 0.5 * gamma - 1.0);
            const double chi = pair_rate_weight(alpha * r2 * std::sqrt(u2));
            double term = 0.0;
            for (int k = 0; k < M; ++k) {
              const auto [p, q] = basis.pairs[static_cast<size_t>(k)];
              Vec bk = vec0();
              bk[p] = w[q];
              bk[q] = -w[p];
              double G = 0.0;
              for (int cd = 0; cd < d; ++cd) G += bk[cd] * u[cd];
              Vec Gv = vec0(), Gvs = vec0();
              for (int cd = 0; cd < d; ++cd) {
                const double hbi = Hi[static_cast<size_t>(cd) * d + p][ia] * w[q] -
                                   Hi[static_cast<size_t>(cd) * d + q][ia] * w[p];
                const double hbj = Hj[static_cast<size_t>(cd) * d + p][ib] * w[q] -
                                   Hj[static_cast<size_t>(cd) * d + q][ib] * w[p];
                Gv[cd] = hbi / mi;
                Gvs[cd] = -hbj / mj;
              }
              Gv[p] -= u[q];
              Gv[q] += u[p];
              Gvs[p] += u[q];
              Gvs[q] -= u[p];
              switch (comp) {
                case 0: {  // parallel: |grad_z G|^2, grad_z = grad_v + grad_v*
                  double nz = 0.0;
                  for (int cd = 0; cd < d; ++cd) {
                    const double gz = Gv[cd] + Gvs[cd];
                    nz += gz * gz;
                  }
                  term += alpha / msum * F * nz;
                  break;
                }
                case 1: {  // radial: |d_r(sqrt_alpha G)|^2
                  double sr = 0.0;
                  for (int cd = 0; cd < d; ++cd) {
                    const double grel = (mj * Gv[cd] - mi * Gvs[cd]) / msum;
                    sr += (w[cd] / r) * grel;
                  }
                  const double pr = dr_sqrt_alpha * G + sqrt_alpha * sr;
                  term += mass_rem * F * pr * pr;
                  break;
                }
                case 2: {  // spherical: alpha |(1/r) grad_sigma G|^2
                  double sr = 0.0;
                  Vec grel = vec0();
                  for (int cd = 0; cd < d; ++cd) {
                    grel[cd] = (mj * Gv[cd] - mi * Gvs[cd]) / msum;
                    sr += (w[cd] / r) * grel[cd];
                  }
                  double nt = 0.0;
                  for (int cd = 0; cd < d; ++cd) {
                    const double t = grel[cd] - (w[cd] / r) * sr;
                    nt += t * t;
                  }
                  term += mass_rem * alpha * F * nt;
                  break;
                }
                case 3: {  // remainder: (alpha')^2/4alpha |G|^2
                  term += mass_rem * dr_sqrt_alpha * dr_sqrt_alpha * F * G * G;
                  break;
                }
              }
            }
            acc += chi * term;
          }
          return acc;
        });
      }
      auto& o = ordered[static_cast<size_t>(i) * S + j];
      for (int comp = 0; comp < 4; ++comp)
        o[static_cast<size_t>(comp)] = c * sums[static_cast<size_t>(comp)] * h2d;
    }
  }

  DissipationBreakdown out;
  for (int i = 0; i < S; ++i) {
    const double mi = state.species.masses[static_cast<size_t>(i)];
    for (int j = i; j < S; ++j) {
      const double mj = state.species.masses[static_cast<size_t>(j)];
      const double c = state.species.coupling(i, j);
      PairBreakdown pb;
      pb.i = i;
      pb.j = j;
      pb.prefactor = c * std::pow(mi * mj, -3.0) * std::pow(mi + mj, 3.0);
      std::array<double, 4> sum = ordered[static_cast<size_t>(i) * S + j];
      if (j != i) {
        const auto& o = ordered[static_cast<size_t>(j) * S + i];
        for (int comp = 0; comp < 4; ++comp) sum[static_cast<size_t>(comp)] += o[static_cast<size_t>(comp)];
      }
      if (pb.prefactor > 0.0) {
        pb.d_parallel = sum[0] / pb.prefactor;
        pb.d_radial = sum[1] / pb.prefactor;
        pb.d_spherical = sum[2] / pb.prefactor;
        pb.r_spherical = sum[3] / pb.prefactor;
      }
      out.total += -sum[0] - sum[1] - sum[2] + sum[3];
      out.pairs.push_back(pb);
    }
  }
  return out;
}

DissipationBreakdown dissipation_breakdown(const MixtureState& state) {
  return dissipation_breakdown(state, SkewBasis::standard(state.grid.dim));
}

DiagnosticsRecord diagnostics(const MixtureState& state) {
  DiagnosticsRecord rec;
  rec.time = state.time;
  rec.mom = moments(state);
  rec.H = entropy(state);
  rec.I = fisher(state);
  rec.entropy_dissipation = entropy_dissipation(state);
  rec.fisher_dissipation = fisher_dissipation(state);
  rec.fisher_dissipation_xi = fisher_dissipation_xi(state);
  rec.breakdown = dissipation_breakdown(state);
  rec.clamped_node_count = species_derivatives(state, false).clamped;
  return rec;
}

}  // namespace landau
