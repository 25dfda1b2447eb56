#include "landau/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/errors.hpp"

namespace landau {

namespace {
constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;
}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw ParameterError("gauss_legendre: n must be >= 1");
  x.assign(static_cast<size_t>(n), 0.0);
  w.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<size_t>(n - 1 - i)] = z;
    w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// ---------------------------------------------------------------- d = 2 ----

namespace {

struct CircleSpectrum {
  // cosine/sine coefficients, modes 0..n/2
  std::vector<double> a, b;
};

CircleSpectrum circle_analyze(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  const int half = n / 2;
  CircleSpectrum s;
  s.a.assign(static_cast<size_t>(half) + 1, 0.0);
  s.b.assign(static_cast<size_t>(half) + 1, 0.0);
  for (int m = 0; m <= half; ++m) {
    double ca = 0.0, cb = 0.0;
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * kPi * m * k / n;
      ca += v[static_cast<size_t>(k)] * std::cos(t);
      cb += v[static_cast<size_t>(k)] * std::sin(t);
    }
    const double norm = (m == 0 || m == half) ? 1.0 / n : 2.0 / n;
    s.a[static_cast<size_t>(m)] = ca * norm;
    s.b[static_cast<size_t>(m)] = cb * norm;
  }
  return s;
}

// Synthesize d^order/dtheta^order of the trigonometric interpolant at the
// grid points. The Nyquist mode is kept only for even orders (its odd
// derivatives are not representable on the grid).
std::vector<double> circle_synthesize(const CircleSpectrum& s, int n, int order) {
  const int half = n / 2;
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double acc = (order == 0) ? s.a[0] : 0.0;
    for (int m = 1; m <= half; ++m) {
      if (m == half && (order % 2) == 1) continue;
      const double t = 2.0 * kPi * m * k / n;
      const double am = s.a[static_cast<size_t>(m)];
      const double bm = s.b[static_cast<size_t>(m)];
      double c = 0.0;
      switch (order % 4) {
        case 0: c = am * std::cos(t) + bm * std::sin(t); break;
        case 1: c = -am * std::sin(t) + bm * std::cos(t); break;
        case 2: c = -(am * std::cos(t) + bm * std::sin(t)); break;
        case 3: c = am * std::sin(t) - bm * std::cos(t); break;
      }
      acc += std::pow(static_cast<double>(m), order) * c;
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

}  // namespace

SphereField make_circle_field(std::vector<double> log_values, bool antipodal) {
  const int n = static_cast<int>(log_values.size());
  if (n < 8 || n % 2 != 0)
    throw ParameterError("sphere: circle grid size must be even and >= 8");
  if (antipodal) {
    // project onto even modes (pi-periodicity) structurally
    CircleSpectrum s = circle_analyze(log_values);
    for (int m = 1; m <= n / 2; m += 2) {
      s.a[static_cast<size_t>(m)] = 0.0;
      s.b[static_cast<size_t>(m)] = 0.0;
    }
    log_values = circle_synthesize(s, n, 0);
  }
  SphereField f;
  f.dim = 2;
  f.antipodal = antipodal;
  f.log_values = std::move(log_values);
  return f;
}

// ---------------------------------------------------------------- d = 3 ----

namespace {

inline int sh_index(int l, int m) { return l * l + l + m; }

// enforce conjugate symmetry c_{l,-m} = (-1)^m conj(c_{l,m}) (real field)
void conj_symmetrize(int lmax, std::vector<cplx>& c) {
  for (int l = 0; l <= lmax; ++l) {
    c[static_cast<size_t>(sh_index(l, 0))] =
        cplx(c[static_cast<size_t>(sh_index(l, 0))].real(), 0.0);
    for (int m = 1; m <= l; ++m) {
      const size_t ip = static_cast<size_t>(sh_index(l, m));
      const size_t in = static_cast<size_t>(sh_index(l, -m));
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const cplx avg = 0.5 * (c[ip] + sign * std::conj(c[in]));
      c[ip] = avg;
      c[in] = sign * std::conj(avg);
    }
  }
}

// Rotation generators b_k . grad acting on SH coefficients (degree-preserving).
// With L_+/- the standard ladder operators and D_z = d/dphi:
//   D_x = i (L_+ + L_-) / 2,  D_y = (L_+ - L_-) / 2,  D_z c_{lm} = i m c_{lm}.
double ladder_up(int l, int m) {  // L_+ Y_{lm} -> lambda Y_{l,m+1}
  return std::sqrt(static_cast<double>(l * (l + 1) - m * (m + 1)));
}
double ladder_down(int l, int m) {  // L_- Y_{lm} -> lambda Y_{l,m-1}
  return std::sqrt(static_cast<double>(l * (l + 1) - m * (m - 1)));
}

std::vector<cplx> apply_generator(int lmax, int axis, const std::vector<cplx>& c) {
  std::vector<cplx> out(c.size(), cplx(0.0, 0.0));
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const cplx cm = c[static_cast<size_t>(sh_index(l, m))];
      if (cm == cplx(0.0, 0.0)) continue;
      switch (axis) {
        case 0: {  // i (L_+ + L_-) / 2
          if (m + 1 <= l)
            out[static_cast<size_t>(sh_index(l, m + 1))] += cplx(0.0, 0.5) * ladder_up(l, m) * cm;
          if (m - 1 >= -l)
            out[static_cast<size_t>(sh_index(l, m - 1))] += cplx(0.0, 0.5) * ladder_down(l, m) * cm;
          break;
        }
        case 1: {  // (L_+ - L_-) / 2
          if (m + 1 <= l)
            out[static_cast<size_t>(sh_index(l, m + 1))] += 0.5 * ladder_up(l, m) * cm;
          if (m - 1 >= -l)
            out[static_cast<size_t>(sh_index(l, m - 1))] -= 0.5 * ladder_down(l, m) * cm;
          break;
        }
        default:
          out[static_cast<size_t>(sh_index(l, m))] += cplx(0.0, static_cast<double>(m)) * cm;
      }
    }
  }
  return out;
}

// Fully normalized associated Legendre P~_l^m(x) (Condon-Shortley phase),
// so Y_lm = P~_l^m(x) e^{i m phi}. Fills table[l][m] for m >= 0.
void legendre_table(int lmax, double x, std::vector<std::vector<double>>& P) {
  P.assign(static_cast<size_t>(lmax) + 1, {});
  for (int l = 0; l <= lmax; ++l) P[static_cast<size_t>(l)].assign(static_cast<size_t>(l) + 1, 0.0);
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  P[0][0] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= lmax; ++m)
    P[static_cast<size_t>(m)][static_cast<size_t>(m)] =
        -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sx *
        P[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)];
  for (int m = 0; m < lmax; ++m)
    P[static_cast<size_t>(m + 1)][static_cast<size_t>(m)] =
        x * std::sqrt(2.0 * m + 3.0) * P[static_cast<size_t>(m)][static_cast<size_t>(m)];
  for (int m = 0; m <= lmax; ++m)
    for (int l = m + 2; l <= lmax; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
      const double b =
          std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) / (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
      P[static_cast<size_t>(l)][static_cast<size_t>(m)] =
          a * (x * P[static_cast<size_t>(l - 1)][static_cast<size_t>(m)] -
               b * P[static_cast<size_t>(l - 2)][static_cast<size_t>(m)]);
    }
}

struct SphereQuadrature {
  // evaluation matrix: for node idx and coefficient idx, Y_{lm}(node)
  std::vector<cplx> Y;  // node-major, size nodes * ncoef
  std::vector<double> weight;
  int nodes = 0, ncoef = 0;
};

SphereQuadrature build_quadrature(int lmax, int n_lat, int n_lon) {
  SphereQuadrature q;
  q.ncoef = (lmax + 1) * (lmax + 1);
  q.nodes = n_lat * n_lon;
  q.Y.resize(static_cast<size_t>(q.nodes) * q.ncoef);
  q.weight.resize(static_cast<size_t>(q.nodes));
  std::vector<double> gx, gw;
  gauss_legendre(n_lat, gx, gw);
  std::vector<std::vector<double>> P;
  for (int i = 0; i < n_lat; ++i) {
    legendre_table(lmax, gx[static_cast<size_t>(i)], P);
    for (int j = 0; j < n_lon; ++j) {
      const double phi = 2.0 * kPi * j / n_lon;
      const size_t node = static_cast<size_t>(i) * n_lon + j;
      q.weight[node] = gw[static_cast<size_t>(i)] * (2.0 * kPi / n_lon);
      cplx* row = &q.Y[node * static_cast<size_t>(q.ncoef)];
      for (int l = 0; l <= lmax; ++l)
        for (int m = -l; m <= l; ++m) {
          const int am = std::abs(m);
          const cplx e(std::cos(am * phi), std::sin(am * phi));
          cplx y = P[static_cast<size_t>(l)][static_cast<size_t>(am)] * e;
          if (m < 0) y = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
          row[sh_index(l, m)] = y;
        }
    }
  }
  return q;
}

std::vector<double> evaluate_real(const SphereQuadrature& q, const std::vector<cplx>& c) {
  std::vector<double> out(static_cast<size_t>(q.nodes));
  for (int n = 0; n < q.nodes; ++n) {
    const cplx* row = &q.Y[static_cast<size_t>(n) * q.ncoef];
    double acc = 0.0;
    for (int k = 0; k < q.ncoef; ++k)
      acc += row[k].real() * c[static_cast<size_t>(k)].real() -
             row[k].imag() * c[static_cast<size_t>(k)].imag();
    out[static_cast<size_t>(n)] = acc;
  }
  return out;
}

}  // namespace

SphereField make_sphere_field(int lmax, std::vector<cplx> coeff, bool antipodal,
                              int n_lat, int n_lon) {
  if (lmax < 0) throw ParameterError("sphere: lmax must be nonnegative");
  if (static_cast<int>(coeff.size()) != (lmax + 1) * (lmax + 1))
    throw ParameterError("sphere: coefficient count must be (lmax+1)^2");
  if (n_lat < lmax + 1 || n_lon < 2 * lmax + 1)
    throw ParameterError("sphere: quadrature under-resolves the band limit");
  conj_symmetrize(lmax, coeff);
  if (antipodal)
    for (int l = 1; l <= lmax; l += 2)
      for (int m = -l; m <= l; ++m) coeff[static_cast<size_t>(sh_index(l, m))] = 0.0;
  SphereField f;
  f.dim = 3;
  f.antipodal = antipodal;
  f.lmax = lmax;
  f.coeff = std::move(coeff);
  f.n_lat = n_lat;
  f.n_lon = n_lon;
  return f;
}

SphereNodeData evaluate(const SphereField& phi) {
  SphereNodeData out;
  if (phi.dim == 2) {
    const int n = static_cast<int>(phi.log_values.size());
    const CircleSpectrum s = circle_analyze(phi.log_values);
    out.log_phi = phi.log_values;
    const std::vector<double> d1 = circle_synthesize(s, n, 1);
    const std::vector<double> d2 = circle_synthesize(s, n, 2);
    out.gamma.resize(static_cast<size_t>(n));
    out.gamma2.resize(static_cast<size_t>(n));
    out.weight.assign(static_cast<size_t>(n), 2.0 * kPi / n);
    for (int k = 0; k < n; ++k) {
      out.gamma[static_cast<size_t>(k)] = d1[static_cast<size_t>(k)] * d1[static_cast<size_t>(k)];
      out.gamma2[static_cast<size_t>(k)] = d2[static_cast<size_t>(k)] * d2[static_cast<size_t>(k)];
    }
    return out;
  }
  if (phi.dim != 3) throw ParameterError("sphere: dim must be 2 or 3");
  const SphereQuadrature q = build_quadrature(phi.lmax, phi.n_lat, phi.n_lon);
  out.log_phi = evaluate_real(q, phi.coeff);
  out.weight = q.weight;
  out.gamma.assign(static_cast<size_t>(q.nodes), 0.0);
  out.gamma2.assign(static_cast<size_t>(q.nodes), 0.0);
  for (int k = 0; k < 3; ++k) {
    const std::vector<cplx> dk = apply_generator(phi.lmax, k, phi.coeff);
    const std::vector<double> vk = evaluate_real(q, dk);
    for (int n = 0; n < q.nodes; ++n)
      out.gamma[static_cast<size_t>(n)] += vk[static_cast<size_t>(n)] * vk[static_cast<size_t>(n)];
    for (int k2 = 0; k2 < 3; ++k2) {
      const std::vector<double> vkk =
          evaluate_real(q, apply_generator(phi.lmax, k2, dk));
      for (int n = 0; n < q.nodes; ++n)
        out.gamma2[static_cast<size_t>(n)] +=
            vkk[static_cast<size_t>(n)] * vkk[static_cast<size_t>(n)];
    }
  }
  return out;
}

std::vector<double> gamma(const SphereField& phi) { return evaluate(phi).gamma; }
std::vector<double> gamma2(const SphereField& phi) { return evaluate(phi).gamma2; }

namespace {

struct Integrals {
  double g = 0.0, g2 = 0.0;  // int phi Gamma, int phi Gamma2
};

Integrals weighted_integrals(const SphereField& phi) {
  const SphereNodeData nd = evaluate(phi);
  Integrals I;
  for (size_t n = 0; n < nd.weight.size(); ++n) {
    const double p = std::exp(nd.log_phi[n]) * nd.weight[n];
    I.g += p * nd.gamma[n];
    I.g2 += p * nd.gamma2[n];
  }
  return I;
}

}  // namespace

double ratio(const SphereField& phi) {
  const Integrals I = weighted_integrals(phi);
  if (!(I.g > 1e-14))
    throw NumericalError("ratio: indeterminate (Gamma integral below floor)");
  return I.g2 / I.g;
}

InequalityVerdict check_inequality(const SphereField& phi, bool symmetric,
                                   double tolerance) {
  if (symmetric && !phi.antipodal)
    throw ParameterError("check_inequality: symmetric verdict requires an antipodal field");
  const int d = phi.dim;
  InequalityVerdict v;
  v.lambda = symmetric ? (d + 3 - 1.0 / (d - 1)) : (d - 1.0);
  const Integrals I = weighted_integrals(phi);
  v.gamma_integral = I.g;
  v.gamma2_integral = I.g2;
  v.margin = I.g2 - v.lambda * I.g;
  v.pass = v.margin >= -tolerance;
  return v;
}

SphereField random_circle_field(int n_theta, int max_mode, double scale, bool antipodal,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n_theta), 0.0);
  const int step = antipodal ? 2 : 1;
  const int start = antipodal ? 2 : 1;
  for (int m = start; m <= max_mode; m += step) {
    const double a = scale * N(rng);
    const double b = scale * N(rng);
    for (int k = 0; k < n_theta; ++k) {
      const double t = 2.0 * kPi * m * k / n_theta;
      v[static_cast<size_t>(k)] += a * std::cos(t) + b * std::sin(t);
    }
  }
  return make_circle_field(std::move(v), antipodal);
}

SphereField random_sphere_field(int lmax, double scale, bool antipodal,
                                std::mt19937_64& rng, int n_lat, int n_lon) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<cplx> c(static_cast<size_t>((lmax + 1) * (lmax + 1)), cplx(0.0, 0.0));
  const int step = antipodal ? 2 : 1;
  const int start = antipodal ? 2 : 1;
  for (int l = start; l <= lmax; l += step) {
    c[static_cast<size_t>(sh_index(l, 0))] = cplx(scale * N(rng), 0.0);
    for (int m = 1; m <= l; ++m)
      c[static_cast<size_t>(sh_index(l, m))] = scale * cplx(N(rng), N(rng));
  }
  return make_sphere_field(lmax, std::move(c), antipodal, n_lat, n_lon);
}

SphereField rotate(const SphereField& phi, int axis, double angle) {
  if (phi.dim != 3) throw ParameterError("rotate: only d=3 fields rotate in coefficient space");
  if (axis < 0 || axis > 2) throw ParameterError("rotate: axis must be 0, 1, or 2");
  std::vector<cplx> out(phi.coeff.size(), cplx(0.0, 0.0));
  for (int l = 0; l <= phi.lmax; ++l) {
    const int n = 2 * l + 1;
    // generator restricted to degree l, dense (2l+1)^2
    std::vector<cplx> M(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
    for (int m = -l; m <= l; ++m) {
      std::vector<cplx> e(phi.coeff.size(), cplx(0.0, 0.0));
      e[static_cast<size_t>(sh_index(l, m))] = 1.0;
      const std::vector<cplx> De = apply_generator(phi.lmax, axis, e);
      for (int m2 = -l; m2 <= l; ++m2)
        M[static_cast<size_t>(m2 + l) * n + (m + l)] =
            angle * De[static_cast<size_t>(sh_index(l, m2))];
    }
    // matrix exponential: scaling-and-squaring with a Taylor series
    double norm = 0.0;
    for (const cplx& x : M) norm = std::max(norm, std::abs(x));
    int squarings = 0;
    while (norm * n > 0.5 && squarings < 40) {
      norm *= 0.5;
      ++squarings;
    }
    const double sc = std::ldexp(1.0, -squarings);
    for (cplx& x : M) x *= sc;
    std::vector<cplx> E(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
    std::vector<cplx> term(E), tmp(E);
    for (int i = 0; i < n; ++i) {
      E[static_cast<size_t>(i) * n + i] = 1.0;
      term[static_cast<size_t>(i) * n + i] = 1.0;
    }
    for (int k = 1; k <= 20; ++k) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          cplx acc(0.0, 0.0);
          for (int p = 0; p < n; ++p)
            acc += term[static_cast<size_t>(i) * n + p] * M[static_cast<size_t>(p) * n + j];
          tmp[static_cast<size_t>(i) * n + j] = acc / static_cast<double>(k);
        }
      term.swap(tmp);
      for (size_t idx = 0; idx < E.size(); ++idx) E[idx] += term[idx];
    }
    for (int sq = 0; sq < squarings; ++sq) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          cplx acc(0.0, 0.0);
          for (int p = 0; p < n; ++p)
            acc += E[static_cast<size_t>(i) * n + p] * E[static_cast<size_t>(p) * n + j];
          tmp[static_cast<size_t>(i) * n + j] = acc;
        }
      E.swap(tmp);
    }
    for (int m2 = -l; m2 <= l; ++m2) {
      cplx acc(0.0, 0.0);
      for (int m = -l; m <= l; ++m)
        acc += E[static_cast<size_t>(m2 + l) * n + (m + l)] *
               phi.coeff[static_cast<size_t>(sh_index(l, m))];
      out[static_cast<size_t>(sh_index(l, m2))] = acc;
    }
  }
  SphereField r = phi;
  r.coeff = std::move(out);
  conj_symmetrize(r.lmax, r.coeff);
  return r;
}

double estimate_constant(int dim, bool symmetric, const SearchOptions& options) {
  if (dim != 2 && dim != 3) throw ParameterError("estimate_constant: dim must be 2 or 3");
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> N(0.0, 1.0);

  // real parameter vector -> field
  const int step = symmetric ? 2 : 1;
  const int start = symmetric ? 2 : 1;
  std::vector<std::pair<int, int>> dofs;  // (mode-or-l, slot)
  if (dim == 2) {
    for (int m = start; m <= options.max_degree; m += step) {
      dofs.emplace_back(m, 0);
      dofs.emplace_back(m, 1);
    }
  } else {
    for (int l = start; l <= options.max_degree; l += step) {
      dofs.emplace_back(l, 0);  // Re c_{l0}
      for (int m = 1; m <= l; ++m) {
        dofs.emplace_back(l, 2 * m);
        dofs.emplace_back(l, 2 * m + 1);
      }
    }
  }
  auto objective = [&](const std::vector<double>& p) -> double {
    try {
      if (dim == 2) {
        const int n = options.resolution;
        std::vector<double> v(static_cast<size_t>(n), 0.0);
        for (size_t i = 0; i < dofs.size(); ++i) {
          const int m = dofs[i].first;
          for (int k = 0; k < n; ++k) {
            const double t = 2.0 * kPi * m * k / n;
            v[static_cast<size_t>(k)] += p[i] * (dofs[i].second == 0 ? std::cos(t) : std::sin(t));
          }
        }
        return ratio(make_circle_field(std::move(v), symmetric));
      }
      const int lmax = options.max_degree;
      std::vector<cplx> c(static_cast<size_t>((lmax + 1) * (lmax + 1)), cplx(0.0, 0.0));
      for (size_t i = 0; i < dofs.size(); ++i) {
        const int l = dofs[i].first;
        if (dofs[i].second == 0) {
          c[static_cast<size_t>(sh_index(l, 0))] += p[i];
        } else {
          const int m = dofs[i].second / 2;
          const bool im = dofs[i].second % 2;
          c[static_cast<size_t>(sh_index(l, m))] += im ? cplx(0.0, p[i]) : cplx(p[i], 0.0);
        }
      }
      return ratio(make_sphere_field(lmax, std::move(c), symmetric));
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    std::vector<double> p(dofs.size());
    for (double& x : p) x = options.scale * N(rng);
    double val = objective(p);
    double h = options.scale * 0.5;
    for (int it = 0; it < options.iterations; ++it) {
      bool improved = false;
      for (size_t i = 0; i < p.size(); ++i) {
        for (const double s : {h, -h}) {
          std::vector<double> q = p;
          q[i] += s;
          const double v = objective(q);
          if (v < val) {
            val = v;
            p = std::move(q);
            improved = true;
          }
        }
      }
      if (!improved) {
        h *= 0.5;
        if (h < 1e-6) break;
      }
    }
    best = std::min(best, val);
  }
  return best;
}

}  // namespace landau
