#ifndef LANDAULAB_SPHERE_HPP
#define LANDAULAB_SPHERE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace landau {

/// A positive function phi on S^{d-1}, stored as log phi so positivity is
/// structural. d=2: values of log phi on a uniform angle grid (spectral
/// differentiation). d=3: complex spherical-harmonic coefficients of log phi
/// up to degree lmax (idx = l^2 + l + m), differentiated via the rotation
/// generators, with a Gauss-Legendre x uniform quadrature node set.
///
/// The antipodal flag is enforced structurally at construction: d=2 keeps
/// only even Fourier modes (pi-periodicity), d=3 only even-degree harmonics.
struct SphereField {
  int dim = 0;
  bool antipodal = false;
  // d = 2
  std::vector<double> log_values;  // size n_theta (even), theta_k = 2 pi k / n
  // d = 3
  int lmax = 0;
  std::vector<std::complex<double>> coeff;  // size (lmax+1)^2, conjugate-symmetric
  int n_lat = 32, n_lon = 64;
};

SphereField make_circle_field(std::vector<double> log_values, bool antipodal);
SphereField make_sphere_field(int lmax, std::vector<std::complex<double>> coeff,
                              bool antipodal, int n_lat = 32, int n_lon = 64);

/// log phi, Gamma(log phi) = |grad_sigma log phi|^2 and
/// Gamma2(log phi) = sum_k |grad_sigma (b_k . grad_sigma log phi)|^2
/// at the quadrature nodes, plus the node weights.
struct SphereNodeData {
  std::vector<double> log_phi;
  std::vector<double> gamma;
  std::vector<double> gamma2;
  std::vector<double> weight;  // quadrature weights, sum = |S^{d-1}|
};

SphereNodeData evaluate(const SphereField& phi);

std::vector<double> gamma(const SphereField& phi);
std::vector<double> gamma2(const SphereField& phi);

/// int phi Gamma2(log phi) / int phi Gamma(log phi).
double ratio(const SphereField& phi);

struct InequalityVerdict {
  double lambda = 0.0;          // d-1, or d+3-1/(d-1) in the antipodal case
  double gamma_integral = 0.0;  // int phi Gamma(log phi)
  double gamma2_integral = 0.0; // int phi Gamma2(log phi)
  double margin = 0.0;          // gamma2_integral - lambda * gamma_integral
  bool pass = false;
};

InequalityVerdict check_inequality(const SphereField& phi, bool symmetric,
                                   double tolerance = 1e-8);

/// Seeded random band-limited fields for the verification batteries.
SphereField random_circle_field(int n_theta, int max_mode, double scale, bool antipodal,
                                std::mt19937_64& rng);
SphereField random_sphere_field(int lmax, double scale, bool antipodal,
                                std::mt19937_64& rng, int n_lat = 32, int n_lon = 64);

/// Rotate a d=3 field about coordinate axis k (0,1,2) by `angle`, exactly in
/// coefficient space (per-degree matrix exponential of the generator).
SphereField rotate(const SphereField& phi, int axis, double angle);

struct SearchOptions {
  int restarts = 8;
  int iterations = 200;
  int resolution = 128;  // n_theta (d=2) or lmax cap source (d=3 uses max_degree)
  int max_degree = 4;    // band limit of the search family
  double scale = 0.5;    // initial coefficient scale
  std::uint64_t seed = 1;
};

/// Gradient-free minimization of ratio() over band-limited fields.
/// Exploratory: the returned infimum is reported, never asserted against.
double estimate_constant(int dim, bool symmetric, const SearchOptions& options);

/// Gauss-Legendre nodes/weights on [-1, 1] (exposed for tests).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace landau

#endif
