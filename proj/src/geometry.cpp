#include "landau/geometry.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

SkewBasis SkewBasis::standard(int dim) {
  if (dim < 2) throw ParameterError("skew basis: dim must be >= 2");
  SkewBasis b;
  b.dim = dim;
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) b.pairs.emplace_back(p, q);
  return b;
}

Vec b_vector(const SkewBasis& basis, int k, const Vec& w) {
  if (k < 0 || k >= basis.size())
    throw ParameterError("b_vector: k out of range: " + std::to_string(k));
  const auto [p, q] = basis.pairs[static_cast<size_t>(k)];
  Vec b = vec0();
  b[p] = w[q];
  b[q] = -w[p];
  return b;
}

std::vector<double> projection_tensor(const Vec& w, int dim) {
  const double w2 = norm2(w, dim);
  std::vector<double> A(static_cast<size_t>(dim) * dim, 0.0);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      A[static_cast<size_t>(a) * dim + b] = (a == b ? w2 : 0.0) - w[a] * w[b];
    }
  }
  return A;
}

double apply_L(const SkewBasis& basis, int k, const Vec& grad_psi_i_at_v,
               const Vec& grad_psi_j_at_vstar, const PairPoint& pair) {
  const Vec w = sub(pair.v, pair.vstar, pair.dim);
  const Vec b = b_vector(basis, k, w);
  return dot(b, grad_psi_i_at_v, pair.dim) / pair.mi -
         dot(b, grad_psi_j_at_vstar, pair.dim) / pair.mj;
}

ZrsPoint to_zrs(const PairPoint& pair) {
  ZrsPoint p;
  p.dim = pair.dim;
  const double msum = pair.mi + pair.mj;
  for (int c = 0; c < pair.dim; ++c)
    p.z[c] = (pair.mi * pair.v[c] + pair.mj * pair.vstar[c]) / msum;
  const Vec w = sub(pair.v, pair.vstar, pair.dim);
  p.r = norm(w, pair.dim);
  if (p.r > 0.0) {
    p.sigma = scale(w, 1.0 / p.r, pair.dim);
  } else {
    p.degenerate = true;
    p.sigma = vec0();
    p.sigma[0] = 1.0;  // arbitrary fixed direction; carries zero weight (A(0)=0)
  }
  return p;
}

PairPoint from_zrs(const Vec& z, double r, const Vec& sigma, double mi, double mj, int dim) {
  if (r < 0.0) throw ParameterError("from_zrs: r must be nonnegative");
  if (r > 0.0 && std::fabs(norm(sigma, dim) - 1.0) > 1e-12)
    throw ParameterError("from_zrs: sigma must be a unit vector");
  PairPoint pair;
  pair.dim = dim;
  pair.mi = mi;
  pair.mj = mj;
  const double msum = mi + mj;
  for (int c = 0; c < dim; ++c) {
    pair.v[c] = z[c] + mj / msum * r * sigma[c];
    pair.vstar[c] = z[c] - mi / msum * r * sigma[c];
  }
  return pair;
}

PairInvariants pair_invariants(const PairPoint& pair) {
  PairInvariants inv;
  for (int c = 0; c < pair.dim; ++c)
    inv.momentum[c] = pair.mi * pair.v[c] + pair.mj * pair.vstar[c];
  inv.energy = pair.mi * norm2(pair.v, pair.dim) + pair.mj * norm2(pair.vstar, pair.dim);
  return inv;
}

}  // namespace landau
