#ifndef LANDAULAB_GEOMETRY_HPP
#define LANDAULAB_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "landau/vec.hpp"

namespace landau {

/// Basis of so(d) as index pairs (p_k, q_k), p_k < q_k, M = d(d-1)/2.
/// The standard enumeration is lexicographic and frozen; all dissipation
/// sums over k must be independent of it.
struct SkewBasis {
  int dim = 0;
  std::vector<std::pair<int, int>> pairs;

  static SkewBasis standard(int dim);
  int size() const { return static_cast<int>(pairs.size()); }
};

/// b_k(w) = w_{q_k} e_{p_k} - w_{p_k} e_{q_k}.
Vec b_vector(const SkewBasis& basis, int k, const Vec& w);

/// A(w) = |w|^2 I - w (x) w, the scaled projection onto w-perp.
/// Row-major d x d.
std::vector<double> projection_tensor(const Vec& w, int dim);

struct PairPoint {
  int dim = 0;
  Vec v = vec0();
  Vec vstar = vec0();
  double mi = 1.0;
  double mj = 1.0;
};

struct ZrsPoint {
  int dim = 0;
  Vec z = vec0();      // center-of-mass velocity
  double r = 0.0;      // relative speed
  Vec sigma = vec0();  // unit relative direction (arbitrary fixed when degenerate)
  bool degenerate = false;  // v == v_*
};

/// L^ij_k applied to Psi = psi_i(v) + psi_j(v_*), given the two gradients:
/// (1/m_i) b_k(v-v_*).grad_psi_i - (1/m_j) b_k(v-v_*).grad_psi_j.
double apply_L(const SkewBasis& basis, int k, const Vec& grad_psi_i_at_v,
               const Vec& grad_psi_j_at_vstar, const PairPoint& pair);

ZrsPoint to_zrs(const PairPoint& pair);
PairPoint from_zrs(const Vec& z, double r, const Vec& sigma, double mi, double mj, int dim);

struct PairInvariants {
  Vec momentum = vec0();  // m_i v + m_j v_*
  double energy = 0.0;    // m_i |v|^2 + m_j |v_*|^2
};

PairInvariants pair_invariants(const PairPoint& pair);

}  // namespace landau

#endif
