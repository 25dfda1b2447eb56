#ifndef LANDAULAB_COLLISION_HPP
#define LANDAULAB_COLLISION_HPP

#include <vector>

#include "landau/grid.hpp"
#include "landau/mixture.hpp"

namespace landau {

/// Q_ji(f_j, f_i): the contribution of species j to species i, entropy form.
/// J(v) = h^d sum_{v* != v} alpha_ij A(v-v*) f_i(v) f_j(v*) u, with
/// u = grad psi_i(v)/m_i - grad psi_j(v*)/m_j, and Q = (c_ij/m_i) div J.
/// Reference double-loop implementation; `rhs` below is the production path.
GridField collision_pair(const MixtureState& state, int i, int j);

/// d/dt f_i = sum_j Q_ji for all species at once, via a fused kernel over
/// unordered node and species pairs. Agrees with summing collision_pair.
std::vector<GridField> rhs(const MixtureState& state);

}  // namespace landau

#endif
