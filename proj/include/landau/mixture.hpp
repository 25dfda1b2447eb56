#ifndef LANDAULAB_MIXTURE_HPP
#define LANDAULAB_MIXTURE_HPP

#include <vector>

#include "landau/errors.hpp"
#include "landau/grid.hpp"
#include "landau/species.hpp"

namespace landau {

/// The unknown of the system: S nonnegative grid fields at a time instant.
/// Values below `floor` are treated as `floor` inside logarithms.
struct MixtureState {
  SpeciesSet species;
  VelocityGrid grid;
  std::vector<GridField> fields;  // size S, all on `grid`
  double time = 0.0;
  double floor = 1e-30;
};

inline MixtureState make_state(const SpeciesSet& species, const VelocityGrid& grid,
                               std::vector<GridField> fields, double floor = 1e-30) {
  if (static_cast<int>(fields.size()) != species.count)
    throw ParameterError("mixture: field count must match species count");
  for (const auto& f : fields)
    if (!(f.grid == grid)) throw ParameterError("mixture: all fields must share one grid");
  if (species.dim != grid.dim)
    throw ParameterError("mixture: species and grid dimension mismatch");
  return MixtureState{species, grid, std::move(fields), 0.0, floor};
}

}  // namespace landau

#endif
