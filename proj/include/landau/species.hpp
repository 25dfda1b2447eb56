#ifndef LANDAULAB_SPECIES_HPP
#define LANDAULAB_SPECIES_HPP

#include <vector>

namespace landau {

/// Physical parameters of the mixture: masses m_i, symmetric couplings
/// c_ij >= 0 and symmetric potential exponents gamma_ij in (-d-2, 1].
struct SpeciesSet {
  int count = 0;
  int dim = 0;
  std::vector<double> masses;     // size S
  std::vector<double> couplings;  // S x S row-major
  std::vector<double> exponents;  // S x S row-major

  double coupling(int i, int j) const { return couplings[static_cast<size_t>(i) * count + j]; }
  double exponent(int i, int j) const { return exponents[static_cast<size_t>(i) * count + j]; }
};

/// Validates and builds a SpeciesSet. Asymmetric input is rejected, never
/// silently symmetrized.
SpeciesSet make_species_set(const std::vector<double>& masses,
                            const std::vector<std::vector<double>>& couplings,
                            const std::vector<std::vector<double>>& exponents, int dim);

/// |gamma| bound under which the Fisher information is non-increasing:
/// 2 sqrt(d-1) cross-species, 2 sqrt(d+3-1/(d-1)) same-species.
double admissible_threshold(int dim, bool same_species);

struct AdmissibilityVerdict {
  int i = 0, j = 0;
  double gamma = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // threshold - |gamma|
  bool admissible = false;
};

std::vector<AdmissibilityVerdict> check_admissibility(const SpeciesSet& set, int dim);

}  // namespace landau

#endif
