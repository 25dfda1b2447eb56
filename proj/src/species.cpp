#include "landau/species.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {
std::string entry(const char* name, int i, int j) {
  return std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}
}  // namespace

SpeciesSet make_species_set(const std::vector<double>& masses,
                            const std::vector<std::vector<double>>& couplings,
                            const std::vector<std::vector<double>>& exponents, int dim) {
  const int S = static_cast<int>(masses.size());
  if (S < 1) throw ParameterError("species: at least one species required");
  if (dim < 2) throw ParameterError("species: dim must be >= 2");
  auto check_square = [&](const std::vector<std::vector<double>>& m, const char* name) {
    if (static_cast<int>(m.size()) != S)
      throw ParameterError(std::string("species: ") + name + " must be " + std::to_string(S) +
                           "x" + std::to_string(S));
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != S)
        throw ParameterError(std::string("species: ") + name + " must be square of size " +
                             std::to_string(S));
  };
  check_square(couplings, "couplings");
  check_square(exponents, "exponents");

  SpeciesSet set;
  set.count = S;
  set.dim = dim;
  set.masses = masses;
  set.couplings.resize(static_cast<size_t>(S) * S);
  set.exponents.resize(static_cast<size_t>(S) * S);

  for (int i = 0; i < S; ++i) {
    if (!(masses[i] > 0.0))
      throw ParameterError("species: nonpositive mass m[" + std::to_string(i) + "]");
    for (int j = 0; j < S; ++j) {
      const double c = couplings[i][j];
      const double g = exponents[i][j];
      if (c != couplings[j][i])
        throw ParameterError("species: asymmetric " + entry("couplings", i, j));
      if (g != exponents[j][i])
        throw ParameterError("species: asymmetric " + entry("exponents", i, j));
      if (!(c >= 0.0))
        throw ParameterError("species: negative " + entry("couplings", i, j));
      if (!(g > -dim - 2.0) || !(g <= 1.0))
        throw ParameterError("species: " + entry("exponents", i, j) + " = " + std::to_string(g) +
                             " outside (" + std::to_string(-dim - 2) + ", 1]");
      set.couplings[static_cast<size_t>(i) * S + j] = c;
      set.exponents[static_cast<size_t>(i) * S + j] = g;
    }
  }
  return set;
}

double admissible_threshold(int dim, bool same_species) {
  if (dim < 2) throw ParameterError("admissible_threshold: dim must be >= 2");
  const double d = dim;
  return same_species ? 2.0 * std::sqrt(d + 3.0 - 1.0 / (d - 1.0))
                      : 2.0 * std::sqrt(d - 1.0);
}

std::vector<AdmissibilityVerdict> check_admissibility(const SpeciesSet& set, int dim) {
  std::vector<AdmissibilityVerdict> verdicts;
  verdicts.reserve(static_cast<size_t>(set.count) * set.count);
  for (int i = 0; i < set.count; ++i) {
    for (int j = 0; j < set.count; ++j) {
      AdmissibilityVerdict v;
      v.i = i;
      v.j = j;
      v.gamma = set.exponent(i, j);
      v.threshold = admissible_threshold(dim, i == j);
      v.margin = v.threshold - std::fabs(v.gamma);
      v.admissible = v.margin >= 0.0;
      verdicts.push_back(v);
    }
  }
  return verdicts;
}

}  // namespace landau
