#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "landau/errors.hpp"
#include "landau/species.hpp"

using namespace landau;

TEST_CASE("make_species_set validates input") {
  CHECK_THROWS_AS(make_species_set({1.0, -2.0}, {{1, 1}, {1, 1}}, {{0, 0}, {0, 0}}, 2),
                  ParameterError);
  // asymmetric coupling is rejected, never symmetrized
  CHECK_THROWS_AS(make_species_set({1.0, 2.0}, {{1, 2}, {3, 1}}, {{0, 0}, {0, 0}}, 2),
                  ParameterError);
  CHECK_THROWS_AS(make_species_set({1.0, 2.0}, {{1, -1}, {-1, 1}}, {{0, 0}, {0, 0}}, 2),
                  ParameterError);
  // gamma must lie in (-d-2, 1]
  CHECK_THROWS_AS(make_species_set({1.0}, {{1}}, {{1.5}}, 2), ParameterError);
  CHECK_THROWS_AS(make_species_set({1.0}, {{1}}, {{-4.0}}, 2), ParameterError);
  CHECK_THROWS_AS(make_species_set({1.0, 2.0}, {{1, 1}, {1, 1}}, {{0, 1}, {0.5, 0}}, 2),
                  ParameterError);
  // ragged matrices
  CHECK_THROWS_AS(make_species_set({1.0, 2.0}, {{1, 1}}, {{0, 0}, {0, 0}}, 2), ParameterError);

  const SpeciesSet s = make_species_set({1.0, 2.0}, {{1, 0.5}, {0.5, 2}}, {{0, 1}, {1, -1}}, 3);
  CHECK(s.count == 2);
  CHECK(s.coupling(0, 1) == 0.5);
  CHECK(s.exponent(1, 1) == -1.0);
}

TEST_CASE("admissible thresholds match the closed forms") {
  for (int d : {2, 3}) {
    CHECK(admissible_threshold(d, false) ==
          doctest::Approx(2.0 * std::sqrt(d - 1.0)).epsilon(1e-15));
    CHECK(admissible_threshold(d, true) ==
          doctest::Approx(2.0 * std::sqrt(d + 3.0 - 1.0 / (d - 1.0))).epsilon(1e-15));
  }
  // d = 3 pins: 2 sqrt(2) and 2 sqrt(11/2)
  CHECK(admissible_threshold(3, false) == doctest::Approx(2.828427124746).epsilon(1e-12));
  CHECK(admissible_threshold(3, true) == doctest::Approx(4.690415759823).epsilon(1e-12));
}

TEST_CASE("Coulomb at d=3 is admissible same-species, not cross-species") {
  const SpeciesSet s = make_species_set({1.0, 1836.0}, {{1, 1}, {1, 1}},
                                        {{-3, -3}, {-3, -3}}, 3);
  const auto verdicts = check_admissibility(s, 3);
  bool saw_same = false, saw_cross = false;
  for (const auto& v : verdicts) {
    if (v.i == v.j) {
      CHECK(v.admissible);
      saw_same = true;
    } else {
      CHECK_FALSE(v.admissible);
      saw_cross = true;
    }
    CHECK(v.margin == doctest::Approx(v.threshold - 3.0).epsilon(1e-14));
  }
  CHECK(saw_same);
  CHECK(saw_cross);
}
