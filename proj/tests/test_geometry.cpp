#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "landau/geometry.hpp"

using namespace landau;

namespace {
Vec random_vec(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  Vec v = vec0();
  for (int c = 0; c < d; ++c) v[c] = U(rng);
  return v;
}
}  // namespace

TEST_CASE("standard skew basis enumerates d(d-1)/2 lexicographic pairs") {
  const SkewBasis b2 = SkewBasis::standard(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2.pairs[0] == std::pair<int, int>{0, 1});
  const SkewBasis b3 = SkewBasis::standard(3);
  REQUIRE(b3.size() == 3);
  CHECK(b3.pairs[0] == std::pair<int, int>{0, 1});
  CHECK(b3.pairs[1] == std::pair<int, int>{0, 2});
  CHECK(b3.pairs[2] == std::pair<int, int>{1, 2});
}

TEST_CASE("b_k(w) is orthogonal to w and spans the A(w) quadratic form") {
  std::mt19937_64 rng(3);
  for (int d : {2, 3}) {
    const SkewBasis basis = SkewBasis::standard(d);
    for (int t = 0; t < 20; ++t) {
      const Vec w = random_vec(rng, d);
      const Vec u = random_vec(rng, d);
      double quad = 0.0;
      for (int k = 0; k < basis.size(); ++k) {
        const Vec bk = b_vector(basis, k, w);
        CHECK(dot(bk, w, d) == doctest::Approx(0.0).epsilon(1e-13));
        const double bu = dot(bk, u, d);
        quad += bu * bu;
      }
      // u . A(w) u = sum_k (b_k(w) . u)^2
      const auto A = projection_tensor(w, d);
      double ref = 0.0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) ref += u[r] * A[static_cast<size_t>(r * d + c)] * u[c];
      CHECK(quad == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("projection tensor annihilates w, is symmetric, trace (d-1)|w|^2") {
  std::mt19937_64 rng(5);
  for (int d : {2, 3}) {
    const Vec w = random_vec(rng, d);
    const auto A = projection_tensor(w, d);
    double trace = 0.0;
    for (int r = 0; r < d; ++r) {
      double Aw = 0.0;
      for (int c = 0; c < d; ++c) {
        Aw += A[static_cast<size_t>(r * d + c)] * w[c];
        CHECK(A[static_cast<size_t>(r * d + c)] ==
              doctest::Approx(A[static_cast<size_t>(c * d + r)]).epsilon(1e-14));
      }
      CHECK(Aw == doctest::Approx(0.0).epsilon(1e-12));
      trace += A[static_cast<size_t>(r * d + r)];
    }
    CHECK(trace == doctest::Approx((d - 1.0) * norm2(w, d)).epsilon(1e-13));
  }
}

TEST_CASE("zrs coordinates round-trip and carry the pair invariants") {
  std::mt19937_64 rng(9);
  for (int d : {2, 3}) {
    for (int t = 0; t < 10; ++t) {
      PairPoint p;
      p.dim = d;
      p.v = random_vec(rng, d);
      p.vstar = random_vec(rng, d);
      p.mi = 1.0;
      p.mj = 2.5;
      const ZrsPoint z = to_zrs(p);
      CHECK_FALSE(z.degenerate);
      const PairPoint back = from_zrs(z.z, z.r, z.sigma, p.mi, p.mj, d);
      for (int c = 0; c < d; ++c) {
        CHECK(back.v[c] == doctest::Approx(p.v[c]).epsilon(1e-12));
        CHECK(back.vstar[c] == doctest::Approx(p.vstar[c]).epsilon(1e-12));
      }
      // the collision manifold: any sigma conserves momentum and energy
      Vec s = vec0();
      s[0] = std::sin(0.3 + t);
      s[1] = std::cos(0.3 + t);
      const PairPoint post = from_zrs(z.z, z.r, s, p.mi, p.mj, d);
      const PairInvariants a = pair_invariants(p);
      const PairInvariants b = pair_invariants(post);
      for (int c = 0; c < d; ++c)
        CHECK(a.momentum[c] == doctest::Approx(b.momentum[c]).epsilon(1e-12));
      CHECK(a.energy == doctest::Approx(b.energy).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_L combines the mass-weighted rotated gradients") {
  std::mt19937_64 rng(13);
  const int d = 3;
  const SkewBasis basis = SkewBasis::standard(d);
  PairPoint p;
  p.dim = d;
  p.v = random_vec(rng, d);
  p.vstar = random_vec(rng, d);
  p.mi = 1.5;
  p.mj = 0.5;
  const Vec gi = random_vec(rng, d);
  const Vec gj = random_vec(rng, d);
  const Vec w = sub(p.v, p.vstar, d);
  for (int k = 0; k < basis.size(); ++k) {
    const Vec bk = b_vector(basis, k, w);
    const double expect = dot(bk, gi, d) / p.mi - dot(bk, gj, d) / p.mj;
    CHECK(apply_L(basis, k, gi, gj, p) == doctest::Approx(expect).epsilon(1e-13));
  }
}
