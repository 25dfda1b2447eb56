#ifndef LANDAULAB_VEC_HPP
#define LANDAULAB_VEC_HPP

#include <array>
#include <cmath>

namespace landau {

/// Small velocity-space vector; components beyond the active dimension are zero.
using Vec = std::array<double, 3>;

inline Vec vec0() { return {0.0, 0.0, 0.0}; }

inline double dot(const Vec& a, const Vec& b, int d) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) s += a[c] * b[c];
  return s;
}

inline double norm2(const Vec& a, int d) { return dot(a, a, d); }
inline double norm(const Vec& a, int d) { return std::sqrt(norm2(a, d)); }

inline Vec add(const Vec& a, const Vec& b, int d) {
  Vec r = vec0();
  for (int c = 0; c < d; ++c) r[c] = a[c] + b[c];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b, int d) {
  Vec r = vec0();
  for (int c = 0; c < d; ++c) r[c] = a[c] - b[c];
  return r;
}

inline Vec scale(const Vec& a, double s, int d) {
  Vec r = vec0();
  for (int c = 0; c < d; ++c) r[c] = s * a[c];
  return r;
}

}  // namespace landau

#endif
