#include "gamma0fd/projline.hpp"

#include <algorithm>
#include <string>

namespace gamma0fd {

namespace {

// A unit u0 mod n with u0 * a == gcd(a, n) mod n, for a in [1, n).
// Start from the inverse of a/g mod n/g and shift by multiples of n/g
// until the lift is a unit mod n; a valid shift exists within [0, g).
i64 scaling_unit(i64 a, i64 g, i64 n) {
  const i64 q = n / g;
  const i64 x = mod_inv((a / g) % q, q);  // q = 1 gives 0
  for (i64 t = 0; t < g; ++t) {
    const i64 u = (x + t * q) % n;
    if (gcd(u, n) == 1) return u;
  }
  throw error("unit lift not found for a=" + std::to_string(a) +
              " mod " + std::to_string(n));
}

}  // namespace

proj_point canonicalize(i64 a, i64 b, modulus nn) {
  const i64 n = nn.n;
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  if (gcd(gcd(a, b), n) != 1)
    throw not_projective("(" + std::to_string(a) + " : " + std::to_string(b) +
                         ") is not projective mod " + std::to_string(n));
  if (a == 0) return {0, 1, n};

  const i64 g = gcd(a, n);
  const i64 q = n / g;
  const i64 u0 = scaling_unit(a, g, n);
  const i64 b0 = u0 * b % n;
  // Remaining freedom: units v == 1 mod n/g; take the least v*b0.
  i64 best = b0;
  for (i64 t = 1; t < g; ++t) {
    const i64 v = (1 + t * q) % n;
    if (gcd(v, n) != 1) continue;
    best = std::min(best, v * b0 % n);
  }
  return {g, best, n};
}

bool proj_eq(const proj_point& p, const proj_point& q) {
  if (p.n != q.n)
    throw modulus_mismatch("comparing points mod " + std::to_string(p.n) +
                           " and mod " + std::to_string(q.n));
  return (p.a * q.b - q.a * p.b) % p.n == 0;
}

proj_point row_map(const mat2& g, modulus n) {
  return canonicalize(g.c, g.d, n);
}

std::vector<proj_point> enumerate_p1(modulus nn) {
  const i64 n = nn.n;
  std::vector<proj_point> out;
  out.reserve(static_cast<size_t>(psi_index(n)));
  std::vector<char> seen(static_cast<size_t>(n));
  for (i64 g : divisors(n)) {
    if (g == n) {
      out.push_back({0, 1, n});
      continue;
    }
    // Canonical points with first coordinate g correspond to orbits of
    // {b : gcd(g, b) = 1} under the units v == 1 mod n/g.
    const i64 q = n / g;
    std::vector<i64> stab;
    for (i64 t = 0; t < g; ++t) {
      const i64 v = (1 + t * q) % n;
      if (gcd(v, n) == 1) stab.push_back(v);
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (i64 b = 0; b < n; ++b) {
      if (seen[static_cast<size_t>(b)] || gcd(g, b) != 1) continue;
      out.push_back({g, b, n});
      for (i64 v : stab) seen[static_cast<size_t>(v * b % n)] = 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gamma0fd
