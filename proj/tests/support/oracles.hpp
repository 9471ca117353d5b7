#pragma once

// Brute-force and closed-form oracles for the test suites.  Everything
// here is deliberately written from scratch against the definitions, with
// its own helpers, so the library implementation is checked by an
// independent route.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gamma0fd/words.hpp"

namespace oracle {

using i64 = std::int64_t;

inline i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) { i64 r = a % b; a = b; b = r; }
  return a;
}

// Least m >= 1 with m*j - 1 a unit mod n, straight from the definition.
inline i64 min_unit_multiplier(i64 j, i64 n) {
  for (i64 m = 1;; ++m) {
    i64 x = ((m * j - 1) % n + n) % n;
    if (gcd(x, n) == 1) return m;
  }
}

// Lexicographically least unit multiple of (a, b) mod n by scanning every
// unit.
inline std::pair<i64, i64> lex_min_point(i64 a, i64 b, i64 n) {
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  std::pair<i64, i64> best{n, n};
  for (i64 u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    best = std::min(best, {u * a % n, u * b % n});
  }
  return best;
}

// All of P^1(Z/n) as canonical pairs, by exhausting every projective pair.
inline std::set<std::pair<i64, i64>> brute_p1(i64 n) {
  std::set<std::pair<i64, i64>> pts;
  for (i64 a = 0; a < n; ++a)
    for (i64 b = 0; b < n; ++b)
      if (gcd(gcd(a, b), n) == 1) pts.insert(lex_min_point(a, b, n));
  return pts;
}

inline i64 phi(i64 n) {
  i64 count = 0;
  for (i64 u = 1; u <= n; ++u)
    if (gcd(u, n) == 1) ++count;
  return count;
}

// Classical closed-form genus of the level-n modular curve:
//   g = 1 + mu/12 - e2/4 - e3/3 - cusps/2.
inline i64 genus_closed_form(i64 n) {
  std::vector<i64> primes;
  {
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  i64 mu = n;
  for (i64 p : primes) mu = mu / p * (p + 1);

  i64 e2 = 1;
  if (n % 4 == 0) {
    e2 = 0;
  } else {
    for (i64 p : primes) {
      if (p == 2) continue;  // (-1|2) treated as 0: factor 1
      e2 *= (p % 4 == 1) ? 2 : 0;
    }
  }
  i64 e3 = 1;
  if (n % 9 == 0) {
    e3 = 0;
  } else {
    for (i64 p : primes) {
      if (p == 3) { e3 *= 1; continue; }  // (-3|3) = 0
      e3 *= (p % 3 == 1) ? 2 : 0;
    }
  }
  i64 cusps = 0;
  for (i64 d = 1; d <= n; ++d)
    if (n % d == 0) cusps += phi(gcd(d, n / d));

  // 12g = 12 + mu - 3 e2 - 4 e3 - 6 cusps
  const i64 twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * cusps;
  if (twelve_g % 12 != 0) return -1;  // never happens; poisons a comparison if it does
  return twelve_g / 12;
}

// Random element with lower-left divisible by n: a word in T^k and the
// lower-triangular generator.
inline gamma0fd::mat2 random_in_gamma0(std::mt19937_64& rng, i64 n) {
  using gamma0fd::mat2;
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<i64> ex(-2, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  mat2 g;
  const int parts = len(rng);
  for (int k = 0; k < parts; ++k) {
    if (coin(rng)) {
      g = g * mat2::gen_t(ex(rng));
    } else {
      mat2 low{1, 0, ex(rng) * n, 1};
      g = g * low;
    }
  }
  return g;
}

inline gamma0fd::group_word random_word(std::mt19937_64& rng, int max_len, i64 max_exp) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<i64> ex(-max_exp, max_exp);
  gamma0fd::group_word w;
  const int parts = len(rng);
  for (int k = 0; k < parts; ++k) w.exps.push_back(ex(rng));
  return w;
}

}  // namespace oracle
