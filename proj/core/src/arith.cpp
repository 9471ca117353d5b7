#include "gamma0fd/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gamma0fd {

modulus::modulus(i64 value) : n(value) {
  if (value < 2 || value > max_modulus)
    throw invalid_modulus("modulus must be in [2, 2^20], got " + std::to_string(value));
}

residue::residue(i64 v, modulus m) : value(((v % m.n) + m.n) % m.n), n(m.n) {}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("integer multiply overflow");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("integer add overflow");
  return r;
}

i64 mod_inv(i64 a, i64 n) {
  if (n < 1) throw invalid_modulus("mod_inv needs n >= 1");
  if (n == 1) return 0;
  a = ((a % n) + n) % n;
  // extended Euclid
  i64 r0 = n, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    i64 s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    throw not_a_unit(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  return ((s0 % n) + n) % n;
}

residue mod_inv(residue a) { return residue(mod_inv(a.value, a.n), modulus(a.n)); }

i64 sym_min(modulus n) { return -((n.n - 1) / 2); }
i64 sym_max(modulus n) { return n.n / 2; }

i64 sym_rep(i64 x, modulus n) {
  i64 r = ((x % n.n) + n.n) % n.n;
  return r > sym_max(n) ? r - n.n : r;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 2) throw invalid_modulus("factorize needs n >= 2");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 euler_phi(i64 n) {
  if (n < 1) throw invalid_modulus("euler_phi needs n >= 1");
  if (n == 1) return 1;
  i64 phi = 1;
  for (auto [p, e] : factorize(n)) {
    i64 pe = 1;
    for (int k = 1; k < e; ++k) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

i64 psi_index(i64 n) {
  if (n < 2) throw invalid_modulus("psi_index needs n >= 2");
  i64 psi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    psi = psi / p * (p + 1);
  }
  return psi;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  if (n == 1) return out;
  for (auto [p, e] : factorize(n)) {
    const size_t base = out.size();
    i64 pe = 1;
    for (int k = 0; k < e; ++k) {
      pe *= p;
      for (size_t idx = 0; idx < base; ++idx) out.push_back(out[idx] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> units(i64 n) {
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(euler_phi(n)));
  for (i64 u = 0; u < n; ++u)
    if (gcd(u, n) == 1) out.push_back(u);
  return out;
}

divisor_split split_divisor(i64 d, modulus n) {
  if (d < 1 || n.n % d != 0)
    throw not_a_divisor(std::to_string(d) + " does not divide " + std::to_string(n.n));
  divisor_split s;
  s.d = d;
  s.d_prime = n.n / d;
  s.d_double = gcd(s.d, s.d_prime);
  s.d_tilde = s.d_prime / s.d_double;
  return s;
}

}  // namespace gamma0fd
