#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gamma0fd/errors.hpp"

namespace gamma0fd {

using i64 = std::int64_t;

// Largest level the library accepts.  Everything below this bound fits in
// machine words (with __int128 intermediates where needed); larger inputs
// are refused instead of silently overflowing.
inline constexpr i64 max_modulus = i64{1} << 20;

// The level N >= 2.
struct modulus {
  i64 n;
  explicit modulus(i64 value);
};

// An integer reduced into [0, n) together with its modulus.
struct residue {
  i64 value;
  i64 n;
  residue(i64 v, modulus m);
  bool operator==(const residue&) const = default;
};

// Nonnegative gcd; gcd(0, 0) = 0.
i64 gcd(i64 a, i64 b);

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

// Inverse of a mod n (n >= 1; returns 0 when n = 1).  Throws not_a_unit.
i64 mod_inv(i64 a, i64 n);
residue mod_inv(residue a);

// Bounds of the symmetric representative range [-floor((n-1)/2), floor(n/2)].
i64 sym_min(modulus n);
i64 sym_max(modulus n);

// The representative of x mod n inside the symmetric range.
i64 sym_rep(i64 x, modulus n);

// Prime factorization with strictly increasing primes; n >= 2.
std::vector<std::pair<i64, int>> factorize(i64 n);

// Count of units of Z/n; euler_phi(1) = 1.
i64 euler_phi(i64 n);

// n * prod_{p | n} (1 + 1/p), the size of P^1(Z/n).
i64 psi_index(i64 n);

// All positive divisors of n, ascending.
std::vector<i64> divisors(i64 n);

// Units of Z/n as integers in [0, n), ascending.
std::vector<i64> units(i64 n);

// The quadruple attached to a divisor d | n.
struct divisor_split {
  i64 d;         // the divisor
  i64 d_prime;   // n / d
  i64 d_double;  // gcd(d, d_prime)
  i64 d_tilde;   // d_prime / d_double
};

// Throws not_a_divisor when d does not divide n.
divisor_split split_divisor(i64 d, modulus n);

}  // namespace gamma0fd
