#pragma once

#include <compare>
#include <vector>

#include "gamma0fd/arith.hpp"
#include "gamma0fd/words.hpp"

namespace gamma0fd {

// Canonical representative of a point (a : b) of P^1(Z/n): among all unit
// multiples (u*a, u*b) the lexicographically least pair.  Two inputs are
// unit multiples of each other iff their canonical forms are identical,
// which makes points usable as exact map keys.
struct proj_point {
  i64 a = 0, b = 0;
  i64 n = 0;
  auto operator<=>(const proj_point&) const = default;
};

// Throws not_projective when gcd(a, b, n) > 1.
proj_point canonicalize(i64 a, i64 b, modulus n);

// Cross-multiplication test a_p * b_q == a_q * b_p mod n; agrees with
// canonical-form identity.  Throws modulus_mismatch.
bool proj_eq(const proj_point& p, const proj_point& q);

// Class of g in the right-coset space via its bottom row (c : d).
proj_point row_map(const mat2& g, modulus n);

// All points of P^1(Z/n) in canonical form, sorted; size psi_index(n).
std::vector<proj_point> enumerate_p1(modulus n);

}  // namespace gamma0fd
