#pragma once

#include <utility>
#include <vector>

#include "gamma0fd/arith.hpp"

namespace gamma0fd {

// width_of(j): the least m >= 1 such that m*j - 1 is a unit mod n.  This is
// the number of triangles the connected fundamental domain stacks at the
// cusp attached to j, and the width contribution of that cusp.
//
// Two independent evaluation routes are kept permanently and
// cross-checked: a direct scan with gcd tests, and a sieve that excludes,
// for each prime p | n with p not dividing j, the progression
// (j^{-1} mod p) + p*Z.  The least survivor is the same value.
i64 width_of(residue j);
i64 width_of_crt(residue j);

struct width_table {
  i64 n = 0;
  std::vector<i64> w;  // w[j] for j in [0, n)

  i64 at(i64 j) const;                        // j arbitrary, reduced mod n
  i64 max_exp(i64 j) const { return at(j) - 1; }  // largest T-exponent hung at j
};

// Builds the full table, evaluating both routes and refusing to return if
// they ever disagree.
width_table build_width_table(modulus n);

// Units u_1 < ... < u_k of Z/n with their circular gaps: gap(u_1) wraps
// around, gap(u_i) = u_i - u_{i-1} otherwise.  The gaps sum to n, and the
// gap at u equals width_of at u^{-1}.
std::vector<std::pair<i64, i64>> unit_gaps(modulus n);

}  // namespace gamma0fd
