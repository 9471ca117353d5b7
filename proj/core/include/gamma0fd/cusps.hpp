#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gamma0fd/arith.hpp"
#include "gamma0fd/cosets.hpp"
#include "gamma0fd/words.hpp"

namespace gamma0fd {

// Invariant (d; b) of a cusp class: d | n, and b a unit mod d''.  When the
// group mod d'' is trivial (d'' = 1) the unique value is stored as b = 0.
struct cusp_class {
  i64 d = 1;
  i64 b = 0;
  auto operator<=>(const cusp_class&) const = default;
};

// Class invariant of a reduced cusp a/c: d = gcd(c, n) and
// b = a * (c/d) mod d''.  Infinity (1/0) lands in the d = n class.
cusp_class classify_cusp(const cusp& s, modulus n);

// Width of the class: d~ = d'/d''.
i64 class_width(const cusp_class& c, modulus n);

// Number of cusp classes: sum over d | n of phi(gcd(d, n/d)).
i64 cusp_class_count(modulus n);

// Unit residues of Z/d' lying over b mod d'', as integer lifts in [1, d'],
// ascending.  These index the cusps 1/(d*k) the domain produces in class
// (d; b).
struct cusp_fiber {
  i64 d = 1;
  i64 b = 0;
  std::vector<i64> elements;
};

// Throws bad_fiber when d does not divide n or b is not a unit mod d''.
cusp_fiber fiber_over(i64 d, i64 b, modulus n);

// (d~, sum of widths at d*k over the fiber); the two must agree.
std::pair<i64, i64> fiber_width_sum(i64 d, i64 b, const width_table& wt);

// Fiber elements written as b + a*d mod d' with ascending a in [0, d~),
// and their circular gaps (the first gap wraps).  The gaps sum to d~, and
// each gap equals the width at (b + a*d)^{-1} * d, evaluated mod d' and
// mod n alike; both identities are re-derived here and enforced.
std::vector<std::pair<i64, i64>> fiber_gaps(i64 d, i64 b, modulus n);

// One cusp record produced by the domain.
struct domain_cusp {
  coset_rep rep;  // carrier representative (t2 = 0 for chains)
  cusp s;         // class-form cusp: 0/1 for the fan, 1/j otherwise
  i64 index;      // fan: the exponent i; chain: the lift j in [0, n)
  i64 weight;     // fan: 1; chain: width at j
};

// Groups the domain's cusps by class: the single-factor fan contributes
// cusp 0 with total weight n under (1; 0), and each chain j contributes
// weight width_of(j) under the class of 1/j.  Grouping the literal chain
// cusps -1/j by their own class invariant must give the same per-class
// totals; any discrepancy throws instead of being normalized away.
std::map<cusp_class, std::vector<domain_cusp>> classify_domain_cusps(const coset_table& t);

}  // namespace gamma0fd
