#pragma once

#include <string>
#include <vector>

#include "gamma0fd/arith.hpp"

namespace gamma0fd {

// One failed identity inside a per-level verification run.
struct check_failure {
  std::string suite;
  std::string detail;
};

struct verify_report {
  i64 n = 0;
  bool ok = true;
  i64 genus = -1;
  std::vector<check_failure> failures;
};

// Runs every per-level identity suite: the width-sum identities, the
// two-route width agreement, the unit-gap identity, coset bijectivity and
// the affine/hyperplane split, cusp class counts, fiber width sums and
// gaps, fiber inversion, the boundary census and pairing soundness, the
// closed-surface bookkeeping, and domain connectivity.  Exact endpoint
// transport is included while the level stays inside the guarded integer
// range.
verify_report verify_modulus(i64 n);

// One compact JSON line for streaming sweeps.
std::string verify_line_json(const verify_report& r);

}  // namespace gamma0fd
