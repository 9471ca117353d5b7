#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamma0fd/projline.hpp"
#include "gamma0fd/width.hpp"
#include "gamma0fd/words.hpp"

namespace gamma0fd {

// One canonical right-coset representative: either the word S T^t1 or the
// word S T^t1 S T^t2.  Exponents use the symmetric residue range; for the
// two-factor form gcd(t1, n) > 1 and 0 <= t2 <= max_exp(t1).
struct coset_rep {
  enum class shape : std::uint8_t { st, stst };
  shape form = shape::st;
  i64 t1 = 0;
  i64 t2 = 0;

  group_word word() const;
  std::string str() const { return word().str(); }
  bool operator==(const coset_rep&) const = default;
};

// The full representative set for one level, in canonical order (single-
// factor words by ascending exponent, then two-factor words by ascending
// t1 then t2), with an exact-match index from canonical row points.
struct coset_table {
  i64 n = 0;
  width_table widths;
  std::vector<coset_rep> reps;
  std::vector<proj_point> rows;  // rows[k] = row_map of reps[k]

  modulus mod() const { return modulus(n); }
  i64 size() const { return static_cast<i64>(reps.size()); }

  // Index of the representative whose row equals p; -1 when absent.
  i64 index_of(const proj_point& p) const;
  // The unique representative whose row image is p (total by bijectivity).
  const coset_rep& rep_for(const proj_point& p) const;

 private:
  friend coset_table build_cosets(modulus n);
  std::vector<i64> order_;  // row-sorted permutation of [0, size)
};

// Builds the set, checking the row map restricted to it is injective with
// exactly psi_index(n) images.  Throws bijection_failure otherwise.
coset_table build_cosets(modulus n);

}  // namespace gamma0fd
