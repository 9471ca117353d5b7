#pragma once

#include <string>
#include <vector>

#include "gamma0fd/arith.hpp"

namespace gamma0fd {

// 2x2 integer matrix with determinant 1.
struct mat2 {
  i64 a = 1, b = 0;
  i64 c = 0, d = 1;

  static mat2 identity() { return {}; }
  static mat2 gen_s() { return {0, -1, 1, 0}; }
  static mat2 gen_t(i64 k = 1) { return {1, k, 0, 1}; }

  mat2 operator*(const mat2& r) const;  // overflow-checked
  mat2 operator-() const { return {-a, -b, -c, -d}; }
  mat2 inverse() const { return {d, -b, -c, a}; }
  i64 det() const;
  i64 trace() const { return a + d; }
  bool operator==(const mat2&) const = default;
};

// Equality in the projective group (matrices modulo sign).
bool eq_up_to_sign(const mat2& g, const mat2& h);

mat2 inverse(const mat2& g);

// A word S T^{e_1} S T^{e_2} ... ; the empty word is the identity.
struct group_word {
  std::vector<i64> exps;

  static group_word st(i64 i) { return {{i}}; }
  static group_word stst(i64 j, i64 m) { return {{j, m}}; }

  // Serialization grammar: each factor prints "S" followed by "T^k";
  // "^1" is elided ("ST"), and "T^0" is elided entirely ("S").
  std::string str() const;
};

mat2 word_to_matrix(const group_word& w);

// Reduced point of P^1(Q): num/den with gcd 1 and den >= 0.
// Infinity is 1/0.
struct cusp {
  i64 num = 1, den = 0;
  bool is_infinity() const { return den == 0; }
  bool operator==(const cusp&) const = default;
};

cusp make_cusp(i64 num, i64 den);
std::string cusp_str(const cusp& s);

// Reduced image of s under the fractional-linear action of g.
cusp mobius_cusp(const mat2& g, const cusp& s);

// Lower-left entry divisible by n (invariant under sign).
bool in_gamma0(const mat2& g, modulus n);

}  // namespace gamma0fd
