#pragma once

#include <compare>

#include "gamma0fd/arith.hpp"
#include "gamma0fd/words.hpp"

namespace gamma0fd {

// Reduced fraction with positive denominator.  Operations compute through
// __int128 and refuse results that do not reduce back into 64 bits.
struct rational {
  i64 num = 0;
  i64 den = 1;

  static rational of(i64 n, i64 d = 1);

  rational operator+(const rational& r) const;
  rational operator-(const rational& r) const;
  rational operator*(const rational& r) const;
  rational operator/(const rational& r) const;
  rational operator-() const { return {-num, den}; }
  bool operator==(const rational&) const = default;
  std::strong_ordering operator<=>(const rational& r) const;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

rational abs(const rational& r);

// Exact point (nx + ny * sqrt(disc) * i) / den of the closed upper half
// plane; den > 0, gcd(nx, ny, den) = 1, ny >= 0.  Real points carry
// disc = 1 by convention so equality is componentwise.
struct quad_point {
  i64 nx = 0;
  i64 ny = 0;
  i64 den = 1;
  i64 disc = 1;

  static quad_point of(i64 nx, i64 ny, i64 den, i64 disc);
  rational real_part() const { return rational::of(nx, den); }
  double x() const { return static_cast<double>(nx) / static_cast<double>(den); }
  double y() const;
  bool is_real() const { return ny == 0; }
  bool operator==(const quad_point&) const = default;
};

quad_point corner_zeta3();  // (-1 + sqrt(3) i) / 2
quad_point corner_zeta6();  // ( 1 + sqrt(3) i) / 2
quad_point point_i();       // i

// Exact Mobius image of z under g.  Inputs are range-guarded so the
// __int128 intermediates cannot overflow; out-of-range inputs throw
// arithmetic_overflow.
quad_point mobius_quad(const mat2& g, const quad_point& z);

}  // namespace gamma0fd
