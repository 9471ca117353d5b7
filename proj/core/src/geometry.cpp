#include "gamma0fd/geometry.hpp"

#include <cmath>
#include <cstdlib>

namespace gamma0fd {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

i64 narrow(i128 x) {
  if (x > i128{INT64_MAX} || x < i128{INT64_MIN})
    throw arithmetic_overflow("exact value exceeds 64 bits after reduction");
  return static_cast<i64>(x);
}

rational reduce(i128 num, i128 den) {
  if (den == 0) throw arithmetic_overflow("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  i128 g = gcd128(num, den);
  if (g > 1) { num /= g; den /= g; }
  return {narrow(num), narrow(den)};
}

// Inputs to mobius_quad below this bound keep every intermediate product
// within __int128.
constexpr i64 quad_input_bound = i64{1} << 30;

}  // namespace

rational rational::of(i64 n, i64 d) { return reduce(n, d); }

rational rational::operator+(const rational& r) const {
  return reduce(i128{num} * r.den + i128{r.num} * den, i128{den} * r.den);
}

rational rational::operator-(const rational& r) const {
  return reduce(i128{num} * r.den - i128{r.num} * den, i128{den} * r.den);
}

rational rational::operator*(const rational& r) const {
  return reduce(i128{num} * r.num, i128{den} * r.den);
}

rational rational::operator/(const rational& r) const {
  if (r.num == 0) throw arithmetic_overflow("rational division by zero");
  return reduce(i128{num} * r.den, i128{den} * r.num);
}

std::strong_ordering rational::operator<=>(const rational& r) const {
  const i128 lhs = i128{num} * r.den;
  const i128 rhs = i128{r.num} * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

rational abs(const rational& r) { return r.num < 0 ? -r : r; }

quad_point quad_point::of(i64 nx, i64 ny, i64 den, i64 disc) {
  if (den == 0) throw arithmetic_overflow("zero denominator");
  if (den < 0) { nx = -nx; ny = -ny; den = -den; }
  if (ny < 0) throw error("point below the real axis");
  i64 g = gcd(gcd(std::llabs(nx), ny), den);
  if (g > 1) { nx /= g; ny /= g; den /= g; }
  if (ny == 0) disc = 1;
  return {nx, ny, den, disc};
}

double quad_point::y() const {
  return static_cast<double>(ny) / static_cast<double>(den) *
         std::sqrt(static_cast<double>(disc));
}

quad_point corner_zeta3() { return quad_point::of(-1, 1, 2, 3); }
quad_point corner_zeta6() { return quad_point::of(1, 1, 2, 3); }
quad_point point_i() { return quad_point::of(0, 1, 1, 1); }

quad_point mobius_quad(const mat2& g, const quad_point& z) {
  const auto big = [](i64 v) { return v > quad_input_bound || v < -quad_input_bound; };
  if (big(g.a) || big(g.b) || big(g.c) || big(g.d) || big(z.nx) || big(z.ny) || big(z.den))
    throw arithmetic_overflow("mobius_quad inputs out of guarded range");

  // z = (nx + ny sqrt(disc) i) / q.  With det g = 1:
  //   g z = (P + ny q sqrt(disc) i) / Q,
  //   P = (a nx + b q)(c nx + d q) + a c ny^2 disc,
  //   Q = (c nx + d q)^2 + c^2 ny^2 disc.
  const i128 q = z.den;
  const i128 top = i128{g.a} * z.nx + i128{g.b} * q;
  const i128 bot = i128{g.c} * z.nx + i128{g.d} * q;
  const i128 ny2disc = i128{z.ny} * z.ny * z.disc;
  const i128 p = top * bot + i128{g.a} * g.c * ny2disc;
  const i128 quot = bot * bot + i128{g.c} * g.c * ny2disc;
  if (quot == 0) throw error("mobius_quad image is the cusp at infinity");
  i128 imag = i128{z.ny} * q;

  i128 gg = gcd128(gcd128(p, imag), quot);
  const i128 sign = quot < 0 ? -1 : 1;
  gg *= sign;
  return quad_point::of(narrow(p / gg), narrow(imag / gg), narrow(quot / gg), z.disc);
}

}  // namespace gamma0fd
