#include "gamma0fd/words.hpp"

namespace gamma0fd {

mat2 mat2::operator*(const mat2& r) const {
  mat2 out;
  out.a = checked_add(checked_mul(a, r.a), checked_mul(b, r.c));
  out.b = checked_add(checked_mul(a, r.b), checked_mul(b, r.d));
  out.c = checked_add(checked_mul(c, r.a), checked_mul(d, r.c));
  out.d = checked_add(checked_mul(c, r.b), checked_mul(d, r.d));
  return out;
}

i64 mat2::det() const {
  return checked_add(checked_mul(a, d), -checked_mul(b, c));
}

bool eq_up_to_sign(const mat2& g, const mat2& h) { return g == h || g == -h; }

mat2 inverse(const mat2& g) { return g.inverse(); }

std::string group_word::str() const {
  std::string out;
  for (i64 e : exps) {
    out += 'S';
    if (e == 0) continue;
    out += 'T';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

mat2 word_to_matrix(const group_word& w) {
  mat2 g;
  for (i64 e : w.exps) g = g * mat2::gen_s() * mat2::gen_t(e);
  return g;
}

cusp make_cusp(i64 num, i64 den) {
  if (num == 0 && den == 0) throw error("0/0 is not a point of P^1(Q)");
  i64 g = gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0 || (den == 0 && num < 0)) { num = -num; den = -den; }
  return {num, den};
}

std::string cusp_str(const cusp& s) {
  if (s.is_infinity()) return "oo";
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

cusp mobius_cusp(const mat2& g, const cusp& s) {
  const i64 num = checked_add(checked_mul(g.a, s.num), checked_mul(g.b, s.den));
  const i64 den = checked_add(checked_mul(g.c, s.num), checked_mul(g.d, s.den));
  return make_cusp(num, den);
}

bool in_gamma0(const mat2& g, modulus n) { return g.c % n.n == 0; }

}  // namespace gamma0fd
