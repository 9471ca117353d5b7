#include "gamma0fd/cusps.hpp"

#include <algorithm>
#include <string>

namespace gamma0fd {

cusp_class classify_cusp(const cusp& s, modulus n) {
  const i64 d = s.den == 0 ? n.n : gcd(s.den, n.n);
  const divisor_split sp = split_divisor(d, n);
  if (sp.d_double == 1) return {d, 0};
  const i64 cofactor = (s.den / d) % sp.d_double;
  i64 b = ((s.num % sp.d_double) * cofactor) % sp.d_double;
  b = ((b % sp.d_double) + sp.d_double) % sp.d_double;
  if (gcd(b, sp.d_double) != 1)
    throw error("cusp invariant degenerated at " + cusp_str(s) +
                " mod " + std::to_string(n.n));
  return {d, b};
}

i64 class_width(const cusp_class& c, modulus n) {
  return split_divisor(c.d, n).d_tilde;
}

i64 cusp_class_count(modulus n) {
  i64 total = 0;
  for (i64 d : divisors(n.n)) total += euler_phi(gcd(d, n.n / d));
  return total;
}

cusp_fiber fiber_over(i64 d, i64 b, modulus n) {
  if (d < 1 || n.n % d != 0)
    throw bad_fiber(std::to_string(d) + " does not divide " + std::to_string(n.n));
  const divisor_split sp = split_divisor(d, n);
  b = ((b % sp.d_double) + sp.d_double) % sp.d_double;
  if (sp.d_double > 1 && gcd(b, sp.d_double) != 1)
    throw bad_fiber(std::to_string(b) + " is not a unit mod " + std::to_string(sp.d_double));

  cusp_fiber f;
  f.d = d;
  f.b = sp.d_double == 1 ? 0 : b;
  for (i64 k = 1; k <= sp.d_prime; ++k) {
    if (gcd(k, sp.d_prime) != 1) continue;
    if (sp.d_double > 1 && k % sp.d_double != b) continue;
    f.elements.push_back(k);
  }
  const i64 expected = euler_phi(sp.d_prime) / euler_phi(sp.d_double);
  if (static_cast<i64>(f.elements.size()) != expected)
    throw error("fiber over (" + std::to_string(d) + "; " + std::to_string(b) +
                ") has " + std::to_string(f.elements.size()) + " elements, expected " +
                std::to_string(expected));
  return f;
}

std::pair<i64, i64> fiber_width_sum(i64 d, i64 b, const width_table& wt) {
  const modulus n(wt.n);
  const cusp_fiber f = fiber_over(d, b, n);
  const i64 lhs = split_divisor(d, n).d_tilde;
  i64 rhs = 0;
  for (i64 k : f.elements) rhs += wt.at(d * k % n.n);
  return {lhs, rhs};
}

std::vector<std::pair<i64, i64>> fiber_gaps(i64 d, i64 b, modulus n) {
  const divisor_split sp = split_divisor(d, n);
  const cusp_fiber f = fiber_over(d, b, n);
  const i64 dp = sp.d_prime, dt = sp.d_tilde;
  b = f.b;  // normalized: 0 for the trivial group, else the unit in [1, d'')

  // Recover a from k = b + a*d mod d': a is determined mod d~.
  std::vector<i64> shifts;
  shifts.reserve(f.elements.size());
  const i64 step = d / sp.d_double;          // coprime to d~
  const i64 step_inv = dt == 1 ? 0 : mod_inv(step % dt, dt);
  for (i64 k : f.elements) {
    i64 diff = ((k - b) % dp + dp) % dp;     // divisible by d''
    i64 a = dt == 1 ? 0 : (diff / sp.d_double) % dt * step_inv % dt;
    shifts.push_back(a);
  }
  std::sort(shifts.begin(), shifts.end());

  std::vector<std::pair<i64, i64>> out;
  out.reserve(shifts.size());
  i64 total = 0;
  for (size_t i = 0; i < shifts.size(); ++i) {
    const i64 gap = (i == 0) ? dt + shifts.front() - shifts.back() : shifts[i] - shifts[i - 1];
    out.emplace_back(shifts[i], gap);
    total += gap;
  }
  if (total != dt)
    throw error("fiber gaps sum to " + std::to_string(total) + ", expected " +
                std::to_string(dt));

  // Each gap equals the width at (b + a*d)^{-1} * d, both at the reduced
  // modulus d' and at n itself.
  if (dp >= 2) {
    const modulus mdp(dp);
    for (auto [a, gap] : out) {
      const i64 k = (b + a % dp * (d % dp)) % dp;
      const i64 inv = mod_inv(k, dp);        // lift in [1, d'-1]
      const i64 arg = inv * (d % dp) % dp;
      const i64 w_red = width_of(residue(arg, mdp));
      const i64 w_full = width_of(residue(inv % n.n * (d % n.n) % n.n, n));
      if (w_red != gap || w_full != gap)
        throw error("gap identity failed at (d=" + std::to_string(d) + ", b=" +
                    std::to_string(b) + ", a=" + std::to_string(a) + "): gap " +
                    std::to_string(gap) + ", reduced width " + std::to_string(w_red) +
                    ", full width " + std::to_string(w_full));
    }
  }
  return out;
}

std::map<cusp_class, std::vector<domain_cusp>> classify_domain_cusps(const coset_table& t) {
  const modulus n = t.mod();
  std::map<cusp_class, std::vector<domain_cusp>> grouped;
  std::map<cusp_class, i64> geometric;  // totals from the literal chain cusps

  for (const coset_rep& r : t.reps) {
    if (r.form == coset_rep::shape::st) {
      grouped[{1, 0}].push_back({r, make_cusp(0, 1), r.t1, 1});
      geometric[classify_cusp(make_cusp(0, 1), n)] += 1;
    } else if (r.t2 == 0) {  // one record per chain
      const i64 j = ((r.t1 % n.n) + n.n) % n.n;
      const cusp class_form = make_cusp(1, j);  // 1/0 = infinity for the j = 0 chain
      const cusp_class cl = classify_cusp(class_form, n);
      grouped[cl].push_back({r, class_form, j, t.widths.at(j)});

      const cusp literal = mobius_cusp(word_to_matrix(r.word()), cusp{1, 0});  // -1/t1
      geometric[classify_cusp(literal, n)] += t.widths.at(r.t1);
    }
  }

  for (auto& [cl, members] : grouped)
    std::sort(members.begin(), members.end(),
              [](const domain_cusp& x, const domain_cusp& y) { return x.index < y.index; });

  // The two groupings must cover the same classes with total weight equal
  // to the class width.
  for (const auto& [cl, members] : grouped) {
    const i64 wd = class_width(cl, n);
    i64 sum = 0;
    for (const domain_cusp& m : members) sum += m.weight;
    const auto geo = geometric.find(cl);
    if (sum != wd || geo == geometric.end() || geo->second != wd)
      throw error("cusp grouping mismatch at class (" + std::to_string(cl.d) + "; " +
                  std::to_string(cl.b) + "): class width " + std::to_string(wd) +
                  ", lift total " + std::to_string(sum) + ", literal total " +
                  std::to_string(geo == geometric.end() ? -1 : geo->second));
  }
  if (geometric.size() != grouped.size())
    throw error("cusp groupings cover different class sets");
  return grouped;
}

}  // namespace gamma0fd
