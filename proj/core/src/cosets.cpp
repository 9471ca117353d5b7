#include "gamma0fd/cosets.hpp"

#include <algorithm>
#include <string>

namespace gamma0fd {

group_word coset_rep::word() const {
  return form == shape::st ? group_word::st(t1) : group_word::stst(t1, t2);
}

i64 coset_table::index_of(const proj_point& p) const {
  auto cmp = [&](i64 k, const proj_point& q) { return rows[static_cast<size_t>(k)] < q; };
  auto it = std::lower_bound(order_.begin(), order_.end(), p, cmp);
  if (it == order_.end() || !(rows[static_cast<size_t>(*it)] == p)) return -1;
  return *it;
}

const coset_rep& coset_table::rep_for(const proj_point& p) const {
  const i64 k = index_of(p);
  if (k < 0)
    throw bijection_failure("no representative for point (" + std::to_string(p.a) +
                            " : " + std::to_string(p.b) + ") mod " + std::to_string(p.n));
  return reps[static_cast<size_t>(k)];
}

coset_table build_cosets(modulus n) {
  coset_table t;
  t.n = n.n;
  t.widths = build_width_table(n);

  const i64 lo = sym_min(n), hi = sym_max(n);
  for (i64 i = lo; i <= hi; ++i)
    t.reps.push_back({coset_rep::shape::st, i, 0});
  for (i64 j = lo; j <= hi; ++j) {
    if (gcd(((j % n.n) + n.n) % n.n, n.n) <= 1) continue;
    const i64 top = t.widths.max_exp(j);
    for (i64 m = 0; m <= top; ++m)
      t.reps.push_back({coset_rep::shape::stst, j, m});
  }

  const i64 expected = psi_index(n.n);
  if (t.size() != expected)
    throw bijection_failure("representative count " + std::to_string(t.size()) +
                            " differs from psi(" + std::to_string(n.n) + ") = " +
                            std::to_string(expected));

  t.rows.reserve(t.reps.size());
  for (const coset_rep& r : t.reps)
    t.rows.push_back(row_map(word_to_matrix(r.word()), n));

  t.order_.resize(t.reps.size());
  for (size_t k = 0; k < t.order_.size(); ++k) t.order_[k] = static_cast<i64>(k);
  std::sort(t.order_.begin(), t.order_.end(), [&](i64 x, i64 y) {
    return t.rows[static_cast<size_t>(x)] < t.rows[static_cast<size_t>(y)];
  });
  for (size_t k = 1; k < t.order_.size(); ++k) {
    const proj_point& prev = t.rows[static_cast<size_t>(t.order_[k - 1])];
    const proj_point& cur = t.rows[static_cast<size_t>(t.order_[k])];
    if (prev == cur)
      throw bijection_failure("two representatives share the row (" +
                              std::to_string(cur.a) + " : " + std::to_string(cur.b) +
                              ") mod " + std::to_string(n.n));
  }
  return t;
}

}  // namespace gamma0fd
