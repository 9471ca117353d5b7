#include "gamma0fd/width.hpp"

#include <string>

namespace gamma0fd {

i64 width_of(residue j) {
  const i64 n = j.n;
  for (i64 m = 1; m <= n; ++m) {
    i64 x = (m * j.value - 1) % n;
    if (x < 0) x += n;
    if (gcd(x, n) == 1) return m;
  }
  // A survivor always exists within [1, n]: the excluded progressions have
  // one class per prime, so any window of length rad(n) contains one.
  throw error("width scan did not terminate; modulus " + std::to_string(n));
}

namespace {

// Shared sieve state so table construction does not reallocate per entry.
struct crt_sieve {
  std::vector<std::pair<i64, int>> primes;  // factorization of n
  std::vector<i64> mark;                    // stamp sieve, index 0..bound
  i64 stamp = 0;

  explicit crt_sieve(i64 n) : primes(factorize(n)) {
    i64 rad = 1;
    for (auto [p, e] : primes) { (void)e; rad *= p; }
    mark.assign(static_cast<size_t>(rad) + 1, 0);
  }

  i64 eval(i64 jv, i64 n) {
    ++stamp;
    i64 bound = 1;
    for (auto [p, e] : primes) {
      (void)e;
      if (jv % p != 0) bound *= p;
    }
    if (bound == 1) return 1;  // no excluded progressions
    for (auto [p, e] : primes) {
      (void)e;
      const i64 jp = jv % p;
      if (jp == 0) continue;
      const i64 ell = mod_inv(jp, p);  // in [1, p-1]
      for (i64 x = ell; x <= bound; x += p) mark[static_cast<size_t>(x)] = stamp;
    }
    for (i64 m = 1; m <= bound; ++m)
      if (mark[static_cast<size_t>(m)] != stamp) return m;
    throw error("progression sieve exhausted; modulus " + std::to_string(n));
  }
};

}  // namespace

i64 width_of_crt(residue j) {
  crt_sieve sieve(j.n);
  return sieve.eval(j.value, j.n);
}

width_table build_width_table(modulus n) {
  width_table t;
  t.n = n.n;
  t.w.resize(static_cast<size_t>(n.n));
  crt_sieve sieve(n.n);
  for (i64 j = 0; j < n.n; ++j) {
    const i64 scan = width_of(residue(j, n));
    const i64 sieved = sieve.eval(j, n.n);
    if (scan != sieved)
      throw error("width routes disagree at j=" + std::to_string(j) +
                  " mod " + std::to_string(n.n) + ": scan " + std::to_string(scan) +
                  ", sieve " + std::to_string(sieved));
    t.w[static_cast<size_t>(j)] = scan;
  }
  return t;
}

i64 width_table::at(i64 j) const {
  i64 r = ((j % n) + n) % n;
  return w[static_cast<size_t>(r)];
}

std::vector<std::pair<i64, i64>> unit_gaps(modulus n) {
  const std::vector<i64> us = units(n.n);
  std::vector<std::pair<i64, i64>> out;
  out.reserve(us.size());
  for (size_t i = 0; i < us.size(); ++i) {
    const i64 gap = (i == 0) ? n.n + us.front() - us.back() : us[i] - us[i - 1];
    out.emplace_back(us[i], gap);
  }
  return out;
}

}  // namespace gamma0fd
