#include "gamma0fd/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "gamma0fd/cosets.hpp"
#include "gamma0fd/cusps.hpp"
#include "gamma0fd/domain.hpp"
#include "gamma0fd/projline.hpp"
#include "gamma0fd/width.hpp"

namespace gamma0fd {

namespace {

// Exact endpoint transport stays inside __int128 for levels below this.
constexpr i64 endpoint_check_bound = 150;

struct run {
  verify_report& rep;

  void fail(const std::string& suite, const std::string& detail) {
    rep.ok = false;
    rep.failures.push_back({suite, detail});
  }

  void require(bool ok, const std::string& suite, const std::string& detail) {
    if (!ok) fail(suite, detail);
  }

  template <typename F>
  void suite(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(name, e.what());
    }
  }
};

}  // namespace

verify_report verify_modulus(i64 nv) {
  verify_report rep;
  rep.n = nv;
  run r{rep};

  const modulus n(nv);
  width_table wt;
  r.suite("width-two-route", [&] { wt = build_width_table(n); });
  if (!rep.ok) return rep;  // everything downstream needs the table

  r.suite("width-sums", [&] {
    i64 total = 0, unit_sum = 0;
    for (i64 j = 0; j < nv; ++j) {
      const i64 w = wt.at(j);
      total += w;
      if (gcd(j, nv) == 1) unit_sum += w;
    }
    const i64 psi = psi_index(nv);
    r.require(total == psi, "width-sums",
              "sum " + std::to_string(total) + " != psi " + std::to_string(psi));
    r.require(unit_sum == nv, "width-sums",
              "unit sum " + std::to_string(unit_sum) + " != " + std::to_string(nv));
    r.require(total - unit_sum == psi - nv, "width-sums", "nonunit sum mismatch");
  });

  r.suite("unit-gaps", [&] {
    i64 gap_sum = 0;
    for (auto [u, gap] : unit_gaps(n)) {
      gap_sum += gap;
      const i64 w = wt.at(mod_inv(u, nv));
      r.require(w == gap, "unit-gaps",
                "width at inverse of " + std::to_string(u) + " is " + std::to_string(w) +
                    ", gap is " + std::to_string(gap));
    }
    r.require(gap_sum == nv, "unit-gaps", "gaps sum to " + std::to_string(gap_sum));
  });

  coset_table table;
  r.suite("coset-bijection", [&] {
    table = build_cosets(n);
    const std::vector<proj_point> line = enumerate_p1(n);
    r.require(table.size() == static_cast<i64>(line.size()), "coset-bijection",
              "representative count differs from |P^1|");
    std::vector<proj_point> rows = table.rows;
    std::sort(rows.begin(), rows.end());
    r.require(rows == line, "coset-bijection", "row images differ from P^1(Z/n)");
  });
  if (!rep.ok) return rep;

  r.suite("coset-affine-split", [&] {
    for (i64 k = 0; k < table.size(); ++k) {
      const coset_rep& cr = table.reps[static_cast<size_t>(k)];
      const proj_point& p = table.rows[static_cast<size_t>(k)];
      const bool affine = gcd(p.a, nv) == 1;
      r.require(affine == (cr.form == coset_rep::shape::st), "coset-affine-split",
                "rep " + cr.str() + " lands on the wrong side of the affine split");
      r.require(table.rep_for(p) == cr, "coset-affine-split",
                "lookup does not invert the row map at " + cr.str());
    }
  });

  r.suite("cusp-classes", [&] {
    const auto grouped = classify_domain_cusps(table);
    const i64 expected = cusp_class_count(n);
    r.require(static_cast<i64>(grouped.size()) == expected, "cusp-classes",
              "domain produced " + std::to_string(grouped.size()) + " classes, expected " +
                  std::to_string(expected));
    i64 width_total = 0;
    for (const auto& [cl, members] : grouped) width_total += class_width(cl, n);
    r.require(width_total == psi_index(nv), "cusp-classes",
              "class widths sum to " + std::to_string(width_total));
  });

  r.suite("fiber-widths", [&] {
    for (i64 d : divisors(nv)) {
      if (d == 1) continue;
      const divisor_split sp = split_divisor(d, n);
      const std::vector<i64> bs =
          sp.d_double == 1 ? std::vector<i64>{0} : units(sp.d_double);
      for (i64 b : bs) {
        const auto [lhs, rhs] = fiber_width_sum(d, b, wt);
        r.require(lhs == rhs, "fiber-widths",
                  "d=" + std::to_string(d) + " b=" + std::to_string(b) + ": " +
                      std::to_string(lhs) + " != " + std::to_string(rhs));
        fiber_gaps(d, b, n);  // throws if the gap identities fail

        // Inversion: the fiber over b^{-1} is the elementwise inverse.
        const i64 binv = sp.d_double == 1 ? 0 : mod_inv(b, sp.d_double);
        std::vector<i64> inverted;
        for (i64 k : fiber_over(d, b, n).elements) {
          const i64 kin = sp.d_prime == 1 ? 1 : mod_inv(k, sp.d_prime);
          inverted.push_back(kin == 0 ? sp.d_prime : kin);
        }
        std::sort(inverted.begin(), inverted.end());
        r.require(inverted == fiber_over(d, binv, n).elements, "fiber-widths",
                  "fiber inversion fails at d=" + std::to_string(d) +
                      " b=" + std::to_string(b));
      }
    }
  });

  r.suite("gluing", [&] {
    const std::vector<boundary_arc> arcs = boundary_arcs(table);
    i64 expected = 2 + euler_phi(nv);
    for (i64 j = 0; j < nv; ++j)
      if (gcd(j, nv) > 1) expected += 2 + wt.max_exp(j);
    r.require(static_cast<i64>(arcs.size()) == expected, "gluing",
              "arc census has " + std::to_string(arcs.size()) + " entries, expected " +
                  std::to_string(expected));

    const std::vector<gluing_pair> pairs = glue(table);
    std::set<std::string> seen;
    i64 covered = 0;
    for (const gluing_pair& p : pairs) {
      r.require(in_gamma0(p.g, n), "gluing", "witness outside the group at " + p.arc1.str());
      r.require(p.g.det() == 1, "gluing", "witness determinant differs from 1");
      covered += (p.arc1 == p.arc2) ? 1 : 2;
      seen.insert(p.arc1.str());
      seen.insert(p.arc2.str());
      if (nv <= endpoint_check_bound) verify_pair_endpoints(p, n);
      if (p.arc1 == p.arc2)
        r.require(p.g.trace() == 0, "gluing",
                  "self-paired witness at " + p.arc1.str() + " is not order 2");
    }
    i64 non_ray = 0;
    for (const boundary_arc& a : arcs) non_ray += a.ray ? 0 : 1;
    r.require(covered == non_ray && static_cast<i64>(seen.size()) == non_ray, "gluing",
              "pairing does not cover the census exactly once");
  });

  r.suite("surface", [&] {
    const surface_data s = compute_genus(table);
    rep.genus = s.genus;
    r.require(s.edges == 2 * s.faces, "surface", "edge count differs from 2F");
    r.require((s.vertices - s.edges + s.faces) % 2 == 0, "surface", "odd characteristic");
  });

  r.suite("connectivity", [&] {
    r.require(domain_connected(table), "connectivity", "domain adjacency graph is disconnected");
  });

  return rep;
}

std::string verify_line_json(const verify_report& r) {
  nlohmann::ordered_json doc;
  doc["n"] = r.n;
  doc["ok"] = r.ok;
  if (r.genus >= 0) doc["genus"] = r.genus;
  if (!r.failures.empty()) {
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const check_failure& f : r.failures) {
      nlohmann::ordered_json e;
      e["suite"] = f.suite;
      e["detail"] = f.detail;
      fails.push_back(std::move(e));
    }
    doc["failures"] = std::move(fails);
  }
  doc["schema"] = 1;
  return doc.dump();
}

}  // namespace gamma0fd
