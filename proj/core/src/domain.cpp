#include "gamma0fd/domain.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace gamma0fd {

char edge_letter(edge_side e) {
  switch (e) {
    case edge_side::left: return 'L';
    case edge_side::right: return 'R';
    case edge_side::base: return 'B';
  }
  return '?';
}

std::string boundary_arc::str() const { return rep.str() + edge_letter(edge); }

std::vector<boundary_arc> boundary_arcs(const coset_table& t) {
  const modulus n = t.mod();
  const i64 lo = sym_min(n), hi = sym_max(n);
  std::vector<boundary_arc> out;

  out.push_back({{coset_rep::shape::st, hi, 0}, edge_side::left, false});
  out.push_back({{coset_rep::shape::st, lo, 0}, edge_side::right, false});
  for (i64 i = lo; i <= hi; ++i)
    if (gcd(((i % n.n) + n.n) % n.n, n.n) == 1)
      out.push_back({{coset_rep::shape::st, i, 0}, edge_side::base, false});
  for (i64 j = lo; j <= hi; ++j) {
    const i64 jr = ((j % n.n) + n.n) % n.n;
    if (gcd(jr, n.n) <= 1) continue;
    const bool ray = (j == 0);
    const i64 top = t.widths.max_exp(j);
    out.push_back({{coset_rep::shape::stst, j, 0}, edge_side::right, ray});
    out.push_back({{coset_rep::shape::stst, j, top}, edge_side::left, ray});
    for (i64 m = 1; m <= top; ++m)
      out.push_back({{coset_rep::shape::stst, j, m}, edge_side::base, false});
  }
  return out;
}

namespace {

mat2 side_element(edge_side e1, edge_side e2) {
  if (e1 == edge_side::left && e2 == edge_side::right) return mat2::gen_t();
  if (e1 == edge_side::base && e2 == edge_side::base) return mat2::gen_s();
  throw pairing_failure("no gluing element for edge sides " +
                        std::string(1, edge_letter(e1)) + "/" +
                        std::string(1, edge_letter(e2)));
}

using arc_key = std::tuple<int, i64, i64, int>;

arc_key key_of(const boundary_arc& a) {
  return {static_cast<int>(a.rep.form), a.rep.t1, a.rep.t2, static_cast<int>(a.edge)};
}

}  // namespace

mat2 gluing_witness(const boundary_arc& a1, const boundary_arc& a2, modulus n) {
  const mat2 x = side_element(a1.edge, a2.edge);
  const mat2 m1 = word_to_matrix(a1.rep.word());
  const mat2 m2 = word_to_matrix(a2.rep.word());
  mat2 g = m1 * x * m2.inverse();
  if (g.c < 0 || (g.c == 0 && g.a < 0)) g = -g;
  if (!in_gamma0(g, n))
    throw pairing_failure("witness for " + a1.str() + " ~ " + a2.str() +
                          " has lower-left " + std::to_string(g.c) +
                          " not divisible by " + std::to_string(n.n));
  return g;
}

std::vector<gluing_pair> glue(const coset_table& t) {
  const modulus n = t.mod();
  const std::vector<boundary_arc> arcs = boundary_arcs(t);

  std::map<arc_key, i64> index;
  for (size_t k = 0; k < arcs.size(); ++k) index[key_of(arcs[k])] = static_cast<i64>(k);
  std::vector<char> consumed(arcs.size(), 0);

  const auto arc_at = [&](const boundary_arc& probe) -> const boundary_arc& {
    auto it = index.find(key_of(probe));
    if (it == index.end())
      throw pairing_failure("partner arc " + probe.str() + " is not in the census");
    return arcs[static_cast<size_t>(it->second)];
  };
  const auto consume = [&](const boundary_arc& a) {
    const i64 k = index.at(key_of(a));
    if (consumed[static_cast<size_t>(k)])
      throw pairing_failure("arc " + a.str() + " matched twice");
    consumed[static_cast<size_t>(k)] = 1;
  };

  std::vector<gluing_pair> pairs;
  const auto emit = [&](const boundary_arc& a1, const boundary_arc& a2) {
    gluing_pair p{a1, a2, gluing_witness(a1, a2, n)};
    // Row-level coset agreement: [m1 * X] = [m2].
    const mat2 m1 = word_to_matrix(a1.rep.word());
    const mat2 m2 = word_to_matrix(a2.rep.word());
    if (!proj_eq(row_map(m1 * side_element(a1.edge, a2.edge), n), row_map(m2, n)))
      throw pairing_failure("row classes differ across " + a1.str() + " ~ " + a2.str());
    if (a1.edge == edge_side::left) {
      // The witness must carry arc2's cusp endpoint to arc1's.
      const cusp inf{1, 0};
      if (!(mobius_cusp(p.g, mobius_cusp(m2, inf)) == mobius_cusp(m1, inf)))
        throw pairing_failure("cusp endpoint mismatch across " + a1.str() + " ~ " + a2.str());
    }
    consume(a1);
    if (!(a1 == a2)) consume(a2);
    pairs.push_back(std::move(p));
  };

  const i64 lo = sym_min(n), hi = sym_max(n);
  const width_table& wt = t.widths;

  // Outer verticals of the fan.
  emit({{coset_rep::shape::st, hi, 0}, edge_side::left, false},
       {{coset_rep::shape::st, lo, 0}, edge_side::right, false});

  // Base arcs at unit positions: i pairs with the representative of -i^{-1}.
  for (i64 i = lo; i <= hi; ++i) {
    const i64 ir = ((i % n.n) + n.n) % n.n;
    if (gcd(ir, n.n) != 1) continue;
    const boundary_arc a1 = arc_at({{coset_rep::shape::st, i, 0}, edge_side::base, false});
    if (consumed[static_cast<size_t>(index.at(key_of(a1)))]) continue;
    const i64 partner = sym_rep(-mod_inv(ir, n.n), n);
    const boundary_arc a2 = arc_at({{coset_rep::shape::st, partner, 0}, edge_side::base, false});
    emit(a1, a2);
  }

  // Chain ends: the final left arc of chain j meets the right arc of the
  // chain at (1 - j*W_j)^{-1} * j.  The j = 0 chain contributes the rays,
  // identified by T and reported outside the pairing.
  for (i64 j = lo; j <= hi; ++j) {
    const i64 jr = ((j % n.n) + n.n) % n.n;
    if (j == 0 || gcd(jr, n.n) <= 1) continue;
    const i64 w = wt.at(jr);
    const i64 first_unit = (((jr * w - 1) % n.n) + n.n) % n.n;
    const i64 partner = sym_rep(mod_inv(((-first_unit % n.n) + n.n) % n.n, n.n) * jr, n);
    const boundary_arc a1 =
        arc_at({{coset_rep::shape::stst, j, wt.max_exp(jr)}, edge_side::left, false});
    const boundary_arc a2 =
        arc_at({{coset_rep::shape::stst, partner, 0}, edge_side::right, false});
    emit(a1, a2);
    // The two ends belong to one cusp class.
    const cusp c1 = mobius_cusp(word_to_matrix(a1.rep.word()), cusp{1, 0});
    const cusp c2 = mobius_cusp(word_to_matrix(a2.rep.word()), cusp{1, 0});
    if (!(classify_cusp(c1, n) == classify_cusp(c2, n)))
      throw pairing_failure("cusp classes differ across " + a1.str() + " ~ " + a2.str());
  }

  // Free base arcs of the chains: partner found through the row lookup.
  for (i64 j = lo; j <= hi; ++j) {
    const i64 jr = ((j % n.n) + n.n) % n.n;
    if (gcd(jr, n.n) <= 1) continue;
    for (i64 m = 1; m <= wt.max_exp(jr); ++m) {
      const boundary_arc a1 = arc_at({{coset_rep::shape::stst, j, m}, edge_side::base, false});
      if (consumed[static_cast<size_t>(index.at(key_of(a1)))]) continue;
      const coset_rep& partner = t.rep_for(canonicalize(j * m - 1, -j, n));
      if (partner.form != coset_rep::shape::stst || partner.t2 < 1)
        throw pairing_failure("partner of " + a1.str() + " is not a free base arc");
      // Involution: the partner's own lookup must come back.
      const coset_rep& back = t.rep_for(canonicalize(partner.t1 * partner.t2 - 1, -partner.t1, n));
      if (!(back == a1.rep))
        throw pairing_failure("base pairing is not an involution at " + a1.str());
      // Exact cross-product congruence.
      const __int128 lhs = __int128{j} * partner.t1 +
                           (__int128{j} * m - 1) * (__int128{partner.t1} * partner.t2 - 1);
      if (static_cast<i64>(((lhs % n.n) + n.n) % n.n) != 0)
        throw pairing_failure("cross-product congruence fails at " + a1.str());
      const boundary_arc a2 =
          arc_at({{coset_rep::shape::stst, partner.t1, partner.t2}, edge_side::base, false});
      emit(a1, a2);
    }
  }

  for (size_t k = 0; k < arcs.size(); ++k)
    if (!arcs[k].ray && !consumed[k])
      throw pairing_failure("arc " + arcs[k].str() + " left unmatched");
    else if (arcs[k].ray && consumed[k])
      throw pairing_failure("ray " + arcs[k].str() + " entered the pairing");

  return pairs;
}

void verify_pair_endpoints(const gluing_pair& p, modulus n) {
  if (!in_gamma0(p.g, n))
    throw pairing_failure("witness outside the group across " + p.arc1.str() + " ~ " +
                          p.arc2.str());
  const mat2 m1 = word_to_matrix(p.arc1.rep.word());
  const mat2 m2 = word_to_matrix(p.arc2.rep.word());
  const auto carried = [&](const quad_point& z) { return mobius_quad(p.g, mobius_quad(m2, z)); };
  const auto mismatch = [&](const char* what) {
    throw pairing_failure(std::string("endpoint transport mismatch (") + what + ") across " +
                          p.arc1.str() + " ~ " + p.arc2.str());
  };
  if (p.arc1.edge == edge_side::left && p.arc2.edge == edge_side::right) {
    if (!(mobius_cusp(p.g, mobius_cusp(m2, cusp{1, 0})) == mobius_cusp(m1, cusp{1, 0})))
      mismatch("cusp");
    if (!(carried(corner_zeta3()) == mobius_quad(m1, corner_zeta6()))) mismatch("corner");
  } else if (p.arc1.edge == edge_side::base && p.arc2.edge == edge_side::base) {
    if (!(carried(corner_zeta3()) == mobius_quad(m1, corner_zeta6()))) mismatch("corner");
    if (!(carried(corner_zeta6()) == mobius_quad(m1, corner_zeta3()))) mismatch("corner");
    if (!(carried(point_i()) == mobius_quad(m1, point_i()))) mismatch("order-2 point");
  } else {
    throw pairing_failure("unexpected edge sides in pair " + p.arc1.str() + " ~ " + p.arc2.str());
  }
}

namespace {

struct union_find {
  std::vector<i64> parent;
  explicit union_find(i64 size) : parent(static_cast<size_t>(size)) {
    for (i64 k = 0; k < size; ++k) parent[static_cast<size_t>(k)] = k;
  }
  i64 find(i64 x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(i64 x, i64 y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

// Per-face slots.  Edges: the base is subdivided at the order-2 point, so
// b1 runs corner3 -> i and b2 runs i -> corner6.
enum : i64 { e_left = 0, e_right = 1, e_b1 = 2, e_b2 = 3 };
enum : i64 { v_inf = 0, v_c3 = 1, v_i = 2, v_c6 = 3 };

}  // namespace

surface_data compute_genus(const coset_table& t) {
  const modulus n = t.mod();
  const i64 faces = t.size();

  std::map<std::tuple<int, i64, i64>, i64> face_of;
  for (i64 k = 0; k < faces; ++k) {
    const coset_rep& r = t.reps[static_cast<size_t>(k)];
    face_of[{static_cast<int>(r.form), r.t1, r.t2}] = k;
  }
  const auto face = [&](coset_rep::shape f, i64 a, i64 b) {
    auto it = face_of.find({static_cast<int>(f), a, b});
    if (it == face_of.end()) throw error("face lookup failed in genus computation");
    return it->second;
  };

  std::vector<i64> partner(static_cast<size_t>(4 * faces), -1);
  union_find verts(4 * faces);
  i64 edge_count = 0;

  const auto match_edge = [&](i64 s1, i64 s2) {
    if (s1 == s2) throw non_orientable_or_open("edge slot glued to itself");
    if (partner[static_cast<size_t>(s1)] != -1 || partner[static_cast<size_t>(s2)] != -1)
      throw non_orientable_or_open("edge slot glued twice");
    partner[static_cast<size_t>(s1)] = s2;
    partner[static_cast<size_t>(s2)] = s1;
    ++edge_count;
  };
  const auto left_right = [&](i64 f1, i64 f2) {
    // f1's left edge lies on f2's right edge: shared cusp, corner6 ~ corner3.
    match_edge(4 * f1 + e_left, 4 * f2 + e_right);
    verts.unite(4 * f1 + v_inf, 4 * f2 + v_inf);
    verts.unite(4 * f1 + v_c6, 4 * f2 + v_c3);
  };
  const auto base_base = [&](i64 f1, i64 f2) {
    // The flip reverses the base and fixes the order-2 point.
    if (f1 == f2) {
      match_edge(4 * f1 + e_b1, 4 * f1 + e_b2);
      verts.unite(4 * f1 + v_c3, 4 * f1 + v_c6);
      return;
    }
    match_edge(4 * f1 + e_b1, 4 * f2 + e_b2);
    match_edge(4 * f1 + e_b2, 4 * f2 + e_b1);
    verts.unite(4 * f1 + v_c3, 4 * f2 + v_c6);
    verts.unite(4 * f1 + v_c6, 4 * f2 + v_c3);
    verts.unite(4 * f1 + v_i, 4 * f2 + v_i);
  };

  const i64 lo = sym_min(n), hi = sym_max(n);

  // Interior identifications of the connected domain: consecutive fan
  // triangles, consecutive chain triangles, and each chain's head glued to
  // the fan triangle it hangs from across the base.
  for (i64 i = lo; i < hi; ++i)
    left_right(face(coset_rep::shape::st, i, 0), face(coset_rep::shape::st, i + 1, 0));
  for (i64 j = lo; j <= hi; ++j) {
    const i64 jr = ((j % n.n) + n.n) % n.n;
    if (gcd(jr, n.n) <= 1) continue;
    for (i64 m = 0; m < t.widths.max_exp(jr); ++m)
      left_right(face(coset_rep::shape::stst, j, m), face(coset_rep::shape::stst, j, m + 1));
    base_base(face(coset_rep::shape::stst, j, 0), face(coset_rep::shape::st, j, 0));
  }

  // The two rays bound the head of the j = 0 chain and are identified by T.
  {
    const i64 f = face(coset_rep::shape::stst, 0, 0);
    match_edge(4 * f + e_right, 4 * f + e_left);
    verts.unite(4 * f + v_c3, 4 * f + v_c6);
  }

  // Boundary identifications from the pairing.
  for (const gluing_pair& p : glue(t)) {
    const i64 f1 = face(p.arc1.rep.form, p.arc1.rep.t1, p.arc1.rep.t2);
    const i64 f2 = face(p.arc2.rep.form, p.arc2.rep.t1, p.arc2.rep.t2);
    if (p.arc1.edge == edge_side::left)
      left_right(f1, f2);
    else
      base_base(f1, f2);
  }

  if (edge_count != 2 * faces)
    throw non_orientable_or_open("expected " + std::to_string(2 * faces) +
                                 " edges, glued " + std::to_string(edge_count));
  for (i64 s = 0; s < 4 * faces; ++s)
    if (partner[static_cast<size_t>(s)] == -1)
      throw non_orientable_or_open("edge slot left unmatched");

  i64 vertices = 0;
  for (i64 v = 0; v < 4 * faces; ++v)
    if (verts.find(v) == v) ++vertices;

  const i64 chi = vertices - 2 * faces + faces;
  if (chi % 2 != 0) throw non_orientable_or_open("odd Euler characteristic");
  surface_data s;
  s.faces = faces;
  s.edges = 2 * faces;
  s.vertices = vertices;
  s.genus = (2 - chi) / 2;
  if (s.genus < 0) throw non_orientable_or_open("negative genus");
  return s;
}

bool domain_connected(const coset_table& t) {
  const modulus n = t.mod();
  const i64 faces = t.size();
  std::map<std::tuple<int, i64, i64>, i64> face_of;
  for (i64 k = 0; k < faces; ++k) {
    const coset_rep& r = t.reps[static_cast<size_t>(k)];
    face_of[{static_cast<int>(r.form), r.t1, r.t2}] = k;
  }
  union_find uf(faces);
  const auto join = [&](coset_rep::shape f1, i64 a1, i64 b1, coset_rep::shape f2, i64 a2, i64 b2) {
    uf.unite(face_of.at({static_cast<int>(f1), a1, b1}),
             face_of.at({static_cast<int>(f2), a2, b2}));
  };
  const i64 lo = sym_min(n), hi = sym_max(n);
  for (i64 i = lo; i < hi; ++i)
    join(coset_rep::shape::st, i, 0, coset_rep::shape::st, i + 1, 0);
  for (i64 j = lo; j <= hi; ++j) {
    const i64 jr = ((j % n.n) + n.n) % n.n;
    if (gcd(jr, n.n) <= 1) continue;
    join(coset_rep::shape::stst, j, 0, coset_rep::shape::st, j, 0);
    for (i64 m = 0; m < t.widths.max_exp(jr); ++m)
      join(coset_rep::shape::stst, j, m, coset_rep::shape::stst, j, m + 1);
  }
  const i64 root = uf.find(0);
  for (i64 k = 1; k < faces; ++k)
    if (uf.find(k) != root) return false;
  return true;
}

}  // namespace gamma0fd
