#pragma once

#include <string>
#include <vector>

#include "gamma0fd/cosets.hpp"
#include "gamma0fd/cusps.hpp"
#include "gamma0fd/geometry.hpp"

namespace gamma0fd {

enum class edge_side : std::uint8_t { left, right, base };
char edge_letter(edge_side e);

// One boundary arc of the connected fundamental domain: an edge of one
// translated triangle.  The two degenerate arcs of the j = 0 chain are the
// vertical rays bounding the top triangle; they are flagged and excluded
// from the pairing proper (they are identified by T).
struct boundary_arc {
  coset_rep rep;
  edge_side edge = edge_side::base;
  bool ray = false;

  std::string str() const;
  bool operator==(const boundary_arc&) const = default;
};

// Census of all boundary arcs in deterministic order: the two outer
// verticals of the fan, then the base arcs of the unit positions, then per
// chain its right arc, its final left arc, and its free base arcs.
std::vector<boundary_arc> boundary_arcs(const coset_table& t);

// A matched pair with its explicit witness: arc1 = g . arc2 setwise, g in
// Gamma_0(n).  arc1 == arc2 only for self-paired base arcs.
struct gluing_pair {
  boundary_arc arc1;
  boundary_arc arc2;
  mat2 g;
};

// Complete pairing of the non-ray boundary arcs.  Every arc appears in
// exactly one pair, the pairing is an involution, and every witness is
// checked for membership, row-level coset agreement, and (for base pairs)
// the exact cross-product congruence.  Throws pairing_failure on any gap.
std::vector<gluing_pair> glue(const coset_table& t);

// Witness g = m1 * X * m2^{-1} (X = T for left/right pairs, X = S for base
// pairs), sign-normalized so the lower-left entry is >= 0 (upper-left > 0
// when it is 0).  Throws pairing_failure if g is not in Gamma_0(n).
mat2 gluing_witness(const boundary_arc& a1, const boundary_arc& a2, modulus n);

// Transports arc2's exact endpoints through the witness and compares with
// arc1's: cusp ends via reduced fractions, corner ends via quadratic
// points.  Throws pairing_failure on mismatch and arithmetic_overflow when
// the level is too large for the guarded exact path.
void verify_pair_endpoints(const gluing_pair& p, modulus n);

// Closed-surface data of the glued domain.  Faces are the translated
// triangles, each cut into a 4-gon (base subdivided at the order-2 point
// so self-paired bases stay cellular); edges and vertices are counted
// after identification, vertices by union-find.
struct surface_data {
  i64 faces = 0;
  i64 edges = 0;
  i64 vertices = 0;
  i64 genus = 0;
};

// Throws non_orientable_or_open if any edge slot stays unmatched or the
// Euler characteristic comes out odd.
surface_data compute_genus(const coset_table& t);

// The shared-edge adjacency graph over the representatives has a single
// component; this is what makes the domain connected.
bool domain_connected(const coset_table& t);

}  // namespace gamma0fd
