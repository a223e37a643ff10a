#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/discriminant.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// glue class (L/r, v/r) for an even overlattice of ZL + Omega
struct GlueVector {
  Int r;
  std::vector<Int> v;  // element of Omega with v/r in the dual
};

struct NsCandidate {
  std::string group;
  Int d;       // L^2 = 2d
  Int index;   // overlattice index r (1 = split)
  Lattice gram;
  std::optional<GlueVector> glue;
};

// all even overlattices of ZL + omega (L^2 = 2d) in which omega stays
// primitive and L generates the orthogonal complement of omega:
// r > 1 with r | 2d, disc elements x of order exactly r with
// q(x) = -2d/r^2 mod 2Z, deduplicated as lattices. The split candidate
// always comes first; ordering is deterministic.
std::vector<NsCandidate> even_overlattices(const Int& d, const Lattice& omega,
                                           const std::string& group_label = "");

struct Obstruction {
  bool obstructed;
  std::string reason;  // empty when unobstructed
};

// the generator-count necessary condition: a rank-r even lattice of signature
// (1, r-1) cannot embed primitively in the K3 lattice when its discriminant
// group needs more than 22 - r generators. "unobstructed" is inconclusive.
Obstruction embedding_obstruction(const Lattice& m);

// exact representation search: x with x * gram * x^T = target, by exhaustive
// box search; nullopt = none found within the box
std::optional<std::vector<Int>> represent(const Lattice& q, const Int& target, long box);

// the Z/7Z perp form 4p^2 + 2pq + 2q^2 + 14rs and its closed-form families;
// verdicts are definitive for every d (mod-7 square criterion)
struct Zeta7Verdict {
  bool representable;
  std::optional<std::vector<Int>> witness;  // (p, q, r, s) with value 2d
};
Zeta7Verdict zeta7_represent_2d(const Int& d);
Lattice zeta7_perp_form();

}  // namespace k3lat
