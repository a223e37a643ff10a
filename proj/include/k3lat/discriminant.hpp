#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// The finite quadratic form on L~/L for a nondegenerate even lattice L:
// invariant factors h1 | h2 | ... (> 1), generator lifts in L-coordinates,
// q in Q/2Z (canonical range (-2,0]) and b in Q/Z (range [0,1)).
struct DiscForm {
  std::vector<Int> factors;
  RatMat gen_lifts;          // one row per generator
  std::vector<Rat> q;        // q(g_i)
  RatMat b;                  // b(g_i, g_j)

  std::size_t ngens() const { return factors.size(); }
  Int order() const;
  std::string group_string() const;  // e.g. "(Z/2)^2+(Z/8)^2"

  // values on arbitrary elements, given as coefficient tuples mod factors
  using Elem = std::vector<std::int64_t>;
  Rat q_of(const Elem& c) const;
  Rat b_of(const Elem& c, const Elem& d) const;
  Int order_of(const Elem& c) const;
  std::vector<Elem> elements() const;  // all |D| tuples
};

DiscForm discriminant_group(const Lattice& l);

// exact isomorphism test between two finite quadratic forms by backtracking
// over generator images (negate = compare q1 against -q2)
bool disc_forms_isomorphic(const DiscForm& a, const DiscForm& b, bool negate = false);

// the action a lattice isometry induces on the discriminant group
struct DiscAction {
  bool is_identity;
  RatMat images;  // image of each generator lift, reduced into [0,1)^n coordinates
};
DiscAction action_on_discriminant(const Lattice& l, const DiscForm& d, const IntMat& isometry);

}  // namespace k3lat
