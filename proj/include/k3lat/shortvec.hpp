#pragma once

#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct ShortVector {
  std::vector<Int> coords;
  Int norm;  // |q(v)|, positive
};

struct ShortVectorSet {
  Int bound;
  std::vector<ShortVector> vectors;  // one per +-pair, sorted by (norm, coords)
};

// pair-reduction sweeps: returns t with t * g * t^T having smaller diagonal;
// t is unimodular. Works for definite g of either sign.
IntMat reduce_gram_basis(const IntMat& g);

// complete Fincke-Pohst enumeration of 0 < |q(v)| <= bound, one vector per
// +-pair, exact rational arithmetic; throws IndefiniteError unless the form is
// positive or negative definite
ShortVectorSet short_vectors(const Lattice& l, const Int& bound);

Int minimum(const Lattice& l);             // smallest |norm| of a nonzero vector
bool generated_by_minimal(const Lattice& l);  // minimal vectors span with index 1

// exhaustive coefficient-box search, the independent oracle for short_vectors
ShortVectorSet brute_force_short_vectors(const Lattice& l, const Int& bound, long box);

}  // namespace k3lat
