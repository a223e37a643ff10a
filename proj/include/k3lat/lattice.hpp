#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/linalg.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

// A lattice is a free Z-module with an integer symmetric bilinear form,
// given purely by its Gram matrix; there is no ambient embedding.
struct Lattice {
  IntMat gram;
  std::vector<std::string> labels;  // optional display names, never used in computation

  Lattice() = default;
  explicit Lattice(IntMat g, std::vector<std::string> names = {});

  std::size_t rank() const { return gram.rows(); }
  bool is_even() const;
  Int determinant() const { return det(gram); }
  std::pair<int, int> signature() const { return k3lat::signature(gram); }
};

// A sublattice presented by basis rows in the coordinates of an ambient lattice.
struct Sublattice {
  const Lattice* ambient;
  IntMat basis;  // rows = basis vectors in ambient coordinates

  std::size_t rank() const { return basis.rows(); }
  IntMat induced_gram() const;
};

// standard constructors
Lattice lattice_U(Int scale = 1);
Lattice lattice_An(int n, Int scale = 1);  // root lattice A_n rescaled (use -1 for A_n(-1))
Lattice lattice_E8(Int scale = 1);
Lattice lattice_K3();                      // U^3 + E8(-1)^2, rank 22, det -1
Lattice lattice_diag(const std::vector<Int>& diag);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& n);  // throws DataError for n = 0

// primitive closure of s inside its ambient lattice
Sublattice saturate(const Sublattice& s);

// the primitive sublattice {x : x.s = 0 for all s in S}; ambient gram must be nondegenerate
Sublattice orthogonal_complement(const Sublattice& s);

bool is_primitive(const Sublattice& s);

struct Overlattice {
  Lattice lattice;
  RatMat basis;  // rows = basis of the overlattice in coordinates of the input lattice
  Int index;     // [overlattice : input]
};

// even overlattice generated by l and rational glue rows (in l-coordinates).
// Preconditions from the isotropic-subgroup correspondence: every glue row has
// integral pairing with l and with the other glue rows, and even self-pairing.
Overlattice glue_overlattice(const Lattice& l, const std::vector<std::vector<Rat>>& glue);

}  // namespace k3lat
