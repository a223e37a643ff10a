#pragma once

#include <string>
#include <vector>

#include "k3lat/discriminant.hpp"
#include "k3lat/fibration.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

struct GroupAction {
  const Lattice* lattice;
  std::vector<LatticeIsometry> generators;
  std::string group_name;

  // all groups in scope are abelian; throws DataError otherwise
  void check_commuting() const;
};

// saturated common fixed sublattice of the generators
Sublattice invariant_sublattice(const GroupAction& a);

// orthogonal complement of the invariant sublattice (Omega_G when the action
// is the full symplectic group on NS)
Sublattice coinvariant_lattice(const GroupAction& a);

// restriction of an isometry of l to a sublattice it preserves, expressed on
// the sublattice basis; throws DataError if not preserved
IntMat restrict_isometry(const Sublattice& s, const IntMat& isometry);

struct GluedInvariant {
  Lattice h2;              // the full glued rank-22 lattice
  Lattice invariant;       // H^2(X,Z)^G as an abstract gram
  Lattice coinvariant;     // Omega_G computed inside the glued lattice
  Int index;               // [H^2G : NS^G + T_X]
};

// glue NS + T_X to a unimodular rank-22 lattice via the given glue rows
// (rational rows in NS+T coordinates), extend the action by the identity on
// T_X, and compute the invariant/coinvariant pair there
GluedInvariant glued_invariant(const GroupAction& a, const Lattice& t_x,
                               const std::vector<std::vector<Rat>>& glue);

}  // namespace k3lat
