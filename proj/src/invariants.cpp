#include "k3lat/invariants.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

void GroupAction::check_commuting() const {
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b)
      if (!(generators[a].matrix * generators[b].matrix ==
            generators[b].matrix * generators[a].matrix))
        throw DataError(group_name + ": generators " + generators[a].name + " and " +
                        generators[b].name + " do not commute");
}

Sublattice invariant_sublattice(const GroupAction& a) {
  const std::size_t n = a.lattice->rank();
  if (a.generators.empty()) return Sublattice{a.lattice, IntMat::identity(n)};
  // x fixed by all generators: stack (M_g - I)^T and take the integer kernel
  IntMat stack(0, n);
  for (const auto& g : a.generators) {
    IntMat d = g.matrix;
    for (std::size_t i = 0; i < n; ++i) d(i, i) -= 1;
    IntMat dt = d.transposed();
    for (std::size_t i = 0; i < n; ++i) stack.append_row(dt.row(i));
  }
  IntMat k = integer_kernel(stack);
  return Sublattice{a.lattice, hnf_rowbasis(k)};
}

Sublattice coinvariant_lattice(const GroupAction& a) {
  return orthogonal_complement(invariant_sublattice(a));
}

IntMat restrict_isometry(const Sublattice& s, const IntMat& isometry) {
  const std::size_t k = s.basis.rows();
  RatMat img = to_rat(s.basis) * to_rat(isometry);
  RatMat basis = to_rat(s.basis);
  IntMat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto x = solve_in_rowspace(basis, img.row(i));
    if (!x) throw DataError("isometry does not preserve the sublattice");
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_integral((*x)[j])) throw DataError("isometry does not preserve the sublattice");
      r(i, j) = to_int((*x)[j]);
    }
  }
  return r;
}

GluedInvariant glued_invariant(const GroupAction& a, const Lattice& t_x,
                               const std::vector<std::vector<Rat>>& glue) {
  const Lattice& ns = *a.lattice;
  const std::size_t n = ns.rank(), m = t_x.rank();
  Lattice nst = direct_sum(ns, t_x);
  Overlattice over = glue_overlattice(nst, glue);

  // transport each generator, extended by the identity on T_X, to the glued basis
  std::vector<LatticeIsometry> ext;
  for (const auto& g : a.generators) {
    RatMat e(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = Rat(g.matrix(i, j));
    for (std::size_t i = 0; i < m; ++i) e(n + i, n + i) = Rat(1);
    RatMat ba = over.basis * e;
    IntMat y(n + m, n + m);
    for (std::size_t i = 0; i < n + m; ++i) {
      auto x = solve_in_rowspace(over.basis, ba.row(i));
      if (!x) throw DataError(g.name + ": action does not extend to the glued lattice");
      for (std::size_t j = 0; j < n + m; ++j) {
        if (!is_integral((*x)[j]))
          throw DataError(g.name + ": extended action is not integral on the glued lattice");
        y(i, j) = to_int((*x)[j]);
      }
    }
    ext.push_back(make_isometry(over.lattice, std::move(y), g.name));
  }

  GluedInvariant out;
  out.h2 = over.lattice;
  GroupAction ga{&out.h2, std::move(ext), a.group_name};
  Sublattice inv = invariant_sublattice(ga);
  Sublattice coinv = orthogonal_complement(inv);
  out.invariant = Lattice(inv.induced_gram());
  out.coinvariant = Lattice(coinv.induced_gram());

  // [H2^G : NS^G + T] from the determinant identity
  GroupAction on_ns{&ns, a.generators, a.group_name};
  Sublattice inv_ns = invariant_sublattice(on_ns);
  Int d_sub = det(inv_ns.induced_gram()) * t_x.determinant();
  Int d_inv = out.invariant.determinant();
  if (d_inv == 0 || d_sub % d_inv != 0)
    throw DataError("invariant determinants are inconsistent");
  Int ratio = d_sub / d_inv;
  Int r = isqrt(abs(ratio));
  if (r * r != abs(ratio)) throw DataError("index^2 identity fails");
  out.index = r;
  return out;
}

}  // namespace k3lat
