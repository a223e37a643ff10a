#include <doctest.h>

#include "k3lat/discriminant.hpp"
#include "k3lat/lattice.hpp"

using namespace k3lat;

TEST_CASE("standard lattices") {
  CHECK(lattice_U().determinant() == -1);
  CHECK(lattice_An(3, -1).determinant() == -4);
  CHECK(lattice_E8(-1).determinant() == 1);
  CHECK(lattice_E8(-1).is_even());
  CHECK(lattice_E8(-1).signature() == std::pair<int, int>(0, 8));

  Lattice k3 = lattice_K3();
  CHECK(k3.rank() == 22);
  CHECK(k3.determinant() == -1);
  CHECK(k3.is_even());
  CHECK(k3.signature() == std::pair<int, int>(3, 19));
}

TEST_CASE("direct sum and rescale") {
  Lattice uu = direct_sum(lattice_U(), lattice_U());
  CHECK(uu.rank() == 4);
  CHECK(uu.determinant() == 1);

  Lattice tr = lattice_U();
  for (int i = 0; i < 6; ++i) tr = direct_sum(tr, lattice_An(3, -1));
  CHECK(tr.determinant() == -4096);

  Lattice u7 = rescale(lattice_U(), 7);
  CHECK(u7.gram(0, 1) == 7);
  CHECK(u7.gram(0, 0) == 0);

  Lattice e8m2 = rescale(lattice_E8(-1), 2);
  for (std::size_t i = 0; i < 8; ++i) CHECK(e8m2.gram(i, i) % 4 == 0);
  CHECK(e8m2.determinant() == Int(1) << 8);
  CHECK_THROWS(rescale(lattice_U(), 0));

  // det identities
  CHECK(direct_sum(lattice_An(2, -1), lattice_U()).determinant() ==
        lattice_An(2, -1).determinant() * lattice_U().determinant());
  CHECK(rescale(lattice_An(2, 1), 3).determinant() == Int(9) * lattice_An(2, 1).determinant());
}

TEST_CASE("saturate") {
  Lattice u = lattice_U();
  Sublattice s{&u, IntMat{{Int(2), Int(0)}}};
  Sublattice sat = saturate(s);
  REQUIRE(sat.basis.rows() == 1);
  CHECK(abs(sat.basis(0, 0)) == 1);
  CHECK(sat.basis(0, 1) == 0);

  Lattice z2 = lattice_diag({1, 1});
  Sublattice t{&z2, IntMat{{Int(2), Int(0)}, {Int(0), Int(3)}}};
  Sublattice sat2 = saturate(t);
  CHECK(sat2.basis == IntMat::identity(2));

  // already primitive: unchanged as a lattice
  Sublattice p{&u, IntMat{{Int(1), Int(1)}}};
  CHECK(saturate(p).basis == hnf_rowbasis(p.basis));
  CHECK(is_primitive(p));
  CHECK_FALSE(is_primitive(s));
}

TEST_CASE("orthogonal complement") {
  Lattice u = lattice_U();
  Sublattice s{&u, IntMat{{Int(1), Int(1)}}};
  Sublattice c = orthogonal_complement(s);
  REQUIRE(c.rank() == 1);
  CHECK(c.induced_gram()(0, 0) == -2);

  Sublattice full{&u, IntMat::identity(2)};
  CHECK(orthogonal_complement(full).rank() == 0);

  // idempotent on its output and always primitive
  Lattice k3 = lattice_K3();
  Sublattice x{&k3, IntMat(1, 22)};
  x.basis(0, 0) = 2;
  x.basis(0, 3) = 4;
  Sublattice cx = orthogonal_complement(x);
  CHECK(is_primitive(cx));
  Sublattice cc = orthogonal_complement(orthogonal_complement(cx));
  CHECK(hnf_rowbasis(cc.basis) == hnf_rowbasis(cx.basis));
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(lattice_U()).factors.empty());

  DiscForm a3 = discriminant_group(lattice_An(3, -1));
  REQUIRE(a3.factors.size() == 1);
  CHECK(a3.factors[0] == 4);
  CHECK(a3.q[0] == frac(-3, 4));

  // |disc| = |det|
  Lattice l = direct_sum(lattice_An(2, -1), lattice_diag({4}));
  DiscForm d = discriminant_group(l);
  Int order(1);
  for (const auto& f : d.factors) order *= f;
  CHECK(order == abs(l.determinant()));
}

TEST_CASE("glue overlattice") {
  Lattice e8m2 = rescale(lattice_E8(-1), 2);
  Lattice base = direct_sum(lattice_diag({4}), e8m2);

  // no glue: the lattice itself
  Overlattice trivial = glue_overlattice(base, {});
  CHECK(trivial.index == 1);
  CHECK(trivial.lattice.determinant() == base.determinant());

  // ZL (L^2=4) + E8(-2) glued by (L/2, v/2) with v^2 = -4
  std::vector<Rat> g(9, Rat(0));
  g[0] = frac(1, 2);
  g[1] = frac(1, 2);  // first E8 basis vector has norm -4 in E8(-2)
  Overlattice o = glue_overlattice(base, {g});
  CHECK(o.index == 2);
  CHECK(o.lattice.is_even());
  CHECK(o.lattice.determinant() == Int(1) << 8);
  CHECK(o.index * o.index * o.lattice.determinant() == base.determinant());

  // odd-norm glue is rejected
  std::vector<Rat> bad(9, Rat(0));
  bad[0] = frac(1, 2);
  CHECK_THROWS(glue_overlattice(base, {bad}));
}

TEST_CASE("disc form isomorphism") {
  Lattice a3 = lattice_An(3, -1);
  CHECK(disc_forms_isomorphic(discriminant_group(a3), discriminant_group(a3)));
  // A3(-1) disc is Z/4(-3/4); its negation Z/4(3/4) = Z/4(-5/4) is a different form
  Lattice a3p = lattice_An(3, 1);
  CHECK(disc_forms_isomorphic(discriminant_group(a3), discriminant_group(a3p), true));
  CHECK_FALSE(disc_forms_isomorphic(discriminant_group(a3), discriminant_group(a3p), false));
  // same group, different form: diag(4,4) vs diag(-4,-4)
  CHECK_FALSE(disc_forms_isomorphic(discriminant_group(lattice_diag({4, 4})),
                                    discriminant_group(lattice_diag({-4, -4}))));
  CHECK(disc_forms_isomorphic(discriminant_group(lattice_diag({4, 4})),
                              discriminant_group(lattice_diag({-4, -4})), true));
}

TEST_CASE("discriminant action") {
  Lattice a3 = lattice_An(3, -1);
  DiscForm d = discriminant_group(a3);
  DiscAction id = action_on_discriminant(a3, d, IntMat::identity(3));
  CHECK(id.is_identity);
  IntMat neg = IntMat::identity(3);
  for (int i = 0; i < 3; ++i) neg(i, i) = -1;
  DiscAction na = action_on_discriminant(a3, d, neg);
  CHECK_FALSE(na.is_identity);
}
