#include <doctest.h>

#include "k3lat/errors.hpp"

#include "helpers.hpp"
#include "k3lat/discriminant.hpp"
#include "k3lat/fibration.hpp"

using namespace k3lat;
using k3lat::testing::pipeline;

namespace {

FiberConfiguration six_i4() {
  FiberConfiguration c;
  for (int i = 1; i <= 6; ++i) c.fibers.push_back({i, FiberType::parse("I4")});
  return c;
}

}  // namespace

TEST_CASE("fiber types and euler numbers") {
  CHECK(FiberType::parse("I4").euler() == 4);
  CHECK(FiberType::parse("I*0").euler() == 6);
  CHECK(FiberType::parse("IV*").euler() == 8);
  CHECK(FiberType::parse("III*").euler() == 9);
  CHECK(FiberType::parse("IV").euler() == 4);
  CHECK_THROWS_AS(FiberType::parse("I0"), SchemaError);
  CHECK_THROWS_AS(FiberType::parse("X3"), SchemaError);
  CHECK(six_i4().euler_sum() == 24);
}

TEST_CASE("picard rank") {
  CHECK(picard_rank(six_i4(), 0) == 20);
  FiberConfiguration c12;
  for (int i = 1; i <= 12; ++i) c12.fibers.push_back({i, FiberType::parse("I2")});
  CHECK(picard_rank(c12, 2) == 16);
  CHECK(picard_rank(FiberConfiguration{}, 0) == 2);
}

TEST_CASE("trivial lattice") {
  TrivialLattice tr = trivial_lattice(six_i4());
  CHECK(tr.rank() == 20);
  CHECK(tr.lattice.determinant() == -4096);  // same as U + A3(-1)^6
  CHECK(tr.lattice.is_even());

  FiberConfiguration none;
  TrivialLattice u = trivial_lattice(none);
  CHECK(u.rank() == 2);
  CHECK(u.lattice.determinant() == -1);
}

TEST_CASE("height pairing") {
  FiberConfiguration c = six_i4();
  SectionData t1{"t1", 4, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}}, 0};
  CHECK(height_self(t1, c, 2) == 0);

  SectionData u1{"u1", 4, {{1, 2}, {3, 3}, {4, 1}, {5, 1}, {6, 1}}, 0};
  CHECK(height_self(u1, c, 2) == 0);
  CHECK(height_pairing(t1, u1, c, 2, Rat(0)) == 0);

  // non-torsion sample: P.s = 1, all components C0
  SectionData p{"p", 1, {}, 1};
  CHECK(height_self(p, c, 2) == 6);

  // III* pairwise contribution is undefined
  FiberType iii = FiberType::parse("III*");
  CHECK_THROWS_AS(contribution(iii, 1, 1), DataError);
  // the misprinted column: type IV carries 2/3 and 1/3
  FiberType iv = FiberType::parse("IV");
  CHECK(contribution(iv, 1) == frac(2, 3));
  CHECK(contribution(iv, 1, 2) == frac(1, 3));
}

TEST_CASE("torsion section class on the six-I4 surface") {
  TrivialLattice tr = trivial_lattice(six_i4());
  SectionData t1{"t1", 4, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}}, 0};
  std::vector<Rat> v = torsion_section_class(t1, tr);
  // 2F + s - (1/4)(sum_{i=1..4}(3C1+2C2+C3) + 2C1^(5)+4C2^(5)+2C3^(5))
  std::vector<Rat> expect = {Rat(2), Rat(1)};
  for (int fiber = 1; fiber <= 6; ++fiber) {
    if (fiber <= 4) {
      expect.push_back(frac(-3, 4));
      expect.push_back(frac(-2, 4));
      expect.push_back(frac(-1, 4));
    } else if (fiber == 5) {
      expect.push_back(frac(-1, 2));
      expect.push_back(Rat(-1));
      expect.push_back(frac(-1, 2));
    } else {
      expect.insert(expect.end(), 3, Rat(0));
    }
  }
  CHECK(v == expect);
  CHECK(bilinear(tr.lattice.gram, v, v) == Rat(-2));

  // zero section maps to its own coordinate vector
  const auto& ns = pipeline("Z4xZ4").ns;
  std::vector<Rat> s = ns.mw_class_in_tr({{"t1", 4}});
  std::vector<Rat> es(tr.rank(), Rat(0));
  es[1] = Rat(1);
  CHECK(s == es);

  // inconsistent data: a 4-torsion pattern whose heights cannot vanish
  SectionData bad{"bad", 4, {{1, 1}}, 0};
  CHECK_THROWS_AS(derive_meets_zero(bad, six_i4()), DataError);
}

TEST_CASE("build_ns on the six-I4 surface") {
  const auto& p = pipeline("Z4xZ4");
  CHECK(p.ns.rank() == 20);
  CHECK(p.ns.index == 16);
  CHECK(p.ns.lattice.determinant() == -16);
  CHECK(p.ns.lattice.is_even());
  DiscForm d = discriminant_group(p.ns.lattice);
  CHECK(d.factors == std::vector<Int>{Int(4), Int(4)});
  // discriminant form Z/4(-1/4) + Z/4(-1/4), compared against diag(-4,-4)
  CHECK(disc_forms_isomorphic(d, discriminant_group(lattice_diag({-4, -4}))));
}

TEST_CASE("build_ns without extra sections returns the trivial lattice") {
  FiberConfiguration c;
  c.fibers.push_back({1, FiberType::parse("I2")});
  for (int i = 2; i <= 23; ++i) c.fibers.push_back({i, FiberType::parse("I1")});
  NsLattice ns = build_ns(c, {});
  CHECK(ns.index == 1);
  CHECK(ns.rank() == 3);
  CHECK(ns.lattice.determinant() == trivial_lattice(c).lattice.determinant());
}

TEST_CASE("index-5 overlattice for the Z5 row") {
  const auto& p = pipeline("Z5");
  CHECK(p.ns.index == 5);
  CHECK(abs(p.ns.lattice.determinant()) == 25);
}

TEST_CASE("translation isometries") {
  const auto& p = pipeline("Z4xZ4");
  // zero word gives the identity
  LatticeIsometry id = translation_isometry({{"t1", 4}}, p.ns);
  CHECK(id.order == 1);
  CHECK(id.matrix == IntMat::identity(20));

  LatticeIsometry s1 = translation_isometry({{"t1", 1}}, p.ns);
  CHECK(s1.order == 4);
  CHECK(s1.matrix * p.ns.lattice.gram * s1.matrix.transposed() == p.ns.lattice.gram);

  // sigma_t sends s to t: row of the s basis vector equals t1's coordinates
  std::size_t s_row = 0, t_row = 0;
  for (std::size_t i = 0; i < p.ns.basis_info.size(); ++i) {
    if (p.ns.basis_info[i].label == "s") s_row = i;
    if (p.ns.basis_info[i].label == "t1") t_row = i;
  }
  for (std::size_t j = 0; j < 20; ++j)
    CHECK(s1.matrix(s_row, j) == (j == t_row ? 1 : 0));

  // sigma^2 shifts components by two on the fibers t1 meets in C1
  LatticeIsometry s2 = translation_isometry({{"t1", 2}}, p.ns);
  CHECK(s2.matrix == s1.matrix * s1.matrix);
  std::size_t c1f1 = 0, c3f1 = 0;
  for (std::size_t i = 0; i < p.ns.basis_info.size(); ++i) {
    const auto& e = p.ns.basis_info[i];
    if (e.kind == NsLattice::BasisEntry::Comp && e.fiber == 1 && e.comp == 1) c1f1 = i;
    if (e.kind == NsLattice::BasisEntry::Comp && e.fiber == 1 && e.comp == 3) c3f1 = i;
  }
  // C1^(1) -> C3^(1)
  CHECK(s2.matrix(c1f1, c3f1) == 1);

  // the translations form a closed abelian set
  LatticeIsometry u1 = translation_isometry({{"u1", 1}}, p.ns);
  CHECK(s1.matrix * u1.matrix == u1.matrix * s1.matrix);
  LatticeIsometry tu = translation_isometry({{"t1", 1}, {"u1", 1}}, p.ns);
  CHECK(s1.matrix * u1.matrix == tu.matrix);
}

TEST_CASE("base involutions from bundled data") {
  const auto& p = pipeline("Z2^4");
  REQUIRE(p.action.generators.size() == 4);
  for (const auto& g : p.action.generators) CHECK(g.matrix.rows() == 20);
  CHECK(p.action.generators[2].order == 2);
  CHECK(p.action.generators[3].order == 2);
  // sigma_a fixes F and s
  const auto& a = p.action.generators[2].matrix;
  for (std::size_t i = 0; i < p.ns.basis_info.size(); ++i) {
    const auto& e = p.ns.basis_info[i];
    if (e.label == "F" || e.label == "s")
      for (std::size_t j = 0; j < 20; ++j) CHECK(a(i, j) == (i == j ? 1 : 0));
  }
  // a bad involution spec fails the consistency checks
  InvolutionSpec bad;
  bad.name = "bad";
  bad.components[{1, 1}] = {1, 2};
  bad.components[{1, 2}] = {1, 1};
  CHECK_THROWS_AS(base_involution_isometry(bad, p.ns), DataError);
}

TEST_CASE("every bundled configuration is height-consistent") {
  for (const auto& g : group_names()) {
    const auto& p = pipeline(g);
    CHECK(p.doc.config.euler_sum() == 24);
    Int tors(1);
    for (const auto& s : p.doc.sections) tors *= s.order;
    CHECK(p.ns.index == tors);
    for (const auto& s : p.ns.sections) {
      CHECK(height_self(s, p.doc.config, 2) == 0);
      std::vector<Rat> v = torsion_section_class(s, p.ns.tr);
      CHECK(bilinear(p.ns.tr.lattice.gram, v, v) == Rat(-2));
      for (const auto& c : v) CHECK(is_integral(c * s.order));
    }
  }
}
