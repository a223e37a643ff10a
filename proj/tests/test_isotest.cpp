#include <doctest.h>

#include "k3lat/errors.hpp"

#include <random>

#include "k3lat/isotest.hpp"

using namespace k3lat;

namespace {

// random unimodular change of basis with small entries
IntMat random_unimodular(std::size_t n, std::mt19937& rng) {
  IntMat t = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), c(-2, 2);
  for (int step = 0; step < 30; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int q(c(rng));
    for (std::size_t k = 0; k < n; ++k) t(i, k) += q * t(j, k);
  }
  return t;
}

}  // namespace

TEST_CASE("a lattice is isometric to itself, with identity admissible") {
  Lattice a3 = lattice_An(3, -1);
  auto w = is_isometric(a3, a3);
  REQUIRE(w.has_value());
  CHECK(*w * a3.gram * w->transposed() == a3.gram);
}

TEST_CASE("isometry is found across a basis change") {
  std::mt19937 rng(11);
  Lattice e8m2 = rescale(lattice_E8(-1), 2);
  IntMat t = random_unimodular(8, rng);
  Lattice conj(t * e8m2.gram * t.transposed());
  auto w = is_isometric(conj, e8m2);
  REQUIRE(w.has_value());
  CHECK(*w * e8m2.gram * w->transposed() == conj.gram);
  // and symmetrically
  auto w2 = is_isometric(e8m2, conj);
  REQUIRE(w2.has_value());
}

TEST_CASE("negative verdicts") {
  // same determinant and rank, different minimum
  Lattice a(IntMat{{Int(2), Int(1)}, {Int(1), Int(2)}});
  Lattice b = lattice_diag({1, 3});
  CHECK_FALSE(is_isometric(a, b).has_value());
  // determinant prefilter
  CHECK_FALSE(is_isometric(lattice_diag({-2, -2}), lattice_diag({-2, -4})).has_value());
  // sign mismatch
  CHECK_FALSE(is_isometric(lattice_diag({2, 2}), lattice_diag({-2, -2})).has_value());
  // same rank, det, and minimum, distinguished by the norm histogram
  CHECK_FALSE(is_isometric(lattice_diag({4, 4, 16}), lattice_diag({4, 8, 8})).has_value());
  // same histogram up to min+4 as well: refuted only by exhausting the search
  Lattice p1 = lattice_diag({4, 36});
  Lattice p2(IntMat{{Int(4), Int(2)}, {Int(2), Int(37)}});
  CHECK(p1.determinant() == p2.determinant());
  CHECK_FALSE(is_isometric(p1, p2).has_value());
  CHECK_FALSE(is_isometric(p2, p1).has_value());
  // indefinite input is rejected
  CHECK_THROWS_AS(is_isometric(lattice_U(), lattice_U()), IndefiniteError);
}
