#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

struct SnfResult {
  IntMat u, d, v;  // u*m*v = d, u and v unimodular, d diagonal with d1 | d2 | ... >= 0
};

SnfResult smith_normal_form(const IntMat& m);

// rows form a saturated Z-basis of {x : m * x^T = 0}
IntMat integer_kernel(const IntMat& m);

// exact solution of a * x^T = b^T over Q, if any
std::optional<std::vector<Rat>> rational_solve(const RatMat& a, const std::vector<Rat>& b);
std::optional<std::vector<Rat>> rational_solve(const IntMat& a, const std::vector<Rat>& b);

// row-style Hermite normal form basis of the row span: full-rank list of rows,
// pivots positive, entries above each pivot reduced into [0, pivot). Canonical,
// so two row sets span the same lattice iff their HNF bases are equal.
IntMat hnf_rowbasis(const IntMat& m);

Int det(const IntMat& m);    // Bareiss, exact
Rat det(const RatMat& m);

RatMat inverse(const RatMat& m);                // throws DataError if singular
IntMat inverse_unimodular(const IntMat& m);     // inverse of a det +-1 matrix

// exact p/q-free congruence diagonalization; returns (positive, negative) counts,
// throws DataError on a degenerate form
std::pair<int, int> signature(const IntMat& gram);

// solve x * B = vec over Q for row vector x (B given by rows)
std::optional<std::vector<Rat>> solve_in_rowspace(const RatMat& basis_rows,
                                                  const std::vector<Rat>& vec);

}  // namespace k3lat
