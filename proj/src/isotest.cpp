#include "k3lat/isotest.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

IntMat negated(const IntMat& g) {
  IntMat r = g;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

bool is_negative_definite(const Lattice& l) {
  auto [pos, neg] = l.signature();
  if (pos + neg != static_cast<int>(l.rank())) throw IndefiniteError("degenerate form");
  if (pos != 0 && neg != 0) throw IndefiniteError("form is indefinite");
  return pos == 0;
}

// histogram of |norm| counts up to bound, a cheap invariant prefilter
std::map<Int, std::size_t> norm_histogram(const Lattice& l, const Int& bound) {
  std::map<Int, std::size_t> h;
  for (const auto& v : short_vectors(l, bound).vectors) ++h[v.norm];
  return h;
}

}  // namespace

std::optional<IntMat> is_isometric(const Lattice& l1, const Lattice& l2) {
  const std::size_t n = l1.rank();
  if (l2.rank() != n) return std::nullopt;
  if (n == 0) return IntMat(0, 0);
  bool neg1 = is_negative_definite(l1), neg2 = is_negative_definite(l2);
  if (neg1 != neg2) return std::nullopt;
  if (l1.determinant() != l2.determinant()) return std::nullopt;

  IntMat g1 = neg1 ? negated(l1.gram) : l1.gram;
  IntMat g2 = neg2 ? negated(l2.gram) : l2.gram;
  Lattice p1(g1), p2(g2);
  Int m1 = minimum(p1), m2 = minimum(p2);
  if (m1 != m2) return std::nullopt;
  if (norm_histogram(p1, m1 + 4) != norm_histogram(p2, m1 + 4)) return std::nullopt;

  // work on a reduced basis of l1 so candidate norms stay small
  IntMat t = reduce_gram_basis(g1);
  IntMat g1r = t * g1 * t.transposed();
  Int maxdiag(0);
  for (std::size_t i = 0; i < n; ++i) maxdiag = std::max(maxdiag, Int(g1r(i, i)));

  ShortVectorSet sv = short_vectors(p2, maxdiag);
  // both signs, bucketed by norm; deterministic order
  std::map<Int, std::vector<std::vector<Int>>> by_norm;
  for (const auto& v : sv.vectors) {
    by_norm[v.norm].push_back(v.coords);
    std::vector<Int> m(v.coords.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = -v.coords[i];
    by_norm[v.norm].push_back(std::move(m));
  }
  for (auto& [k, vs] : by_norm) std::sort(vs.begin(), vs.end());

  std::vector<std::vector<Int>> chosen;
  // cache g2 * w^T for each candidate on demand is overkill at this scale;
  // the pairing below is the hot path
  auto pairing = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      Int acc(0);
      for (std::size_t j = 0; j < n; ++j)
        if (b[j] != 0) acc += g2(i, j) * b[j];
      s += a[i] * acc;
    }
    return s;
  };

  std::function<bool(std::size_t)> bt = [&](std::size_t i) -> bool {
    if (i == n) return true;
    auto it = by_norm.find(g1r(i, i));
    if (it == by_norm.end()) return false;
    for (const auto& w : it->second) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j)
        if (pairing(chosen[j], w) != g1r(j, i)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(w);
      if (bt(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!bt(0)) return std::nullopt;

  IntMat w(n, n);
  for (std::size_t i = 0; i < n; ++i) w.set_row(i, chosen[i]);
  IntMat m = inverse_unimodular(t) * w;
  // mandatory post-check on the original grams
  if (!(m * l2.gram * m.transposed() == l1.gram))
    throw DataError("isometry witness failed the exact post-check");
  return m;
}

}  // namespace k3lat
