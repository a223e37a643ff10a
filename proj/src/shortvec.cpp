#include "k3lat/shortvec.hpp"

#include <algorithm>
#include <functional>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

bool negative_definite_sign(const Lattice& l) {
  auto [pos, neg] = l.signature();
  if (pos + neg != static_cast<int>(l.rank())) throw IndefiniteError("degenerate form");
  if (pos == 0) return true;
  if (neg == 0) return false;
  throw IndefiniteError("form is indefinite");
}

IntMat negated(const IntMat& g) {
  IntMat r = g;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

struct Ldl {
  RatMat l;            // unit lower triangular
  std::vector<Rat> d;  // positive pivots
};

// q(x) = sum_i d_i (x_i + sum_{j>i} l(j,i) x_j)^2 for positive definite input
Ldl ldl_decompose(const IntMat& g) {
  const std::size_t n = g.rows();
  Ldl out{RatMat(n, n), std::vector<Rat>(n)};
  RatMat a = to_rat(g);
  for (std::size_t i = 0; i < n; ++i) {
    Rat di = a(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= out.d[k] * out.l(i, k) * out.l(i, k);
    if (!(di > 0)) throw IndefiniteError("form is not positive definite");
    out.d[i] = di;
    out.l(i, i) = Rat(1);
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = a(j, i);
      for (std::size_t k = 0; k < i; ++k) v -= out.d[k] * out.l(j, k) * out.l(i, k);
      out.l(j, i) = v / di;
    }
  }
  return out;
}

// largest integer k with k + u <= sqrt(r); assumes r >= 0
Int floor_center_plus_sqrt(const Rat& u, const Rat& r) {
  Rat mu = -u;
  Int k = floor_div(mu.get_num(), mu.get_den());  // k + u <= 0 always qualifies
  while (true) {
    Rat v = Rat(k + 1) + u;
    if (v * v <= r)
      k += 1;
    else
      break;
  }
  return k;
}

}  // namespace

IntMat reduce_gram_basis(const IntMat& g_in) {
  const std::size_t n = g_in.rows();
  IntMat g = g_in;
  IntMat t = IntMat::identity(n);
  bool changed = true;
  int rounds = 0;
  while (changed && rounds < 200) {
    changed = false;
    ++rounds;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || g(j, j) == 0) continue;
        Int q = round_div(-g(i, j), g(j, j));
        if (q == 0) continue;
        Int newnorm = g(i, i) + 2 * q * g(i, j) + q * q * g(j, j);
        if (abs(newnorm) >= abs(g(i, i))) continue;
        for (std::size_t k = 0; k < n; ++k) t(i, k) += q * t(j, k);
        for (std::size_t k = 0; k < n; ++k) g(i, k) += q * g(j, k);
        for (std::size_t k = 0; k < n; ++k) g(k, i) += q * g(k, j);
        changed = true;
      }
  }
  return t;
}

ShortVectorSet short_vectors(const Lattice& l, const Int& bound) {
  const std::size_t n = l.rank();
  bool neg = negative_definite_sign(l);
  IntMat gpos = neg ? negated(l.gram) : l.gram;
  IntMat t = reduce_gram_basis(gpos);
  IntMat gr = t * gpos * t.transposed();
  Ldl f = ldl_decompose(gr);

  ShortVectorSet out;
  out.bound = bound;
  std::vector<Int> x(n, Int(0));
  std::vector<Rat> u(n, Rat(0));

  // iterative depth-first walk from coordinate n-1 down to 0
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t level, Rat rem) {
    std::size_t i = level - 1;
    Rat ui(0);
    for (std::size_t j = level; j < n; ++j)
      if (x[j] != 0) ui += f.l(j, i) * Rat(x[j]);
    Rat lim = rem / f.d[i];
    Int hi = floor_center_plus_sqrt(ui, lim);
    Int lo = -floor_center_plus_sqrt(-ui, lim);
    for (Int xi = lo; xi <= hi; xi += 1) {
      Rat v = Rat(xi) + ui;
      Rat used = f.d[i] * v * v;
      if (used > rem) continue;
      x[i] = xi;
      if (i == 0) {
        bool nz = false;
        for (const auto& c : x)
          if (c != 0) nz = true;
        if (nz) {
          // map back to original coordinates, canonicalize the sign
          std::vector<Int> orig(n, Int(0));
          for (std::size_t a = 0; a < n; ++a)
            if (x[a] != 0)
              for (std::size_t b = 0; b < n; ++b) orig[b] += x[a] * t(a, b);
          for (const auto& c : orig) {
            if (c == 0) continue;
            if (c < 0)
              for (auto& cc : orig) cc = -cc;
            break;
          }
          Int nrm = to_int(Rat(bound) - (rem - used));
          out.vectors.push_back({std::move(orig), nrm});
        }
      } else {
        rec(i, rem - used);
      }
    }
    x[i] = 0;
  };
  if (n > 0 && bound > 0) rec(n, Rat(bound));

  std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end(),
                                [](const ShortVector& a, const ShortVector& b) {
                                  return a.coords == b.coords;
                                }),
                    out.vectors.end());
  return out;
}

Int minimum(const Lattice& l) {
  if (l.rank() == 0) throw DataError("minimum of the zero lattice");
  bool neg = negative_definite_sign(l);
  Int bound = abs(l.gram(0, 0));
  for (std::size_t i = 1; i < l.rank(); ++i) bound = std::min(bound, Int(abs(l.gram(i, i))));
  // reduction can only lower the diagonal; a basis vector realizes the bound
  IntMat t = reduce_gram_basis(neg ? negated(l.gram) : l.gram);
  IntMat gr = t * (neg ? negated(l.gram) : l.gram) * t.transposed();
  for (std::size_t i = 0; i < l.rank(); ++i) bound = std::min(bound, Int(gr(i, i)));
  ShortVectorSet sv = short_vectors(l, bound);
  if (sv.vectors.empty()) throw DataError("minimum: enumeration came back empty");
  return sv.vectors.front().norm;
}

bool generated_by_minimal(const Lattice& l) {
  Int m = minimum(l);
  ShortVectorSet sv = short_vectors(l, m);
  IntMat stack(0, l.rank());
  for (const auto& v : sv.vectors)
    if (v.norm == m) stack.append_row(v.coords);
  if (stack.rows() < l.rank()) return false;
  SnfResult s = smith_normal_form(stack);
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (s.d(i, i) != 1) return false;
  return true;
}

ShortVectorSet brute_force_short_vectors(const Lattice& l, const Int& bound, long box) {
  const std::size_t n = l.rank();
  negative_definite_sign(l);  // reject indefinite inputs like the real enumerator
  ShortVectorSet out;
  out.bound = bound;
  std::vector<long> x(n, -box);
  while (true) {
    std::vector<Int> v(n);
    bool nz = false;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Int(x[i]);
      if (x[i] != 0) nz = true;
    }
    if (nz) {
      Int q = to_int(bilinear(l.gram, v, v));
      Int a = abs(q);
      if (a > 0 && a <= bound) {
        for (const auto& c : v) {
          if (c == 0) continue;
          if (c < 0)
            for (auto& cc : v) cc = -cc;
          break;
        }
        out.vectors.push_back({v, a});
      }
    }
    std::size_t i = 0;
    while (i < n && ++x[i] > box) x[i++] = -box;
    if (i == n) break;
  }
  std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end(),
                                [](const ShortVector& a, const ShortVector& b) {
                                  return a.coords == b.coords;
                                }),
                    out.vectors.end());
  return out;
}

}  // namespace k3lat
