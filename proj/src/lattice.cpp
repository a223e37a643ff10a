#include "k3lat/lattice.hpp"

#include <algorithm>

#include "k3lat/errors.hpp"

namespace k3lat {

Lattice::Lattice(IntMat g, std::vector<std::string> names)
    : gram(std::move(g)), labels(std::move(names)) {
  if (!gram.is_symmetric()) throw DataError("gram matrix is not symmetric");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

IntMat Sublattice::induced_gram() const {
  return basis * ambient->gram * basis.transposed();
}

Lattice lattice_U(Int scale) {
  IntMat g(2, 2);
  g(0, 1) = scale;
  g(1, 0) = scale;
  return Lattice(std::move(g));
}

Lattice lattice_An(int n, Int scale) {
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2 * scale;
    if (i + 1 < n) {
      g(i, i + 1) = -scale;
      g(i + 1, i) = -scale;
    }
  }
  return Lattice(std::move(g));
}

Lattice lattice_E8(Int scale) {
  // chain 0-1-2-3-4-5-6 with node 7 attached to node 4
  IntMat g(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = 2 * scale;
  auto edge = [&](int a, int b) {
    g(a, b) = -scale;
    g(b, a) = -scale;
  };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return Lattice(std::move(g));
}

Lattice lattice_K3() {
  Lattice l = direct_sum(lattice_U(), lattice_U());
  l = direct_sum(l, lattice_U());
  l = direct_sum(l, lattice_E8(-1));
  return direct_sum(l, lattice_E8(-1));
}

Lattice lattice_diag(const std::vector<Int>& diag) {
  IntMat g(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
  return Lattice(std::move(g));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMat g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
  std::vector<std::string> labels;
  if (!a.labels.empty() || !b.labels.empty()) {
    labels = a.labels;
    labels.resize(n);
    auto bl = b.labels;
    bl.resize(m);
    labels.insert(labels.end(), bl.begin(), bl.end());
  }
  return Lattice(std::move(g), std::move(labels));
}

Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw DataError("rescale by zero");
  IntMat g = l.gram;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
  return Lattice(std::move(g), l.labels);
}

Sublattice saturate(const Sublattice& s) {
  // saturation = kernel of the kernel (both taken with the standard dot product)
  const std::size_t n = s.ambient->rank();
  if (s.basis.rows() == 0) return s;
  IntMat k = integer_kernel(s.basis);  // rows y with basis * y^T = 0
  if (k.rows() == 0) {
    return Sublattice{s.ambient, IntMat::identity(n)};
  }
  IntMat sat = integer_kernel(k);
  return Sublattice{s.ambient, hnf_rowbasis(sat)};
}

Sublattice orthogonal_complement(const Sublattice& s) {
  IntMat a = s.basis * s.ambient->gram;  // x in complement iff a * x^T = 0
  IntMat k = integer_kernel(a);
  return Sublattice{s.ambient, hnf_rowbasis(k)};
}

bool is_primitive(const Sublattice& s) {
  if (s.basis.rows() == 0) return true;
  SnfResult r = smith_normal_form(s.basis);
  const std::size_t k = std::min(s.basis.rows(), s.basis.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (r.d(i, i) != 1) return false;
  return true;
}

Overlattice glue_overlattice(const Lattice& l, const std::vector<std::vector<Rat>>& glue) {
  const std::size_t n = l.rank();
  // validate the glue against the even-overlattice correspondence
  for (const auto& g : glue) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> ej(n, Rat(0));
      ej[j] = Rat(1);
      if (!is_integral(bilinear(l.gram, g, ej)))
        throw DataError("glue vector has non-integral pairing with the lattice");
    }
    Rat q = bilinear(l.gram, g, g);
    if (!is_integral(q) || to_int(q) % 2 != 0)
      throw DataError("glue vector has odd or non-integral norm");
  }
  for (std::size_t a = 0; a < glue.size(); ++a)
    for (std::size_t b = a + 1; b < glue.size(); ++b)
      if (!is_integral(bilinear(l.gram, glue[a], glue[b])))
        throw DataError("glue vectors have non-integral pairing");

  Int den(1);
  for (const auto& g : glue)
    for (const auto& x : g) den = den / gcd(den, Int(x.get_den())) * Int(x.get_den());
  IntMat stack(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> r(n, Int(0));
    r[i] = den;
    stack.append_row(r);
  }
  for (const auto& g : glue) {
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = to_int(Rat(g[j] * den));
    stack.append_row(r);
  }
  IntMat h = hnf_rowbasis(stack);
  if (h.rows() != n) throw DataError("glue did not preserve rank");
  RatMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = frac(h(i, j), den);
  IntMat gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat v = bilinear(l.gram, basis.row(i), basis.row(j));
      if (!is_integral(v)) throw DataError("overlattice gram is not integral");
      gram(i, j) = to_int(v);
      gram(j, i) = gram(i, j);
    }
  }
  Rat bdet = det(basis);
  Rat idx = Rat(1) / abs(bdet);
  if (!is_integral(idx)) throw DataError("overlattice index is not integral");
  return Overlattice{Lattice(std::move(gram)), std::move(basis), to_int(idx)};
}

}  // namespace k3lat
