#include "k3lat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

// extended gcd: returns (g, x, y) with x*a + y*b = g, g = gcd(a,b) >= 0
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m_in) {
  IntMat m = m_in;
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMat u = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);
  const std::size_t rmax = std::min(rows, cols);

  std::size_t t = 0;
  while (t < rmax) {
    // re-select the minimal-absolute-value nonzero pivot each round; this keeps
    // coefficient growth in check (any correct strategy is admissible)
    bool have = false;
    std::size_t pi = 0, pj = 0;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        Int a = abs(m(i, j));
        if (!have || a < best) {
          have = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!have) break;  // rest of matrix is zero
    m.swap_rows(t, pi);
    u.swap_rows(t, pi);
    m.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      Int q = floor_div(m(i, t), m(t, t));
      if (q != 0)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) -= q * m(t, c);
      if (q != 0)
        for (std::size_t c = 0; c < rows; ++c) u(i, c) -= q * u(t, c);
      if (m(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      Int q = floor_div(m(t, j), m(t, t));
      if (q != 0) {
        for (std::size_t r = 0; r < rows; ++r) m(r, j) -= q * m(r, t);
        for (std::size_t r = 0; r < cols; ++r) v(r, j) -= q * v(r, t);
      }
      if (m(t, j) != 0) dirty = true;
    }
    if (!dirty) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (m(i, t) != 0) clean = false;
      for (std::size_t j = t + 1; j < cols && clean; ++j)
        if (m(t, j) != 0) clean = false;
      if (clean) ++t;
    }
  }

  // enforce the divisibility chain by pairwise gcd/lcm surgery on the diagonal
  std::size_t r = 0;
  while (r < rmax && m(r, r) != 0) ++r;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        if (m(j, j) % m(i, i) == 0) continue;
        Int a = m(i, i), b = m(j, j), g, x, y;
        xgcd(a, b, g, x, y);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) += m(j, c);
        for (std::size_t c = 0; c < rows; ++c) u(i, c) += u(j, c);
        Int bi = b / g, bj = a / g;
        for (std::size_t row = 0; row < rows; ++row) {
          Int ci = m(row, i), cj = m(row, j);
          m(row, i) = x * ci + y * cj;
          m(row, j) = -bi * ci + bj * cj;
        }
        for (std::size_t row = 0; row < cols; ++row) {
          Int ci = v(row, i), cj = v(row, j);
          v(row, i) = x * ci + y * cj;
          v(row, j) = -bi * ci + bj * cj;
        }
        Int q = m(j, i) / m(i, i);
        for (std::size_t c = 0; c < cols; ++c) m(j, c) -= q * m(i, c);
        for (std::size_t c = 0; c < rows; ++c) u(j, c) -= q * u(i, c);
        changed = true;
      }
  }
  for (std::size_t i = 0; i < rmax; ++i) {
    if (m(i, i) < 0) {
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = -m(i, c);
      for (std::size_t c = 0; c < rows; ++c) u(i, c) = -u(i, c);
    }
  }
  return {std::move(u), std::move(m), std::move(v)};
}

IntMat integer_kernel(const IntMat& m) {
  const std::size_t n = m.cols();
  SnfResult s = smith_normal_form(m);
  std::size_t r = 0;
  const std::size_t rmax = std::min(m.rows(), n);
  while (r < rmax && s.d(r, r) != 0) ++r;
  // solutions are spanned by columns r..n-1 of v (saturated since v is unimodular)
  IntMat k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = s.v(j, i);
  return k;
}

std::optional<std::vector<Rat>> rational_solve(const RatMat& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMat m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    m.swap_rows(row, sel);
    Rat pv = m(row, col);
    for (std::size_t j = col; j <= cols; ++j) m(row, j) /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j <= cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2) x[pivot_col[r2]] = m(r2, cols);
  return x;
}

std::optional<std::vector<Rat>> rational_solve(const IntMat& a, const std::vector<Rat>& b) {
  return rational_solve(to_rat(a), b);
}

IntMat hnf_rowbasis(const IntMat& m_in) {
  const std::size_t n = m_in.cols();
  std::vector<std::vector<Int>> work;
  for (std::size_t i = 0; i < m_in.rows(); ++i) {
    auto r = m_in.row(i);
    bool nz = false;
    for (const auto& x : r)
      if (x != 0) nz = true;
    if (nz) work.push_back(std::move(r));
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Int>> here, rest;
    for (auto& r : work)
      (r[col] != 0 ? here : rest).push_back(std::move(r));
    if (here.empty()) {
      work = std::move(rest);
      continue;
    }
    while (here.size() > 1) {
      std::sort(here.begin(), here.end(), [&](const auto& a, const auto& b) {
        return abs(a[col]) < abs(b[col]);
      });
      const auto p = here.front();
      std::vector<std::vector<Int>> next{p};
      for (std::size_t k = 1; k < here.size(); ++k) {
        Int q = floor_div(here[k][col], p[col]);
        std::vector<Int> nr(n);
        bool nz = false;
        for (std::size_t j = 0; j < n; ++j) {
          nr[j] = here[k][j] - q * p[j];
          if (nr[j] != 0) nz = true;
        }
        if (!nz) continue;
        if (nr[col] != 0)
          next.push_back(std::move(nr));
        else
          rest.push_back(std::move(nr));
      }
      here = std::move(next);
    }
    auto p = here.front();
    if (p[col] < 0)
      for (auto& x : p) x = -x;
    basis.push_back(std::move(p));
    work = std::move(rest);
  }
  // reduce entries above each pivot
  for (std::size_t i = basis.size(); i-- > 0;) {
    std::size_t pc = 0;
    while (basis[i][pc] == 0) ++pc;
    for (std::size_t k = 0; k < i; ++k) {
      Int q = floor_div(basis[k][pc], basis[i][pc]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) basis[k][j] -= q * basis[i][j];
    }
  }
  IntMat out(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i) out.set_row(i, basis[i]);
  return out;
}

Int det(const IntMat& m_in) {
  const std::size_t n = m_in.rows();
  if (n == 0) return Int(1);
  IntMat m = m_in;
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sw = k + 1;
      while (sw < n && m(sw, k) == 0) ++sw;
      if (sw == n) return Int(0);
      m.swap_rows(k, sw);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat det(const RatMat& m_in) {
  RatMat m = m_in;
  const std::size_t n = m.rows();
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      m.swap_rows(col, sel);
      d = -d;
    }
    d *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m_in) {
  const std::size_t n = m_in.rows();
  RatMat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m_in(i, j);
    m(i, n + i) = Rat(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) throw DataError("singular matrix");
    m.swap_rows(col, sel);
    Rat pv = m(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) m(col, j) /= pv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, n + j);
  return out;
}

IntMat inverse_unimodular(const IntMat& m) {
  RatMat inv = inverse(to_rat(m));
  IntMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(inv(i, j))) throw DataError("matrix is not unimodular");
      out(i, j) = to_int(inv(i, j));
    }
  return out;
}

std::pair<int, int> signature(const IntMat& gram) {
  std::size_t size = gram.rows();
  RatMat m = to_rat(gram);
  int pos = 0, neg = 0;
  while (size > 0) {
    std::size_t p = size;
    for (std::size_t i = 0; i < size; ++i)
      if (m(i, i) != 0) {
        p = i;
        break;
      }
    if (p == size) {
      // all diagonal zero: bring in an off-diagonal entry
      std::size_t qi = size, qj = size;
      for (std::size_t i = 0; i < size && qi == size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
          if (m(i, j) != 0) {
            qi = i;
            qj = j;
            break;
          }
      if (qi == size) throw DataError("degenerate form");
      for (std::size_t c = 0; c < size; ++c) m(qi, c) += m(qj, c);
      for (std::size_t r = 0; r < size; ++r) m(r, qi) += m(r, qj);
      p = qi;
    }
    if (p != 0) {
      m.swap_rows(0, p);
      m.swap_cols(0, p);
    }
    Rat d = m(0, 0);
    if (d > 0)
      ++pos;
    else
      ++neg;
    RatMat next(size - 1, size - 1);
    for (std::size_t i = 1; i < size; ++i)
      for (std::size_t j = 1; j < size; ++j)
        next(i - 1, j - 1) = m(i, j) - m(i, 0) * m(0, j) / d;
    m = std::move(next);
    --size;
  }
  return {pos, neg};
}

std::optional<std::vector<Rat>> solve_in_rowspace(const RatMat& basis_rows,
                                                  const std::vector<Rat>& vec) {
  return rational_solve(basis_rows.transposed(), vec);
}

}  // namespace k3lat
