#include "k3lat/discriminant.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "k3lat/errors.hpp"

namespace k3lat {

Int DiscForm::order() const {
  Int p(1);
  for (const auto& f : factors) p *= f;
  return p;
}

std::string DiscForm::group_string() const {
  if (factors.empty()) return "trivial";
  std::string out;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += "+";
    std::string base = "Z/" + factors[i].get_str();
    if (j - i > 1)
      out += "(" + base + ")^" + std::to_string(j - i);
    else
      out += base;
    i = j;
  }
  return out;
}

Rat DiscForm::q_of(const Elem& c) const {
  Rat s(0);
  const std::size_t k = factors.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i] == 0) continue;
    s += Rat(Int(c[i]) * Int(c[i])) * q[i];
    for (std::size_t j = i + 1; j < k; ++j)
      if (c[j] != 0) s += Rat(2 * Int(c[i]) * Int(c[j])) * b(i, j);
  }
  return mod2(s);
}

Rat DiscForm::b_of(const Elem& c, const Elem& d) const {
  Rat s(0);
  const std::size_t k = factors.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (c[i] != 0 && d[j] != 0) s += Rat(Int(c[i]) * Int(d[j])) * b(i, j);
  return mod1(s);
}

Int DiscForm::order_of(const Elem& c) const {
  Int o(1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (c[i] == 0) continue;
    Int g = gcd(factors[i], Int(c[i]));
    Int oi = factors[i] / g;
    o = o / gcd(o, oi) * oi;
  }
  return o;
}

std::vector<DiscForm::Elem> DiscForm::elements() const {
  std::vector<Elem> out;
  const std::size_t k = factors.size();
  Elem cur(k, 0);
  Int total = order();
  out.reserve(total.get_ui());
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < k) {
      if (++cur[i] < factors[i].get_si()) break;
      cur[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

DiscForm discriminant_group(const Lattice& l) {
  const std::size_t n = l.rank();
  if (l.determinant() == 0) throw DataError("degenerate form has no discriminant group");
  SnfResult s = smith_normal_form(l.gram);
  RatMat ginv = inverse(to_rat(l.gram));
  IntMat vinv = inverse_unimodular(s.v);
  DiscForm d;
  std::vector<std::vector<Rat>> lifts;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.d(i, i) <= 1) continue;
    d.factors.push_back(s.d(i, i));
    std::vector<Rat> row(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(vinv(i, j));
    // generator of Z^n / Z^n*gram, mapped into the dual: row * gram^{-1}
    std::vector<Rat> lift(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k2 = 0; k2 < n; ++k2) lift[j] += row[k2] * ginv(k2, j);
    lifts.push_back(std::move(lift));
  }
  const std::size_t k = d.factors.size();
  d.gen_lifts = RatMat(k, n);
  for (std::size_t i = 0; i < k; ++i) d.gen_lifts.set_row(i, lifts[i]);
  d.q.resize(k);
  d.b = RatMat(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    d.q[i] = mod2(bilinear(l.gram, lifts[i], lifts[i]));
    for (std::size_t j = 0; j < k; ++j)
      d.b(i, j) = mod1(bilinear(l.gram, lifts[i], lifts[j]));
  }
  return d;
}

namespace {

struct IsoSearch {
  const DiscForm& a;
  const DiscForm& b;
  bool negate;
  std::vector<DiscForm::Elem> elems;           // all elements of b
  std::vector<std::size_t> radix;              // mixed-radix strides for b-tuples
  std::size_t total;
  std::vector<DiscForm::Elem> chosen;
  std::vector<char> span;                      // indicator on element indices
  std::vector<std::size_t> span_list;

  std::size_t index_of(const DiscForm::Elem& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += radix[i] * static_cast<std::size_t>(e[i]);
    return idx;
  }

  DiscForm::Elem add(const DiscForm::Elem& x, const DiscForm::Elem& y) const {
    DiscForm::Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = (x[i] + y[i]) % b.factors[i].get_si();
    return r;
  }

  // grow span by the cyclic group generated by e; returns number of elements added
  std::size_t grow(const DiscForm::Elem& e) {
    std::size_t added = 0;
    std::vector<std::size_t> base = span_list;
    for (std::size_t bi : base) {
      DiscForm::Elem cur = elems[bi];
      while (true) {
        cur = add(cur, e);
        std::size_t idx = index_of(cur);
        if (span[idx]) break;
        span[idx] = 1;
        span_list.push_back(idx);
        ++added;
      }
    }
    return added;
  }

  void shrink(std::size_t added) {
    while (added--) {
      span[span_list.back()] = 0;
      span_list.pop_back();
    }
  }

  bool bt(std::size_t i, const std::vector<std::vector<std::size_t>>& cands) {
    if (i == a.ngens()) return span_list.size() == total;
    for (std::size_t ci : cands[i]) {
      const auto& w = elems[ci];
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        Rat want = a.b(j, i);
        if (negate) want = mod1(-want);
        if (b.b_of(chosen[j], w) != want) ok = false;
      }
      if (!ok) continue;
      // span must grow by a factor of exactly h_i for an isomorphism
      std::size_t before = span_list.size();
      std::size_t added = grow(w);
      bool sized = (span_list.size() == before * a.factors[i].get_ui());
      if (sized) {
        chosen.push_back(w);
        if (bt(i + 1, cands)) return true;
        chosen.pop_back();
      }
      shrink(added);
    }
    return false;
  }
};

}  // namespace

bool disc_forms_isomorphic(const DiscForm& a, const DiscForm& b, bool negate) {
  if (a.factors != b.factors) return false;
  if (a.ngens() == 0) return true;
  IsoSearch s{a, b, negate, b.elements(), {}, 0, {}, {}, {}};
  const std::size_t k = b.factors.size();
  s.radix.assign(k, 1);
  for (std::size_t i = 1; i < k; ++i)
    s.radix[i] = s.radix[i - 1] * static_cast<std::size_t>(b.factors[i - 1].get_si());
  s.total = s.elems.size();
  // candidate lists per generator, keyed by order and q-value
  std::vector<std::vector<std::size_t>> cands(a.ngens());
  for (std::size_t gi = 0; gi < a.ngens(); ++gi) {
    Rat want_q = a.q[gi];
    if (negate) want_q = mod2(-want_q);
    for (std::size_t ei = 0; ei < s.elems.size(); ++ei) {
      if (b.order_of(s.elems[ei]) != a.factors[gi]) continue;
      if (b.q_of(s.elems[ei]) != want_q) continue;
      cands[gi].push_back(ei);
    }
    if (cands[gi].empty()) return false;
  }
  s.span.assign(s.total, 0);
  s.span[0] = 1;
  s.span_list.push_back(0);
  return s.bt(0, cands);
}

DiscAction action_on_discriminant(const Lattice& l, const DiscForm& d, const IntMat& isometry) {
  const std::size_t n = l.rank();
  DiscAction act;
  act.is_identity = true;
  act.images = RatMat(d.ngens(), n);
  RatMat iso = to_rat(isometry);
  for (std::size_t i = 0; i < d.ngens(); ++i) {
    std::vector<Rat> img(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) img[j] += d.gen_lifts(i, k) * iso(k, j);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral(img[j] - d.gen_lifts(i, j))) act.is_identity = false;
      img[j] = mod1(img[j]);
    }
    act.images.set_row(i, img);
  }
  return act;
}

}  // namespace k3lat
