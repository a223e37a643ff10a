#include "k3lat/fibration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "k3lat/errors.hpp"

namespace k3lat {

int FiberType::components() const {
  switch (kind) {
    case FiberKind::In: return n;
    case FiberKind::InStar: return n + 5;
    case FiberKind::IV: return 3;
    case FiberKind::IVStar: return 7;
    case FiberKind::IIIStar: return 8;
  }
  return 0;
}

int FiberType::euler() const {
  switch (kind) {
    case FiberKind::In: return n;
    case FiberKind::InStar: return n + 6;
    case FiberKind::IV: return 4;
    case FiberKind::IVStar: return 8;
    case FiberKind::IIIStar: return 9;
  }
  return 0;
}

FiberType FiberType::parse(const std::string& s) {
  if (s == "IV") return {FiberKind::IV, 0};
  if (s == "IV*") return {FiberKind::IVStar, 0};
  if (s == "III*") return {FiberKind::IIIStar, 0};
  try {
    if (s.size() >= 2 && s[0] == 'I' && s[1] == '*') {
      int n = std::stoi(s.substr(2));
      if (n < 0) throw SchemaError("bad fiber type " + s);
      return {FiberKind::InStar, n};
    }
    if (s.size() >= 2 && s[0] == 'I') {
      int n = std::stoi(s.substr(1));
      if (n < 1) throw SchemaError("bad fiber type " + s);
      return {FiberKind::In, n};
    }
  } catch (const std::logic_error&) {
  }
  throw SchemaError("unknown fiber type " + s);
}

std::string FiberType::str() const {
  switch (kind) {
    case FiberKind::In: return "I" + std::to_string(n);
    case FiberKind::InStar: return "I*" + std::to_string(n);
    case FiberKind::IV: return "IV";
    case FiberKind::IVStar: return "IV*";
    case FiberKind::IIIStar: return "III*";
  }
  return "?";
}

int FiberConfiguration::euler_sum() const {
  int s = 0;
  for (const auto& f : fibers) s += f.type.euler();
  return s;
}

std::vector<Fiber> FiberConfiguration::reducible() const {
  std::vector<Fiber> out;
  for (const auto& f : fibers)
    if (f.type.components() >= 2) out.push_back(f);
  return out;
}

const Fiber& FiberConfiguration::by_label(int label) const {
  for (const auto& f : fibers)
    if (f.label == label) return f;
  throw SchemaError("no fiber with label " + std::to_string(label));
}

Rat contribution(const FiberType& t, int i) {
  switch (t.kind) {
    case FiberKind::In: {
      int m = ((i % t.n) + t.n) % t.n;
      return frac(Int(m) * Int(t.n - m), Int(t.n));
    }
    case FiberKind::InStar:
      if (i == 0) return Rat(0);
      if (i == 1) return Rat(1);
      if (i == t.n - 1 || i == t.n) return frac(4 + t.n, 4);
      throw DataError("section cannot meet this I*_n component");
    case FiberKind::IV:
      return (i % 3) == 0 ? Rat(0) : frac(2, 3);
    case FiberKind::IVStar:
      return i == 0 ? Rat(0) : frac(4, 3);
    case FiberKind::IIIStar:
      return i == 0 ? Rat(0) : frac(3, 2);
  }
  return Rat(0);
}

Rat contribution(const FiberType& t, int i, int j) {
  switch (t.kind) {
    case FiberKind::In: {
      int a = ((i % t.n) + t.n) % t.n, b = ((j % t.n) + t.n) % t.n;
      if (a > b) std::swap(a, b);
      return frac(Int(a) * Int(t.n - b), Int(t.n));
    }
    case FiberKind::InStar:
      if (i == 0 || j == 0) return Rat(0);
      if (i == 1 || j == 1) return frac(1, 2);
      return frac(8 + t.n, 4);
    case FiberKind::IV:
      if (i % 3 == 0 || j % 3 == 0) return Rat(0);
      if (i == j) return frac(2, 3);
      return frac(1, 3);
    case FiberKind::IVStar:
      if (i == 0 || j == 0) return Rat(0);
      if (i == j) return frac(4, 3);
      return frac(2, 3);
    case FiberKind::IIIStar:
      if (i == 0 || j == 0) return Rat(0);
      throw DataError("pairwise contribution undefined for III*");
  }
  return Rat(0);
}

int picard_rank(const FiberConfiguration& config, int mw_rank) {
  int s = mw_rank + 2;
  for (const auto& f : config.reducible()) s += f.type.components() - 1;
  return s;
}

TrivialLattice trivial_lattice(const FiberConfiguration& config) {
  TrivialLattice tr;
  tr.config = config;
  tr.basis.push_back({TrivialLattice::BasisEntry::F});
  tr.basis.push_back({TrivialLattice::BasisEntry::S});
  std::vector<std::string> labels = {"F", "s"};
  Lattice l(IntMat{{Int(0), Int(1)}, {Int(1), Int(-2)}});
  for (const auto& f : config.reducible()) {
    if (f.type.kind != FiberKind::In)
      throw DataError("trivial lattice implemented for I_n configurations only");
    l = direct_sum(l, lattice_An(f.type.n - 1, Int(-1)));
    for (int i = 1; i < f.type.n; ++i) {
      tr.basis.push_back({TrivialLattice::BasisEntry::Comp, f.label, i});
      labels.push_back("C" + std::to_string(i) + "(" + std::to_string(f.label) + ")");
    }
  }
  l.labels = std::move(labels);
  tr.lattice = std::move(l);
  return tr;
}

Rat height_self(const SectionData& p, const FiberConfiguration& config, int chi) {
  Rat s(0);
  for (const auto& f : config.reducible()) {
    auto it = p.meets.find(f.label);
    s += contribution(f.type, it == p.meets.end() ? 0 : it->second);
  }
  int ps = p.meets_zero.value_or(0);
  return Rat(2 * chi + 2 * ps) - s;
}

Rat height_pairing(const SectionData& p, const SectionData& q, const FiberConfiguration& config,
                   int chi, const Rat& pq) {
  Rat s(0);
  for (const auto& f : config.reducible()) {
    auto ip = p.meets.find(f.label);
    auto iq = q.meets.find(f.label);
    s += contribution(f.type, ip == p.meets.end() ? 0 : ip->second,
                      iq == q.meets.end() ? 0 : iq->second);
  }
  return Rat(chi + p.meets_zero.value_or(0) + q.meets_zero.value_or(0)) - pq - s;
}

int derive_meets_zero(const SectionData& p, const FiberConfiguration& config, int chi) {
  Rat s(0);
  for (const auto& f : config.reducible()) {
    auto it = p.meets.find(f.label);
    s += contribution(f.type, it == p.meets.end() ? 0 : it->second);
  }
  Rat ps = (s - Rat(2 * chi)) / 2;
  if (!is_integral(ps) || ps < 0)
    throw DataError("section " + p.name + ": height-zero relation gives invalid P.s = " +
                    to_string(ps));
  return static_cast<int>(to_int(ps).get_si());
}

std::vector<Rat> torsion_section_class(const SectionData& p, const TrivialLattice& tr) {
  const std::size_t n = tr.rank();
  std::vector<Rat> rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = tr.basis[k];
    switch (e.kind) {
      case TrivialLattice::BasisEntry::F: rhs[k] = Rat(1); break;
      case TrivialLattice::BasisEntry::S:
        rhs[k] = Rat(p.meets_zero.value());
        break;
      case TrivialLattice::BasisEntry::Comp: {
        auto it = p.meets.find(e.fiber);
        int met = it == p.meets.end() ? 0 : it->second;
        int d = tr.config.by_label(e.fiber).type.components();
        met = ((met % d) + d) % d;
        rhs[k] = Rat(met == e.comp ? 1 : 0);
        break;
      }
    }
  }
  auto x = rational_solve(tr.lattice.gram, rhs);
  if (!x) throw DataError("section " + p.name + ": no class with the given intersections");
  Rat norm = bilinear(tr.lattice.gram, *x, *x);
  if (norm != -2)
    throw DataError("section " + p.name + ": class has self-intersection " + to_string(norm));
  for (const auto& c : *x)
    if (!is_integral(c * Rat(p.order)))
      throw DataError("section " + p.name + ": order*class is not integral");
  return *x;
}

const SectionData& NsLattice::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return s;
  throw SchemaError("unknown section " + name);
}

SectionData NsLattice::mw_section(const MwWord& w) const {
  SectionData out;
  out.order = 1;
  bool zero = true;
  for (const auto& [name, c] : w) {
    const auto& gen = section(name);
    if (c % gen.order != 0) zero = false;
  }
  std::string nm = "(";
  for (const auto& [name, c] : w) nm += std::to_string(c) + name;
  out.name = nm + ")";
  if (zero) {
    out.name = "s";
    out.meets_zero = 0;
    return out;
  }
  for (const auto& f : tr.config.reducible()) {
    int tot = 0;
    for (const auto& [name, c] : w) {
      const auto& gen = section(name);
      auto it = gen.meets.find(f.label);
      tot += c * (it == gen.meets.end() ? 0 : it->second);
    }
    int d = f.type.components();
    tot = ((tot % d) + d) % d;
    if (tot != 0) out.meets[f.label] = tot;
  }
  // order of sum(c_i g_i) in the product of cyclic groups
  long o = 1;
  for (const auto& [name, c] : w) {
    long m = section(name).order;
    long r = ((c % m) + m) % m;
    long ord = m / std::gcd(m, r == 0 ? m : r);
    o = o / std::gcd(o, ord) * ord;
  }
  out.order = static_cast<int>(o);
  out.meets_zero = derive_meets_zero(out, tr.config);
  return out;
}

std::vector<Rat> NsLattice::mw_class_in_tr(const MwWord& w) const {
  SectionData s = mw_section(w);
  if (s.name == "s") {
    std::vector<Rat> v(tr.rank(), Rat(0));
    v[1] = Rat(1);
    return v;
  }
  return torsion_section_class(s, tr);
}

std::vector<Rat> NsLattice::tr_to_ns(const std::vector<Rat>& v) const {
  auto x = solve_in_rowspace(basis, v);
  if (!x) throw DataError("vector is not in the NS span");
  return *x;
}

namespace {

// greedy extraction of a Z-basis of the glued lattice from a semantically
// labeled candidate list (F, s, sections, components); falls back to the HNF
// basis if the greedy walk stalls
void extract_basis(NsLattice& ns, const Overlattice& over,
                   const std::vector<std::pair<NsLattice::BasisEntry, std::vector<Rat>>>& cands) {
  const std::size_t n = over.lattice.rank();
  IntMat stack(0, n);
  std::vector<NsLattice::BasisEntry> info;
  std::vector<std::vector<Rat>> chosen_tr;
  for (const auto& [entry, vec_tr] : cands) {
    if (stack.rows() == n) break;
    auto x = solve_in_rowspace(over.basis, vec_tr);
    if (!x) continue;
    std::vector<Int> xi(n);
    bool integral = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral((*x)[j])) {
        integral = false;
        break;
      }
      xi[j] = to_int((*x)[j]);
    }
    if (!integral) throw DataError("candidate basis vector not in NS");
    IntMat trial = stack;
    trial.append_row(xi);
    SnfResult s = smith_normal_form(trial);
    bool saturated = true;
    for (std::size_t i = 0; i < trial.rows(); ++i)
      if (s.d(i, i) != 1) saturated = false;
    if (!saturated) continue;
    stack = std::move(trial);
    info.push_back(entry);
    chosen_tr.push_back(vec_tr);
  }
  if (stack.rows() != n) {
    // fall back to the raw overlattice basis
    ns.basis = over.basis;
    ns.lattice = over.lattice;
    ns.basis_info.assign(n, {NsLattice::BasisEntry::Comp});
    for (std::size_t i = 0; i < n; ++i) {
      ns.basis_info[i].label = "e" + std::to_string(i);
      ns.lattice.labels.push_back(ns.basis_info[i].label);
    }
    return;
  }
  RatMat b(n, n);
  const std::size_t trn = ns.tr.rank();
  RatMat btr(n, trn);
  for (std::size_t i = 0; i < n; ++i) btr.set_row(i, chosen_tr[i]);
  ns.basis = btr;
  IntMat gram(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(info[i].label);
    for (std::size_t j = i; j < n; ++j) {
      Rat v = bilinear(ns.tr.lattice.gram, chosen_tr[i], chosen_tr[j]);
      gram(i, j) = to_int(v);
      gram(j, i) = gram(i, j);
    }
  }
  ns.lattice = Lattice(std::move(gram), std::move(labels));
  ns.basis_info = std::move(info);
}

}  // namespace

NsLattice build_ns(const FiberConfiguration& config, const std::vector<SectionData>& sections,
                   int chi) {
  NsLattice ns;
  ns.tr = trivial_lattice(config);
  std::vector<std::vector<Rat>> glue;
  std::vector<SectionData> secs = sections;
  for (auto& s : secs) {
    int ps = derive_meets_zero(s, config, chi);
    if (s.meets_zero && *s.meets_zero != ps)
      throw DataError("section " + s.name + ": declared P.s contradicts the height relation");
    s.meets_zero = ps;
    glue.push_back(torsion_section_class(s, ns.tr));
  }
  // pairwise consistency: distinct torsion sections must have height zero with
  // the intersection number the classes themselves produce
  for (std::size_t a = 0; a < secs.size(); ++a)
    for (std::size_t b = a + 1; b < secs.size(); ++b) {
      Rat pq = bilinear(ns.tr.lattice.gram, glue[a], glue[b]);
      if (!is_integral(pq))
        throw DataError("sections " + secs[a].name + "," + secs[b].name +
                        ": non-integral intersection");
      Rat h = height_pairing(secs[a], secs[b], config, chi, pq);
      if (h != 0)
        throw DataError("sections " + secs[a].name + "," + secs[b].name +
                        ": nonzero height " + to_string(h));
    }
  Overlattice over = glue_overlattice(ns.tr.lattice, glue);
  ns.index = over.index;
  ns.sections = secs;

  // candidate order: F, s, generator sections, then fiber components
  std::vector<std::pair<NsLattice::BasisEntry, std::vector<Rat>>> cands;
  const std::size_t trn = ns.tr.rank();
  {
    std::vector<Rat> f(trn, Rat(0)), sv(trn, Rat(0));
    f[0] = Rat(1);
    sv[1] = Rat(1);
    cands.push_back({{NsLattice::BasisEntry::F, 0, 0, {}, "F"}, f});
    cands.push_back({{NsLattice::BasisEntry::S, 0, 0, {}, "s"}, sv});
  }
  for (std::size_t i = 0; i < secs.size(); ++i) {
    NsLattice::BasisEntry e{NsLattice::BasisEntry::Section, 0, 0, {{secs[i].name, 1}}, secs[i].name};
    cands.push_back({e, glue[i]});
  }
  for (std::size_t k = 0; k < trn; ++k) {
    const auto& te = ns.tr.basis[k];
    if (te.kind != TrivialLattice::BasisEntry::Comp) continue;
    std::vector<Rat> v(trn, Rat(0));
    v[k] = Rat(1);
    NsLattice::BasisEntry e{NsLattice::BasisEntry::Comp, te.fiber, te.comp, {},
                            ns.tr.lattice.labels[k]};
    cands.push_back({e, v});
  }
  extract_basis(ns, over, cands);
  return ns;
}

LatticeIsometry make_isometry(const Lattice& l, IntMat m, const std::string& name, int max_order) {
  if (!(m * l.gram * m.transposed() == l.gram))
    throw DataError(name + ": matrix does not preserve the form");
  IntMat id = IntMat::identity(l.rank());
  IntMat p = m;
  int order = 1;
  while (!(p == id)) {
    p = p * m;
    ++order;
    if (order > max_order) throw DataError(name + ": order exceeds bound");
  }
  return LatticeIsometry{std::move(m), order, name};
}

namespace {

// image rows of the Tr basis under a map given by: F -> F, s -> class(target),
// C_i^(l) -> C_{perm(l,i)} (with C_0 expanded as F - sum C_i)
RatMat tr_action(const NsLattice& ns, const std::vector<Rat>& s_image,
                 const std::function<std::pair<int, int>(int, int)>& comp_image) {
  const std::size_t n = ns.tr.rank();
  RatMat a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = ns.tr.basis[k];
    std::vector<Rat> row(n, Rat(0));
    switch (e.kind) {
      case TrivialLattice::BasisEntry::F: row[0] = Rat(1); break;
      case TrivialLattice::BasisEntry::S: row = s_image; break;
      case TrivialLattice::BasisEntry::Comp: {
        auto [l2, i2] = comp_image(e.fiber, e.comp);
        int d2 = ns.tr.config.by_label(l2).type.components();
        i2 = ((i2 % d2) + d2) % d2;
        if (i2 == 0) {
          row[0] = Rat(1);
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (ns.tr.basis[k2].kind == TrivialLattice::BasisEntry::Comp &&
                ns.tr.basis[k2].fiber == l2)
              row[k2] -= 1;
        } else {
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (ns.tr.basis[k2].kind == TrivialLattice::BasisEntry::Comp &&
                ns.tr.basis[k2].fiber == l2 && ns.tr.basis[k2].comp == i2)
              row[k2] = Rat(1);
        }
        break;
      }
    }
    a.set_row(k, row);
  }
  return a;
}

IntMat to_ns_matrix(const NsLattice& ns, const RatMat& tr_act, const std::string& name) {
  const std::size_t n = ns.rank();
  RatMat ba = ns.basis * tr_act;
  IntMat y(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = solve_in_rowspace(ns.basis, ba.row(i));
    if (!x) throw DataError(name + ": image not in NS span");
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral((*x)[j]))
        throw DataError(name + ": image of a basis vector is not integral on NS");
      y(i, j) = to_int((*x)[j]);
    }
  }
  return y;
}

MwWord add_words(const MwWord& a, const MwWord& b) {
  MwWord r = a;
  for (const auto& [k, v] : b) r[k] += v;
  return r;
}

}  // namespace

LatticeIsometry translation_isometry(const MwWord& t, const NsLattice& ns) {
  SectionData ts = ns.mw_section(t);
  // component shift at each fiber = index of the component t meets there
  auto comp_image = [&](int fiber, int comp) {
    auto it = ts.meets.find(fiber);
    int shift = it == ts.meets.end() ? 0 : it->second;
    return std::pair<int, int>(fiber, comp + shift);
  };
  RatMat a = tr_action(ns, ns.mw_class_in_tr(t), comp_image);
  // sections r -> r + t (the group law adds component indices fiberwise);
  // consistency of the linear action with the group law on every basis section
  for (const auto& be : ns.basis_info) {
    if (be.kind != NsLattice::BasisEntry::Section) continue;
    std::vector<Rat> cls = ns.mw_class_in_tr(be.word);
    std::vector<Rat> img(ns.tr.rank(), Rat(0));
    for (std::size_t k = 0; k < ns.tr.rank(); ++k)
      if (cls[k] != 0)
        for (std::size_t j = 0; j < ns.tr.rank(); ++j) img[j] += cls[k] * a(k, j);
    std::vector<Rat> want = ns.mw_class_in_tr(add_words(be.word, t));
    if (img != want)
      throw DataError("translation by " + ts.name + " is inconsistent with the group law");
  }
  IntMat m = to_ns_matrix(ns, a, "sigma_" + ts.name);
  return make_isometry(ns.lattice, std::move(m), "sigma_" + ts.name);
}

LatticeIsometry base_involution_isometry(const InvolutionSpec& spec, const NsLattice& ns) {
  auto comp_image = [&](int fiber, int comp) {
    auto it = spec.components.find({fiber, comp});
    if (it == spec.components.end()) return std::pair<int, int>(fiber, comp);
    return it->second;
  };
  std::vector<Rat> s_image(ns.tr.rank(), Rat(0));
  s_image[1] = Rat(1);  // fixes the zero section
  RatMat a = tr_action(ns, s_image, comp_image);
  // the declared section images must agree with the linear action
  for (const auto& [name, word] : spec.sections) {
    std::vector<Rat> cls = ns.mw_class_in_tr({{name, 1}});
    std::vector<Rat> img(ns.tr.rank(), Rat(0));
    for (std::size_t k = 0; k < ns.tr.rank(); ++k)
      if (cls[k] != 0)
        for (std::size_t j = 0; j < ns.tr.rank(); ++j) img[j] += cls[k] * a(k, j);
    if (img != ns.mw_class_in_tr(word))
      throw DataError(spec.name + ": declared image of " + name +
                      " does not match the component action");
  }
  IntMat m = to_ns_matrix(ns, a, spec.name);
  LatticeIsometry iso = make_isometry(ns.lattice, std::move(m), spec.name);
  if (iso.order != 2) throw DataError(spec.name + ": expected an involution, got order " +
                                      std::to_string(iso.order));
  return iso;
}

}  // namespace k3lat
