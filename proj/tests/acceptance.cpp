// End-to-end acceptance runs: one numbered check per line, PASS/FAIL/SKIP,
// nonzero exit iff any line fails.

#include <chrono>
#include "k3lat/errors.hpp"
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "k3lat/classify.hpp"
#include "k3lat/invariants.hpp"
#include "k3lat/isotest.hpp"
#include "k3lat/paperdata.hpp"
#include "k3lat/shortvec.hpp"

using namespace k3lat;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail = "") {
  std::printf("[%s] %-60s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  if (!ok) ++failures;
}

void skip(const std::string& id, const std::string& why) {
  std::printf("[SKIP] %-60s %s\n", id.c_str(), why.c_str());
}

struct Pipe {
  FibrationDocument doc;
  NsLattice ns;
  GroupAction action;
  Sublattice inv;
  Sublattice omega_sub;
  Lattice omega;
};

std::map<std::string, Pipe>& pipes() {
  static std::map<std::string, Pipe> cache;
  return cache;
}

Pipe& pipe(const std::string& group) {
  auto it = pipes().find(group);
  if (it != pipes().end()) return it->second;
  Pipe p;
  const GroupRealization& real = group_realization(group);
  p.doc = load_fibration(data_dir() + "/fibrations/" + real.fibration + ".json");
  p.ns = build_ns_from_document(p.doc);
  auto [ins, _] = pipes().emplace(group, std::move(p));
  Pipe& q = ins->second;
  q.action = action_on_ns(q.ns, q.doc, real, group);
  q.action.lattice = &q.ns.lattice;
  q.inv = invariant_sublattice(q.action);
  q.omega_sub = orthogonal_complement(q.inv);
  q.omega = Lattice(q.omega_sub.induced_gram());
  return q;
}

bool same_genus(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank() || a.signature() != b.signature()) return false;
  if (a.determinant() != b.determinant() || a.is_even() != b.is_even()) return false;
  DiscForm da = discriminant_group(a), db = discriminant_group(b);
  return da.factors == db.factors && disc_forms_isomorphic(da, db);
}

GroupAction subgroup_action(Pipe& p, const SubgroupReference& sub) {
  GroupAction a{&p.ns.lattice, {}, sub.key};
  for (const auto& w : sub.translation_words)
    a.generators.push_back(translation_isometry(w, p.ns));
  for (const auto& nm : sub.involution_names)
    for (const auto& spec : p.doc.involutions)
      if (spec.name == nm) a.generators.push_back(base_involution_isometry(spec, p.ns));
  return a;
}

void criterion1() {
  for (const auto& row : omega_table()) {
    Pipe& p = pipe(row.group);
    DiscForm d = discriminant_group(p.omega);
    bool ok = static_cast<int>(p.omega.rank()) == row.rank &&
              abs(p.omega.determinant()) == abs(row.det) &&
              p.omega.determinant() == row.det && d.factors == row.disc_factors;
    report("1. table row " + row.group, ok,
           "rank " + std::to_string(p.omega.rank()) + ", det " +
               p.omega.determinant().get_str() + ", disc " + d.group_string());
  }
}

void criterion2() {
  Pipe& p = pipe("Z4xZ4");
  report("2. six-I4 [NS:Tr] = 16", p.ns.index == 16);
  report("2. six-I4 det NS = -16", p.ns.lattice.determinant() == -16);
  DiscForm d = discriminant_group(p.ns.lattice);
  bool form_ok = d.factors == std::vector<Int>{Int(4), Int(4)} &&
                 disc_forms_isomorphic(d, discriminant_group(lattice_diag({-4, -4})));
  report("2. six-I4 disc form = Z/4(-1/4) + Z/4(-1/4)", form_ok);
  // the printed coordinate formula for t1
  std::vector<Rat> expect = {Rat(2), Rat(1)};
  for (int fiber = 1; fiber <= 6; ++fiber) {
    if (fiber <= 4)
      expect.insert(expect.end(), {frac(-3, 4), frac(-1, 2), frac(-1, 4)});
    else if (fiber == 5)
      expect.insert(expect.end(), {frac(-1, 2), Rat(-1), frac(-1, 2)});
    else
      expect.insert(expect.end(), 3, Rat(0));
  }
  std::vector<Rat> got = torsion_section_class(p.ns.section("t1"), p.ns.tr);
  report("2. six-I4 t1 class matches the printed formula", got == expect);
}

void criterion3() {
  Pipe& p = pipe("Z4xZ4");
  for (const auto& sub : six_i4_subgroups()) {
    GroupAction a = subgroup_action(p, sub);
    Lattice inv(invariant_sublattice(a).induced_gram());
    report("3. NS^" + sub.key + " matches the printed gram (genus)",
           same_genus(inv, sub.ns_invariant));
  }
}

void criterion4() {
  for (const auto& g : group_names()) {
    Pipe& p = pipe(g);
    Int min = minimum(p.omega);
    ShortVectorSet sv2 = short_vectors(p.omega, 2);
    bool gen = generated_by_minimal(p.omega);
    report("4. Omega_" + g + " min 4, no -2 vectors, generated by -4s",
           min == 4 && sv2.vectors.empty() && gen);
  }
}

void criterion5() {
  for (const auto& g : group_names()) {
    Pipe& p = pipe(g);
    DiscForm d = discriminant_group(p.omega);
    bool all_id = true;
    for (const auto& iso : p.action.generators) {
      IntMat r = restrict_isometry(p.omega_sub, iso.matrix);
      if (!action_on_discriminant(p.omega, d, r).is_identity) all_id = false;
    }
    report("5. disc(Omega_" + g + ") action is the identity", all_id);
  }
}

void criterion6() {
  bool heights = true, classes = true;
  for (const auto& g : group_names()) {
    Pipe& p = pipe(g);
    for (const auto& s : p.ns.sections) {
      if (height_self(s, p.doc.config, 2) != 0) heights = false;
      std::vector<Rat> v = torsion_section_class(s, p.ns.tr);
      if (bilinear(p.ns.tr.lattice.gram, v, v) != Rat(-2)) classes = false;
      for (const auto& c : v)
        if (!is_integral(c * s.order)) classes = false;
    }
  }
  report("6. all bundled torsion sections have height 0", heights);
  report("6. all section classes have v^2 = -2 with n*v integral", classes);
}

void criterion7() {
  Pipe& p = pipe("Z4xZ4");
  Lattice t = six_i4_transcendental();
  auto glue = six_i4_glue_rows(p.ns);
  for (const auto& sub : six_i4_subgroups()) {
    if (sub.key == "G4") {
      skip("7. overlattice index for G4", "per contract: transcendental data deferred");
      continue;
    }
    GroupAction a = subgroup_action(p, sub);
    GluedInvariant g = glued_invariant(a, t, glue);
    Int want = sub.stated_index;
    bool ok = g.index == want;
    std::string detail = "computed index " + g.index.get_str() + ", stated " + want.get_str();
    if (sub.key == "G44" && !ok)
      detail += " (the published glued gram has det -256, which forces index 2)";
    report("7. overlattice index for " + sub.key, ok, detail);
  }
}

void criterion8() {
  // emitted candidates stay inside the published possibility lists, and the
  // congruence/determinant/primitivity invariants hold on each candidate
  for (const auto& g : group_names()) {
    Pipe& p = pipe(g);
    bool ok = true;
    std::string detail;
    for (long d = 1; d <= 30 && ok; ++d) {
      auto cs = even_overlattices(Int(d), p.omega, g);
      auto allowed = case_list_indices(g, Int(d));
      for (const auto& c : cs) {
        bool in = false;
        for (const auto& r : allowed)
          if (r == c.index) in = true;
        if (!in) {
          ok = false;
          detail = "d=" + std::to_string(d) + " emitted index " + c.index.get_str() +
                   " outside the case list";
        }
        if (c.gram.determinant() * c.index * c.index != Int(2 * d) * p.omega.determinant())
          ok = false;
      }
    }
    report("8. case-list containment for " + g + ", d <= 30", ok, detail);
  }
  // Z2: split-only exactly when L^2 is not divisible by 4
  {
    Pipe& p = pipe("Z2");
    bool ok = true;
    for (long d = 1; d <= 30; ++d) {
      auto cs = even_overlattices(Int(d), p.omega, "Z2");
      bool has2 = cs.size() > 1;
      if (has2 != (d % 2 == 0)) ok = false;
    }
    report("8. Z2 splits exactly when L^2 = 2 mod 4", ok);
  }
  // Z7 embeddability: d = 1,2,4 mod 7 for the split lattice, index 7 for 7 | d
  {
    Pipe& p = pipe("Z7");
    bool ok = true;
    for (long d = 1; d <= 30; ++d) {
      auto cs = even_overlattices(Int(d), p.omega, "Z7");
      bool has7 = false;
      for (const auto& c : cs)
        if (c.index == 7) has7 = true;
      if (has7 != (d % 7 == 0)) ok = false;
      Zeta7Verdict v = zeta7_represent_2d(Int(d));
      long m = d % 7;
      bool expect = (m == 0 || m == 1 || m == 2 || m == 4);
      if (v.representable != expect) ok = false;
      // the generator-count obstruction agrees with the verdict for 7 | d
      Obstruction ob = embedding_obstruction(cs[0].gram);
      if ((d % 7 == 0) != ob.obstructed) ok = false;
    }
    report("8. Z7 verdicts match d = 1,2,4 mod 7 and index 7 for 7 | d", ok);
  }
}

void criterion9() {
  Pipe& p2 = pipe("Z2");
  Lattice e8m2 = rescale(lattice_E8(-1), 2);
  auto w = is_isometric(p2.omega, e8m2);
  report("9. Omega_Z2 isometric to E8(-2), witness verified", w.has_value());

  Pipe& p3 = pipe("Z3");
  std::string path = data_dir() + "/catalog/k12_m2.json";
  try {
    CatalogLattice k12 = load_catalog(path);
    auto w3 = is_isometric(p3.omega, k12.lattice);
    report("9. Omega_Z3 isometric to K12(-2), witness verified", w3.has_value());
  } catch (const CatalogMissing&) {
    skip("9. Omega_Z3 vs K12(-2)", "catalog file absent (exit code 5 path)");
  }
  for (const char* name : {"lambda12_m1", "lambda14_3_m1", "lambda15_m1", "k16_3_m1"}) {
    std::string f = data_dir() + "/catalog/" + name + ".json";
    try {
      load_catalog(f);
      report(std::string("9x. extended catalog ") + name, true, "present");
    } catch (const CatalogMissing&) {
      skip(std::string("9x. extended ") + name, "catalog data not bundled; skipped");
    }
  }
}

void criterion10() {
  // short_vectors vs the box oracle on small definite lattices
  bool ok = true;
  std::vector<Lattice> corpus = {lattice_An(1, -1), lattice_An(2, -1), lattice_An(3, -1),
                                 lattice_An(4, 1),  lattice_diag({2, 4, 6}),
                                 lattice_diag({-4, -8}),
                                 Lattice(IntMat{{Int(4), Int(1)}, {Int(1), Int(2)}})};
  for (const auto& l : corpus) {
    ShortVectorSet a = short_vectors(l, 12);
    ShortVectorSet b = brute_force_short_vectors(l, 12, 10);
    if (a.vectors.size() != b.vectors.size()) ok = false;
    for (std::size_t i = 0; i < a.vectors.size() && ok; ++i)
      if (a.vectors[i].coords != b.vectors[i].coords) ok = false;
  }
  report("10. short_vectors agrees with the box oracle (rank <= 4, bound 12)", ok);

  // SNF contract on 1000 random small matrices
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
  bool snf_ok = true;
  for (int iter = 0; iter < 1000 && snf_ok; ++iter) {
    IntMat m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Int(val(rng));
    SnfResult s = smith_normal_form(m);
    if (!(s.u * m * s.v == s.d)) snf_ok = false;
    if (abs(det(s.u)) != 1 || abs(det(s.v)) != 1) snf_ok = false;
  }
  report("10. SNF contract U*M*V = D on 1000 random matrices", snf_ok);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance run aborted: %s\n", e.what());
    return 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s (%d failing) in %.1fs\n", failures ? "FAILURES PRESENT" : "all criteria pass",
              failures, ms / 1000.0);
  return failures ? 1 : 0;
}
