#include "k3lat/paperdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "k3lat/errors.hpp"

#ifndef K3LAT_DATA_DIR
#define K3LAT_DATA_DIR "data"
#endif

namespace k3lat {

namespace {

IntMat im(std::vector<std::vector<long>> rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Int(rows[i][j]);
  return m;
}

Lattice U(long n = 1) { return lattice_U(Int(n)); }

}  // namespace

std::vector<std::string> group_names() {
  return {"Z2",    "Z3",    "Z4",    "Z5",    "Z6",    "Z7",    "Z8",
          "Z2xZ2", "Z3xZ3", "Z4xZ4", "Z2xZ4", "Z2xZ6", "Z2^3",  "Z2^4"};
}

bool is_group_name(const std::string& s) {
  for (const auto& g : group_names())
    if (g == s) return true;
  return false;
}

std::string group_display(const std::string& key) {
  if (key == "Z2^3") return "(Z/2Z)^3";
  if (key == "Z2^4") return "(Z/2Z)^4";
  if (key == "Z2xZ2") return "(Z/2Z)^2";
  if (key == "Z3xZ3") return "(Z/3Z)^2";
  if (key == "Z4xZ4") return "(Z/4Z)^2";
  auto x = key.find('x');
  if (x != std::string::npos)
    return "Z/" + key.substr(1, x - 1) + "Z x Z/" + key.substr(x + 2) + "Z";
  return "Z/" + key.substr(1) + "Z";
}

const std::vector<OmegaTableRow>& omega_table() {
  static const std::vector<OmegaTableRow> rows = [] {
    std::vector<OmegaTableRow> t;
    auto add = [&](std::string g, int rank, Int det, std::vector<Int> disc, Lattice perp) {
      t.push_back({std::move(g), rank, std::move(det), std::move(disc), std::move(perp)});
    };
    Lattice q4(im({{0, 4, 0, 2, 0, -1, 0, 0},
                   {4, 0, 4, 4, -4, 0, 0, -4},
                   {0, 4, 0, 0, 0, 0, 0, 0},
                   {2, 4, 0, 0, 0, -1, 0, 0},
                   {0, -4, 0, 0, -2, -1, 0, -2},
                   {-1, 0, 0, -1, -1, -2, 1, 1},
                   {0, 0, 0, 0, 0, 1, -2, 0},
                   {0, -4, 0, 0, -2, 1, 0, -2}}));
    Lattice q22(im({{0, 1, 0, 0, 0, 0},
                    {1, -2, 2, 0, 0, 0},
                    {0, 2, -4, 2, 0, 0},
                    {0, 0, 2, -4, 2, 0},
                    {0, 0, 0, 2, -4, 4},
                    {0, 0, 0, 0, 4, -8}}));
    Lattice q24(im({{4, -2, 0, 0, 0, 0},
                    {-2, 0, -2, 0, 0, 0},
                    {0, -2, -64, -4, 0, 0},
                    {0, 0, -4, 0, -4, 0},
                    {0, 0, 0, -4, 80, 4},
                    {0, 0, 0, 0, 4, 0}}));
    add("Z2", 8, Int(1) << 8, std::vector<Int>(8, Int(2)),
        direct_sum(rescale(lattice_E8(-1), 2), direct_sum(U(), direct_sum(U(), U()))));
    add("Z3", 12, Int(729), std::vector<Int>(6, Int(3)),
        direct_sum(U(), direct_sum(U(3), direct_sum(U(3), direct_sum(lattice_An(2, -1),
                                                                     lattice_An(2, -1))))));
    add("Z4", 14, Int(1) << 10, {2, 2, 4, 4, 4, 4}, q4);
    add("Z5", 16, Int(625), std::vector<Int>(4, Int(5)), direct_sum(U(), direct_sum(U(5), U(5))));
    add("Z6", 16, Int(1296), std::vector<Int>(4, Int(6)), direct_sum(U(), direct_sum(U(6), U(6))));
    add("Z7", 18, Int(343), std::vector<Int>(3, Int(7)),
        direct_sum(U(7), Lattice(im({{4, 1}, {1, 2}}))));
    add("Z8", 18, Int(512), {2, 4, 8, 8},
        direct_sum(U(8), Lattice(im({{2, 0}, {0, 4}}))));
    add("Z2xZ2", 12, Int(1) << 10, {2, 2, 2, 2, 2, 2, 4, 4},
        direct_sum(U(2), direct_sum(U(2), q22)));
    add("Z3xZ3", 16, Int(729), {3, 3, 3, 3, 9},
        direct_sum(U(3), direct_sum(U(3), Lattice(im({{2, 3}, {3, 0}})))));
    add("Z4xZ4", 18, Int(1) << 8, {2, 2, 8, 8},
        Lattice(im({{4, 6, 0, 0}, {6, 4, 6, 4}, {0, 6, 4, 0}, {0, 4, 0, 0}})));
    add("Z2xZ4", 16, Int(1) << 10, {2, 2, 4, 4, 4, 4}, q24);
    add("Z2xZ6", 18, Int(432), {3, 12, 12},
        Lattice(im({{0, 6, 0, 0}, {6, 0, -3, 0}, {0, -3, 6, 6}, {0, 0, 6, 8}})));
    add("Z2^3", 14, Int(1) << 10, {2, 2, 2, 2, 2, 2, 4, 4},
        direct_sum(U(2), direct_sum(U(2), direct_sum(U(2), lattice_diag({-4, -4})))));
    add("Z2^4", 15, -(Int(1) << 9), {2, 2, 2, 2, 2, 2, 8},
        direct_sum(lattice_diag({-8}), direct_sum(U(2), direct_sum(U(2), U(2)))));
    return t;
  }();
  return rows;
}

const OmegaTableRow& omega_table_row(const std::string& group) {
  for (const auto& r : omega_table())
    if (r.group == group) return r;
  throw SchemaError("unknown group " + group);
}

const std::vector<SubgroupReference>& six_i4_subgroups() {
  static const std::vector<SubgroupReference> subs = [] {
    std::vector<SubgroupReference> s;
    Lattice h2_44(im({{4, 6, 0, 0}, {6, 4, 6, 4}, {0, 6, 4, 0}, {0, 4, 0, 0}}));
    Lattice h2_24(im({{4, -2, 0, 0, 0, 0},
                      {-2, 0, -2, 0, 0, 0},
                      {0, -2, -64, -4, 0, 0},
                      {0, 0, -4, 0, -4, 0},
                      {0, 0, 0, -4, 80, 4},
                      {0, 0, 0, 0, 4, 0}}));
    Lattice h2_22(im({{0, 4, 2, 0, 0, 2, 0, -2, 0, 0},
                      {4, 0, 6, -8, 8, 4, 6, -20, 8, 2},
                      {2, 6, 0, -1, 2, 1, 2, -6, 0, 2},
                      {0, -8, -1, -2, 0, -1, 2, 1, 2, 0},
                      {0, 8, 2, 0, -4, 4, 0, 2, 0, 0},
                      {2, 4, 1, -1, 4, -4, 0, -1, 0, -2},
                      {0, 6, 2, 2, 0, 0, -4, 2, 0, 0},
                      {-2, -20, -6, 1, 2, -1, 2, -4, 0, 4},
                      {0, 8, 0, 2, 0, 0, 0, 0, -4, 0},
                      {0, 2, 2, 0, 0, -2, 0, 4, 0, -4}}));
    Lattice h2_4(im({{0, 4, 0, 2, 0, -1, 0, 0},
                     {4, 0, 4, 4, -4, 0, 0, -4},
                     {0, 4, 0, 0, 0, 0, 0, 0},
                     {2, 4, 0, 0, 0, -1, 0, 0},
                     {0, -4, 0, 0, -2, -1, 0, -2},
                     {-1, 0, 0, -1, -1, -2, 1, 1},
                     {0, 0, 0, 0, 0, 1, -2, 0},
                     {0, -4, 0, 0, -2, 1, 0, -2}}));
    s.push_back({"G44", "Z4xZ4", {{{"t1", 1}}, {{"u1", 1}}}, {},
                 Lattice(im({{-8, 8}, {8, 0}})), h2_44, Int(4)});
    s.push_back({"G24", "Z2xZ4", {{{"t1", 2}}, {{"u1", 1}}}, {},
                 direct_sum(U(4), lattice_diag({-4, -4})), h2_24, Int(2)});
    s.push_back({"G22", "Z2xZ2", {{{"t1", 2}}, {{"u1", 2}}}, {},
                 Lattice(im({{-4, -4, -2, -2, -4, 0, 0, 0},
                             {-4, -4, 0, 2, -2, 0, 8, 4},
                             {-2, 0, -4, 0, 0, 0, 4, 0},
                             {-2, 2, 0, 0, 0, 0, 0, 0},
                             {-4, -2, 0, 0, -4, 0, 6, 0},
                             {0, 0, 0, 0, 0, -4, 2, 0},
                             {0, 8, 4, 0, 6, 2, -16, 2},
                             {0, 4, 0, 0, 0, 0, 2, -4}})),
                 h2_22, Int(4)});
    s.push_back({"G4", "Z4", {{{"t1", 1}}}, {},
                 direct_sum(lattice_diag({-4}), Lattice(im({{-2, 1, 0, 0, 0},
                                                            {1, -2, 4, 0, 0},
                                                            {0, 4, 4, 8, 4},
                                                            {0, 0, 8, 0, 4},
                                                            {0, 0, 4, 4, 0}}))),
                 h2_4, Int(2)});
    s.push_back({"G222", "Z2^3", {{{"t1", 2}}, {{"u1", 2}}}, {"sigma_a"},
                 Lattice(im({{-4, 2, 0, 0, 0, 0},
                             {2, -20, 6, 0, 0, 0},
                             {0, 6, -4, -2, 0, 0},
                             {0, 0, -2, 0, -2, 0},
                             {0, 0, 0, -2, 0, -4},
                             {0, 0, 0, 0, -4, -8}})),
                 std::nullopt, Int(2)});
    s.push_back({"G2222", "Z2^4", {{{"t1", 2}}, {{"u1", 2}}}, {"sigma_a", "sigma_b"},
                 Lattice(im({{-20, -8, -12, -2, 4},
                             {-8, 8, 2, 2, 4},
                             {-12, 2, -4, 0, 4},
                             {-2, 2, 0, 0, 0},
                             {4, 4, 4, 0, -8}})),
                 std::nullopt, Int(2)});
    return s;
  }();
  return subs;
}

Lattice six_i4_transcendental() { return lattice_diag({4, 4}); }

std::vector<std::vector<Rat>> six_i4_glue_rows(const NsLattice& ns) {
  // the two discriminant-form generators of NS written on the fiber components,
  // glued against the quarter-generators of the transcendental lattice
  const std::size_t trn = ns.tr.rank();
  auto comp_vec = [&](std::map<std::pair<int, int>, Rat> coeffs) {
    std::vector<Rat> v(trn, Rat(0));
    for (std::size_t k = 0; k < trn; ++k) {
      const auto& e = ns.tr.basis[k];
      if (e.kind != TrivialLattice::BasisEntry::Comp) continue;
      auto it = coeffs.find({e.fiber, e.comp});
      if (it != coeffs.end()) v[k] = it->second;
    }
    return v;
  };
  std::map<std::pair<int, int>, Rat> c1, c2;
  for (int i = 1; i <= 3; ++i) {
    c1[{1, i}] = frac(i, 4);
    c1[{3, i}] = frac(-i, 4);
    c1[{6, i}] = frac(i, 4);
    c2[{2, i}] = frac(i, 4);
    c2[{4, i}] = frac(i, 4);
    c2[{5, i}] = frac(-i, 4);
  }
  std::vector<Rat> d1 = ns.tr_to_ns(comp_vec(c1));
  std::vector<Rat> d2 = ns.tr_to_ns(comp_vec(c2));
  const std::size_t n = ns.rank();
  std::vector<Rat> g1(n + 2, Rat(0)), g2(n + 2, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    g1[j] = d1[j];
    g2[j] = d2[j];
  }
  g1[n] = frac(1, 4);
  g2[n + 1] = frac(1, 4);
  return {g1, g2};
}

std::string fibration_file(const std::string& group) {
  return group_realization(group).fibration;
}

const GroupRealization& group_realization(const std::string& group) {
  static const std::map<std::string, GroupRealization> reals = [] {
    std::map<std::string, GroupRealization> m;
    m["Z2"] = {"z2", {{{"t1", 1}}}, {}};
    m["Z3"] = {"z3", {{{"t1", 1}}}, {}};
    m["Z4"] = {"z4", {{{"t1", 1}}}, {}};
    m["Z5"] = {"z5", {{{"t1", 1}}}, {}};
    m["Z6"] = {"z6", {{{"t1", 1}}}, {}};
    m["Z7"] = {"z7", {{{"t1", 1}}}, {}};
    m["Z8"] = {"z8", {{{"t1", 1}}}, {}};
    m["Z2xZ2"] = {"z2x2", {{{"t1", 1}}, {{"u1", 1}}}, {}};
    m["Z2xZ4"] = {"z2x4", {{{"t1", 1}}, {{"u1", 1}}}, {}};
    m["Z2xZ6"] = {"z2x6", {{{"t1", 1}}, {{"u1", 1}}}, {}};
    m["Z3xZ3"] = {"z3x3", {{{"t1", 1}}, {{"u1", 1}}}, {}};
    m["Z4xZ4"] = {"z4x4", {{{"t1", 1}}, {{"u1", 1}}}, {}};
    m["Z2^3"] = {"z4x4", {{{"t1", 2}}, {{"u1", 2}}}, {"sigma_a"}};
    m["Z2^4"] = {"z4x4", {{{"t1", 2}}, {{"u1", 2}}}, {"sigma_a", "sigma_b"}};
    return m;
  }();
  auto it = reals.find(group);
  if (it == reals.end()) throw SchemaError("unknown group " + group);
  return it->second;
}

std::vector<Int> case_list_indices(const std::string& group, const Int& d) {
  auto mod = [&](long m) -> long {
    Int r = ((d % m) + m) % m;
    return r.get_si();
  };
  std::vector<long> out{1};
  if (group == "Z2") {
    if (mod(2) == 0) out.push_back(2);
  } else if (group == "Z3" || group == "Z5" || group == "Z7") {
    long p = std::stol(group.substr(1));
    if (mod(p) == 0) out.push_back(p);
  } else if (group == "Z4" || group == "Z2xZ2" || group == "Z2^3" || group == "Z2xZ4") {
    out.push_back(2);
    if (mod(2) == 0) out.push_back(4);
  } else if (group == "Z6") {
    out.push_back(2);
    if (mod(3) == 0) {
      out.push_back(3);
      out.push_back(6);
    }
  } else if (group == "Z8" || group == "Z2^4" || group == "Z4xZ4") {
    out.push_back(2);
    if (mod(2) == 0) out.push_back(4);
    if (mod(4) == 0) out.push_back(8);
  } else if (group == "Z3xZ3") {
    if (mod(3) == 0) out.push_back(3);
    if (mod(9) == 0) out.push_back(9);
  } else if (group == "Z2xZ6") {
    out.push_back(2);
    if (mod(2) == 0) out.push_back(4);
    if (mod(3) == 0) {
      out.push_back(3);
      out.push_back(6);
    }
    if (mod(6) == 0) out.push_back(12);
  } else {
    throw SchemaError("unknown group " + group);
  }
  std::sort(out.begin(), out.end());
  std::vector<Int> res;
  for (long v : out) res.push_back(Int(v));
  return res;
}

std::string data_dir(const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  if (const char* env = std::getenv("K3LAT_DATA_DIR")) return env;
  return K3LAT_DATA_DIR;
}

NsLattice build_ns_from_document(const FibrationDocument& doc) {
  if (doc.config.euler_sum() != 24)
    throw DataError(doc.name + ": Euler numbers sum to " +
                    std::to_string(doc.config.euler_sum()) + ", not 24");
  return build_ns(doc.config, doc.sections);
}

GroupAction action_on_ns(const NsLattice& ns, const FibrationDocument& doc,
                         const GroupRealization& real, const std::string& group) {
  GroupAction a{&ns.lattice, {}, group_display(group)};
  for (const auto& w : real.translation_words) a.generators.push_back(translation_isometry(w, ns));
  for (const auto& iname : real.involution_names) {
    bool found = false;
    for (const auto& spec : doc.involutions)
      if (spec.name == iname) {
        a.generators.push_back(base_involution_isometry(spec, ns));
        found = true;
      }
    if (!found) throw SchemaError(doc.name + ": no bundled involution named " + iname);
  }
  a.check_commuting();
  return a;
}

}  // namespace k3lat
