// k3lat: exact-arithmetic lattice toolkit for elliptic K3 surfaces with
// finite abelian symplectic automorphism groups.
//
// Exit codes: 0 ok, 1 verification failure, 2 schema error, 3 inconsistent
// data, 4 indefinite input, 5 missing catalog data.

#include <CLI11.hpp>
#include <map>
#include <iostream>
#include <nlohmann/json.hpp>

#include "k3lat/classify.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/invariants.hpp"
#include "k3lat/isotest.hpp"
#include "k3lat/paperdata.hpp"
#include "k3lat/shortvec.hpp"

using namespace k3lat;
using nlohmann::json;

namespace {

struct Options {
  bool as_json = false;
  std::string data;
};

std::string disc_string(const Lattice& l) {
  if (l.rank() == 0 || l.determinant() == 0) return "n/a";
  return discriminant_group(l).group_string();
}

void print_lattice_report(const std::string& title, const Lattice& l, const Options& opt,
                          json extra = json::object()) {
  if (opt.as_json) {
    json j = extra;
    j["title"] = title;
    j["rank"] = l.rank();
    j["det"] = l.determinant().get_str();
    j["even"] = l.is_even();
    auto [pos, neg] = l.rank() && l.determinant() != 0 ? l.signature() : std::pair<int, int>{0, 0};
    j["signature"] = {pos, neg};
    j["disc_group"] = disc_string(l);
    j["gram"] = gram_to_json(l.gram);
    if (!l.labels.empty()) j["labels"] = l.labels;
    std::cout << j.dump(1) << "\n";
    return;
  }
  std::cout << title << "\n  rank " << l.rank() << ", det " << l.determinant().get_str()
            << ", disc " << disc_string(l) << (l.is_even() ? ", even" : ", odd") << "\n";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    std::cout << "  ";
    if (i < l.labels.size()) std::cout << l.labels[i] << ":\t";
    for (std::size_t j = 0; j < l.rank(); ++j)
      std::cout << l.gram(i, j).get_str() << (j + 1 < l.rank() ? " " : "\n");
  }
  for (const auto& [k, v] : extra.items()) std::cout << "  " << k << ": " << v.dump() << "\n";
}

Lattice resolve_lattice_arg(const std::string& arg, const Options& opt) {
  if (is_group_name(arg)) {
    const GroupRealization& real = group_realization(arg);
    FibrationDocument doc =
        load_fibration(data_dir(opt.data) + "/fibrations/" + real.fibration + ".json");
    NsLattice ns = build_ns_from_document(doc);
    GroupAction a = action_on_ns(ns, doc, real, arg);
    return Lattice(coinvariant_lattice(a).induced_gram());
  }
  // catalog names resolve against the data directory, else treat as a path
  static const std::map<std::string, std::string> catalog = {
      {"K12(-2)", "k12_m2"},          {"k12", "k12_m2"},
      {"Lambda12(-1)", "lambda12_m1"}, {"Lambda14.3(-1)", "lambda14_3_m1"},
      {"Lambda15(-1)", "lambda15_m1"}, {"K16.3(-1)", "k16_3_m1"}};
  auto it = catalog.find(arg);
  if (it != catalog.end())
    return load_catalog(data_dir(opt.data) + "/catalog/" + it->second + ".json").lattice;
  return lattice_from_file(arg);
}

int cmd_trivial(const std::string& file, const Options& opt) {
  FibrationDocument doc = load_fibration(file);
  TrivialLattice tr = trivial_lattice(doc.config);
  print_lattice_report("trivial lattice of " + (doc.name.empty() ? file : doc.name), tr.lattice,
                       opt);
  return 0;
}

int cmd_ns(const std::string& file, const Options& opt) {
  FibrationDocument doc = load_fibration(file);
  NsLattice ns = build_ns_from_document(doc);
  json extra;
  extra["index_over_trivial"] = ns.index.get_str();
  print_lattice_report("Neron-Severi lattice of " + (doc.name.empty() ? file : doc.name),
                       ns.lattice, opt, extra);
  return 0;
}

int cmd_omega(const std::string& group, const Options& opt, const std::string& out) {
  if (!is_group_name(group)) throw SchemaError("unknown group " + group);
  Lattice omega = resolve_lattice_arg(group, opt);
  json extra;
  extra["minimum"] = minimum(omega).get_str();
  print_lattice_report("Omega_" + group_display(group), omega, opt, extra);
  if (!out.empty()) {
    json j;
    j["name"] = "Omega_" + group;
    j["source"] = "computed from the bundled fibration data";
    j["gram"] = gram_to_json(omega.gram);
    std::ofstream f(out);
    f << j.dump(1) << "\n";
  }
  return 0;
}

int cmd_shortvec(const std::string& file, long bound, const Options& opt) {
  Lattice l = resolve_lattice_arg(file, opt);
  ShortVectorSet sv = short_vectors(l, Int(bound));
  if (opt.as_json) {
    json j;
    j["bound"] = bound;
    j["count"] = sv.vectors.size();
    json vecs = json::array();
    for (const auto& v : sv.vectors) {
      json e;
      e["norm"] = v.norm.get_str();
      json c = json::array();
      for (const auto& x : v.coords) c.push_back(x.get_str());
      e["coords"] = c;
      vecs.push_back(e);
    }
    j["vectors"] = vecs;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << sv.vectors.size() << " vectors (up to sign) with 0 < |norm| <= " << bound << "\n";
    for (const auto& v : sv.vectors) {
      std::cout << "  norm " << v.norm.get_str() << ":";
      for (const auto& x : v.coords) std::cout << " " << x.get_str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_isometry(const std::string& f1, const std::string& f2, const Options& opt) {
  Lattice a = resolve_lattice_arg(f1, opt);
  Lattice b = resolve_lattice_arg(f2, opt);
  auto w = is_isometric(a, b);
  if (opt.as_json) {
    json j;
    j["isometric"] = w.has_value();
    if (w) j["witness_rows_map_first_basis_into_second"] = gram_to_json(*w);
    std::cout << j.dump(1) << "\n";
  } else if (w) {
    std::cout << "ISOMETRIC; witness rows (images of the first basis in the second):\n";
    for (std::size_t i = 0; i < w->rows(); ++i) {
      std::cout << " ";
      for (std::size_t j = 0; j < w->cols(); ++j) std::cout << " " << (*w)(i, j).get_str();
      std::cout << "\n";
    }
  } else {
    std::cout << "NOT ISOMETRIC\n";
  }
  return w ? 0 : 1;
}

int cmd_classify(const std::string& group, long d, const Options& opt) {
  if (!is_group_name(group)) throw SchemaError("unknown group " + group);
  Lattice omega = resolve_lattice_arg(group, opt);
  auto cands = even_overlattices(Int(d), omega, group);
  json out = json::array();
  for (const auto& c : cands) {
    json j;
    j["group"] = group;
    j["d"] = d;
    j["index"] = c.index.get_str();
    j["det"] = c.gram.determinant().get_str();
    j["disc_group"] = disc_string(c.gram);
    Obstruction ob = embedding_obstruction(c.gram);
    j["obstruction"] = ob.obstructed ? ob.reason : "unobstructed (necessary condition only)";
    if (c.glue) {
      json g;
      g["r"] = c.glue->r.get_str();
      json v = json::array();
      for (const auto& x : c.glue->v) v.push_back(x.get_str());
      g["v"] = v;
      j["glue"] = g;
    }
    out.push_back(j);
  }
  if (group == "Z7") {
    Zeta7Verdict v = zeta7_represent_2d(Int(d));
    json z;
    z["representable_2d"] = v.representable;
    if (v.witness) {
      json w = json::array();
      for (const auto& x : *v.witness) w.push_back(x.get_str());
      z["witness"] = w;
    }
    z["verdict"] = v.representable ? "embeddable split candidate exists"
                                   : "no embeddable candidate";
    out.push_back(z);
  }
  if (opt.as_json) {
    std::cout << out.dump(1) << "\n";
  } else {
    for (const auto& j : out) std::cout << j.dump() << "\n";
  }
  return 0;
}

bool same_genus(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank() || a.signature() != b.signature()) return false;
  if (a.determinant() != b.determinant() || a.is_even() != b.is_even()) return false;
  DiscForm da = discriminant_group(a), db = discriminant_group(b);
  return da.factors == db.factors && disc_forms_isomorphic(da, db);
}

int cmd_verify_table(const Options& opt) {
  int failures = 0;
  auto cell = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %-58s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) ++failures;
  };
  FibrationDocument z4x4;
  NsLattice ns6;
  for (const auto& row : omega_table()) {
    const GroupRealization& real = group_realization(row.group);
    FibrationDocument doc =
        load_fibration(data_dir(opt.data) + "/fibrations/" + real.fibration + ".json");
    NsLattice ns = build_ns_from_document(doc);
    GroupAction a = action_on_ns(ns, doc, real, row.group);
    Sublattice inv = invariant_sublattice(a);
    Sublattice om_sub = orthogonal_complement(inv);
    Lattice omega(om_sub.induced_gram());
    DiscForm d = discriminant_group(omega);
    cell(row.group + ": rank/det/disc of Omega",
         static_cast<int>(omega.rank()) == row.rank && omega.determinant() == row.det &&
             d.factors == row.disc_factors,
         "rank " + std::to_string(omega.rank()) + " det " + omega.determinant().get_str() +
             " disc " + d.group_string());
    // the published complement column: full genus match against -q(Omega)
    const Lattice& perp = row.perp;
    bool perp_ok = static_cast<int>(perp.rank()) == 22 - row.rank &&
                   perp.signature() == std::pair<int, int>(3, 19 - row.rank) &&
                   abs(perp.determinant()) == abs(row.det) && perp.is_even();
    DiscForm dp = discriminant_group(perp);
    perp_ok = perp_ok && dp.factors == d.factors && disc_forms_isomorphic(dp, d, true);
    cell(row.group + ": published perp column matches -q(Omega)", perp_ok);
    // the minimum / generation claims
    cell(row.group + ": min 4, generated by -4 vectors",
         minimum(omega) == 4 && short_vectors(omega, 2).vectors.empty() &&
             generated_by_minimal(omega));
    // discriminant action
    bool all_id = true;
    for (const auto& g : a.generators) {
      IntMat r = restrict_isometry(om_sub, g.matrix);
      if (!action_on_discriminant(omega, d, r).is_identity) all_id = false;
    }
    cell(row.group + ": trivial action on disc(Omega)", all_id);
    if (row.group == "Z4xZ4") {
      z4x4 = doc;
      ns6 = ns;
    }
  }
  // printed gram cross-checks on the six-I4 surface
  Lattice t = six_i4_transcendental();
  auto glue = six_i4_glue_rows(ns6);
  for (const auto& sub : six_i4_subgroups()) {
    GroupAction a{&ns6.lattice, {}, sub.key};
    for (const auto& w : sub.translation_words)
      a.generators.push_back(translation_isometry(w, ns6));
    for (const auto& nm : sub.involution_names)
      for (const auto& spec : z4x4.involutions)
        if (spec.name == nm) a.generators.push_back(base_involution_isometry(spec, ns6));
    Lattice inv(invariant_sublattice(a).induced_gram());
    cell(sub.key + ": printed NS^G gram (genus)", same_genus(inv, sub.ns_invariant));
    GluedInvariant g = glued_invariant(a, t, glue);
    if (sub.h2_invariant)
      cell(sub.key + ": printed H2^G gram (genus)", same_genus(g.invariant, *sub.h2_invariant));
    cell(sub.key + ": index^2 = det(NS^G+T)/det(H2^G)",
         g.index * g.index * g.invariant.determinant() ==
             Lattice(invariant_sublattice(a).induced_gram()).determinant() * t.determinant(),
         "index " + g.index.get_str());
  }
  std::printf("%d failures\n", failures);
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice computations for elliptic K3 surfaces"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
  app.add_option("--data-dir", opt.data, "override the bundled data directory");

  std::string file, file2, group, out;
  long bound = 4, d = 1, box = 10;

  auto* trivial = app.add_subcommand("trivial", "trivial lattice of a fibration document");
  trivial->add_option("config", file)->required();

  auto* ns = app.add_subcommand("ns", "Neron-Severi lattice of a fibration document");
  ns->add_option("config", file)->required();

  auto* omega = app.add_subcommand("omega", "coinvariant lattice Omega_G for a bundled group");
  omega->add_option("group", group)->required();
  omega->add_option("--out", out, "also write the gram to a catalog-format file");

  auto* verify = app.add_subcommand("verify-table", "reproduce the published tables end to end");

  auto* classify = app.add_subcommand("classify", "candidate NS lattices ZL + Omega_G and overlattices");
  classify->add_option("group", group)->required();
  classify->add_option("d", d, "positive integer with L^2 = 2d")->required();

  auto* isom = app.add_subcommand("isometry", "definite isometry test between two lattices");
  isom->add_option("first", file)->required();
  isom->add_option("second", file2)->required();

  auto* shortv = app.add_subcommand("shortvec", "short vector enumeration");
  shortv->add_option("lattice", file)->required();
  shortv->add_option("bound,--bound", bound, "norm bound (default 4)");
  shortv->add_option("--box", box, "box radius for auxiliary searches");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*trivial) return cmd_trivial(file, opt);
    if (*ns) return cmd_ns(file, opt);
    if (*omega) return cmd_omega(group, opt, out);
    if (*verify) return cmd_verify_table(opt);
    if (*classify) {
      if (d < 1) throw SchemaError("d must be positive");
      return cmd_classify(group, d, opt);
    }
    if (*isom) return cmd_isometry(file, file2, opt);
    if (*shortv) return cmd_shortvec(file, bound, opt);
  } catch (const CatalogMissing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const IndefiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
