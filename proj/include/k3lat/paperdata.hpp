#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/fibration.hpp"
#include "k3lat/invariants.hpp"
#include "k3lat/json_io.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// The fourteen finite abelian symplectic groups, keyed by their CLI spelling.
std::vector<std::string> group_names();
bool is_group_name(const std::string& s);
std::string group_display(const std::string& key);  // e.g. "Z4xZ4" -> "(Z/4Z)^2"

// Reference row of the coinvariant-lattice table: rank, |det| (sign carried
// separately), discriminant group, and the published orthogonal complement
// in the K3 lattice.
struct OmegaTableRow {
  std::string group;
  int rank;
  Int det;  // signed, as published
  std::vector<Int> disc_factors;
  Lattice perp;  // rank 22 - rank(Omega), signature (3, 19 - rank)
};
const std::vector<OmegaTableRow>& omega_table();
const OmegaTableRow& omega_table_row(const std::string& group);

// Reference data for the six subgroup actions on the six-I4 surface:
// printed invariant grams, printed glued invariant grams where available,
// and the published overlattice index.
struct SubgroupReference {
  std::string key;           // G44, G24, G22, G4, G222, G2222
  std::string group;         // group name key
  std::vector<MwWord> translation_words;
  std::vector<std::string> involution_names;
  Lattice ns_invariant;      // printed NS^G
  std::optional<Lattice> h2_invariant;  // printed H^2G where the paper gives one
  Int stated_index;          // published [H^2G : NS^G + T_X]
};
const std::vector<SubgroupReference>& six_i4_subgroups();

// transcendental lattice and glue data of the six-I4 surface
Lattice six_i4_transcendental();  // diag(4,4)
// the two glue rows (d_i, a_i/4) in NS+T coordinates for a given NS lattice
std::vector<std::vector<Rat>> six_i4_glue_rows(const NsLattice& ns);

// bundled fibration document for a group (throws SchemaError for Z2^3/Z2^4,
// which act on the six-I4 document)
std::string fibration_file(const std::string& group);

// generator words (and involution names) realizing each group on its bundled document
struct GroupRealization {
  std::string fibration;  // file stem, e.g. "z4x4"
  std::vector<MwWord> translation_words;
  std::vector<std::string> involution_names;
};
const GroupRealization& group_realization(const std::string& group);

// expected overlattice-index possibility sets from the published case lists
std::vector<Int> case_list_indices(const std::string& group, const Int& d);

// resolve the bundled data directory: explicit arg > K3LAT_DATA_DIR env > compiled default
std::string data_dir(const std::string& override_path = "");

NsLattice build_ns_from_document(const FibrationDocument& doc);
GroupAction action_on_ns(const NsLattice& ns, const FibrationDocument& doc,
                         const GroupRealization& real, const std::string& group);

}  // namespace k3lat
