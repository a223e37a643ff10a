#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "k3lat/fibration.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Gram matrices travel as arrays of arrays of decimal integer strings so that
// consumers never need 64-bit parsing. Parsing accepts plain numbers too.
nlohmann::json gram_to_json(const IntMat& g);
IntMat gram_from_json(const nlohmann::json& j);

struct FibrationDocument {
  std::string name;
  std::string group;          // display label of tors(MW)
  std::string ref;            // provenance key into the bundled reference set
  FiberConfiguration config;
  std::vector<SectionData> sections;
  std::vector<InvolutionSpec> involutions;
};

FibrationDocument fibration_from_json(const nlohmann::json& j);
FibrationDocument load_fibration(const std::string& path);

struct CatalogLattice {
  std::string name;
  std::string source;
  Lattice lattice;
};

CatalogLattice load_catalog(const std::string& path);  // throws CatalogMissing if absent

Lattice lattice_from_file(const std::string& path);  // catalog schema, minus metadata

std::string read_file(const std::string& path);

}  // namespace k3lat
