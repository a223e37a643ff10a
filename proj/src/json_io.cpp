#include "k3lat/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "k3lat/errors.hpp"

namespace k3lat {

using nlohmann::json;

json gram_to_json(const IntMat& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat gram_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("gram must be an array of arrays");
  std::size_t n = j.size();
  IntMat g(n, n ? j[0].size() : 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != g.cols())
      throw SchemaError("gram rows must have equal length");
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const auto& e = j[i][k];
      if (e.is_string()) {
        try {
          g(i, k) = Int(e.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw SchemaError("bad integer string in gram");
        }
      } else if (e.is_number_integer()) {
        g(i, k) = Int(static_cast<long>(e.get<std::int64_t>()));
      } else {
        throw SchemaError("gram entries must be integer strings");
      }
    }
  }
  return g;
}

FibrationDocument fibration_from_json(const json& j) {
  FibrationDocument doc;
  if (!j.is_object() || !j.contains("fibers") || !j.contains("sections"))
    throw SchemaError("fibration document needs fibers and sections");
  doc.name = j.value("name", "");
  doc.group = j.value("group", "");
  doc.ref = j.value("ref", "");
  if (doc.ref.empty()) throw SchemaError("fibration document is missing its ref key");
  for (const auto& f : j.at("fibers")) {
    if (!f.contains("label") || !f.contains("type")) throw SchemaError("bad fiber entry");
    doc.config.fibers.push_back({f.at("label").get<int>(),
                                 FiberType::parse(f.at("type").get<std::string>())});
  }
  for (const auto& s : j.at("sections")) {
    SectionData sec;
    sec.name = s.at("name").get<std::string>();
    sec.order = s.at("order").get<int>();
    if (sec.order < 1) throw SchemaError("section order must be positive");
    for (const auto& [key, val] : s.at("meets").items()) {
      int label = std::stoi(key);
      sec.meets[label] = val.get<int>();
    }
    if (s.contains("meets_zero")) sec.meets_zero = s.at("meets_zero").get<int>();
    doc.sections.push_back(std::move(sec));
  }
  if (j.contains("involutions")) {
    for (const auto& iv : j.at("involutions")) {
      InvolutionSpec spec;
      spec.name = iv.at("name").get<std::string>();
      for (const auto& c : iv.at("components")) {
        auto from = c.at("from"), to = c.at("to");
        spec.components[{from[0].get<int>(), from[1].get<int>()}] = {to[0].get<int>(),
                                                                     to[1].get<int>()};
      }
      for (const auto& [name, word] : iv.at("sections").items()) {
        MwWord w;
        for (const auto& [gen, c] : word.items()) w[gen] = c.get<int>();
        spec.sections[name] = std::move(w);
      }
      doc.involutions.push_back(std::move(spec));
    }
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FibrationDocument load_fibration(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return fibration_from_json(j);
}

CatalogLattice load_catalog(const std::string& path) {
  if (!std::filesystem::exists(path)) throw CatalogMissing("catalog file absent: " + path);
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  CatalogLattice c;
  c.name = j.value("name", "");
  c.source = j.value("source", "");
  if (c.name.empty() || c.source.empty())
    throw SchemaError("catalog lattice must record name and source");
  c.lattice = Lattice(gram_from_json(j.at("gram")));
  return c;
}

Lattice lattice_from_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  if (j.is_array()) return Lattice(gram_from_json(j));
  return Lattice(gram_from_json(j.at("gram")));
}

}  // namespace k3lat
