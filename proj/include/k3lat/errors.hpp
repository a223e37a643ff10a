#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

// CLI exit codes: 1 verification failure, 2 schema, 3 inconsistent data,
// 4 indefinite input, 5 missing catalog file.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& m) : std::runtime_error(m) {}
};

struct IndefiniteError : std::runtime_error {
  explicit IndefiniteError(const std::string& m) : std::runtime_error(m) {}
};

struct CatalogMissing : std::runtime_error {
  explicit CatalogMissing(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace k3lat
