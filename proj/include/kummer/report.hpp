#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kummer/cones.hpp"
#include "kummer/mukai.hpp"
#include "kummer/oracle.hpp"
#include "kummer/pell.hpp"

namespace kummer {

inline constexpr int kSchemaVersion = 1;

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);

// Output of one CLI query. The JSON payload is the single source; text and
// CSV are rendered from it.
struct Document {
  std::string kind;
  nlohmann::ordered_json params;   // {"n": ..., "l": ...}, values as strings
  nlohmann::ordered_json payload;
  bool passed = true;      // only verify can fail
};

// InvalidArgument when the format is not offered for the document kind
// (CSV exists for table, walls and pell).
std::string render(const Document& doc, Format format);

nlohmann::ordered_json to_json(const MukaiVector& u);
nlohmann::ordered_json to_json(const Ray& ray);
nlohmann::ordered_json to_json(const Cone& cone);
nlohmann::ordered_json to_json(const WallVectorReport& wall);
nlohmann::ordered_json to_json(const BoundaryReport& report);

enum class ConeSelection { Auto, Nef, Movable, Both };

ConeSelection parse_cone_selection(std::string_view name);

// UnsupportedNef when a nef cone is requested with l != 3.
Document cone_document(const SurfaceParams& p, ConeSelection which);
// l = 3 only.
Document chambers_document(const SurfaceParams& p, bool end_a_is_z);
// TrivialPell when l*n is a square.
Document walls_document(const SurfaceParams& p, std::size_t count);
Document pell_document(const SurfaceParams& p, std::size_t count);
Document table_document(std::int64_t n_first, std::int64_t n_last);

struct VerifyOptions {
  std::int64_t n_first = 1;
  std::int64_t n_last = 1;
  std::vector<std::int64_t> l_values{3};
  EnumerationBounds bounds;
  unsigned jobs = 1;
};

// Cross-checks closed forms against the oracle and the module invariants.
// Document::passed is true iff every verdict in the payload is "pass".
Document verify_document(const VerifyOptions& options);

}  // namespace kummer
