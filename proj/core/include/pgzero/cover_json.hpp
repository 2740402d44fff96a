#pragma once

// JSON forms of classes, cover descriptions, codes and invariant reports.
//
// Cover description:
//   {"lattice_n": 7, "configuration": "quadrilateral+p7",
//    "components": [{"name": "S1", "class": [1,1,1,0,0,1,0,0], "branch": 1, "multiplicity": 1}, ...],
//    "L1": [...], "L2": [...], "pencil": [...]}
// A class [d, m1, ..., mn] stands for d*l - sum m_i e_i.

#include "pgzero/bidouble.hpp"
#include "pgzero/nodal_codes.hpp"
#include "pgzero/plane_geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgzero {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json class_to_json(const DivisorClass& d);
DivisorClass class_from_json(const nlohmann::json& j, std::size_t points);

/// "quadrilateral", "quadrilateral+p7" or "quadrilateral+general".
PointConfiguration configuration_by_name(const std::string& name, std::uint64_t seed = kDefaultSeed);

struct CoverDocument {
  BidoubleData data;
  std::string configuration;
  PointConfiguration cfg;
  DivisorClass pencil;
};

/// Missing L1/L2 are derived by halving (Provenance::Derived). A component
/// with multiplicity k > 1 becomes k distinct general members named
/// name, name', name'', ...
CoverDocument parse_cover(const nlohmann::json& doc, std::uint64_t seed = kDefaultSeed);
nlohmann::ordered_json cover_to_json(const BidoubleData& bd, const std::string& configuration,
                                     const DivisorClass& pencil);

nlohmann::ordered_json to_json(const InvariantReport& r);
nlohmann::ordered_json to_json(const BinaryCode& code);

struct NodalFixture {
  std::size_t points = 0;
  std::vector<std::string> names;
  std::vector<DivisorClass> classes;
};

/// {"lattice_n": n, "classes": [{"name": ..., "class": [...]}, ...]}
NodalFixture parse_nodal_fixture(const nlohmann::json& doc);

}  // namespace pgzero
