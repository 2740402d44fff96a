#include "pgzero/cover_json.hpp"

namespace pgzero {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::size_t lattice_size(const json& doc) {
  const auto& n = field(doc, "lattice_n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 0) throw parse_error("lattice_n must be a non-negative integer");
  return n.get<std::size_t>();
}

}  // namespace

json class_to_json(const DivisorClass& d) { return d.coefficients(); }

DivisorClass class_from_json(const json& j, std::size_t points) {
  if (!j.is_array()) throw parse_error("a class must be an integer array [d, m1, ..., mn]");
  std::vector<std::int64_t> coeffs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error("class coefficients must be integers");
    coeffs.push_back(v.get<std::int64_t>());
  }
  if (coeffs.size() != points + 1)
    throw parse_error("class has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                      std::to_string(points + 1));
  return DivisorClass::from_coefficients(coeffs);
}

PointConfiguration configuration_by_name(const std::string& name, std::uint64_t seed) {
  if (name == "quadrilateral") return standard_quadrilateral(false, false, seed);
  if (name == "quadrilateral+p7") return standard_quadrilateral(true, false, seed);
  if (name == "quadrilateral+general") return standard_quadrilateral(false, true, seed);
  if (name == "quadrilateral+p7+general") return standard_quadrilateral(true, true, seed);
  throw parse_error("unknown configuration \"" + name + "\"");
}

CoverDocument parse_cover(const json& doc, std::uint64_t seed) {
  CoverDocument out;
  const auto n = lattice_size(doc);
  out.data.points = n;

  if (doc.contains("configuration")) {
    if (!doc.at("configuration").is_string()) throw parse_error("configuration must be a string");
    out.configuration = doc.at("configuration").get<std::string>();
  } else if (n == 6) {
    out.configuration = "quadrilateral";
  } else if (n == 7) {
    out.configuration = "quadrilateral+p7";
  } else {
    throw parse_error("no default configuration for lattice_n = " + std::to_string(n));
  }
  out.cfg = configuration_by_name(out.configuration, seed);
  if (out.cfg.size() != n)
    throw parse_error("configuration " + out.configuration + " has " + std::to_string(out.cfg.size()) +
                      " points but lattice_n is " + std::to_string(n));

  const auto& comps = field(doc, "components");
  if (!comps.is_array()) throw parse_error("components must be an array");
  for (const auto& c : comps) {
    const auto& name = field(c, "name");
    if (!name.is_string()) throw parse_error("component name must be a string");
    const auto& branch = field(c, "branch");
    if (!branch.is_number_integer() || branch.get<int>() < 0 || branch.get<int>() > 3)
      throw parse_error("branch must be 0, 1, 2 or 3");
    std::int64_t mult = 1;
    if (c.contains("multiplicity")) {
      if (!c.at("multiplicity").is_number_integer() || c.at("multiplicity").get<std::int64_t>() < 1)
        throw parse_error("multiplicity must be a positive integer");
      mult = c.at("multiplicity").get<std::int64_t>();
    }
    const auto cls = class_from_json(field(c, "class"), n);
    std::string label = name.get<std::string>();
    for (std::int64_t k = 0; k < mult; ++k) {
      out.data.components.push_back({label, cls, branch.get<int>()});
      label += '\'';
    }
  }

  const bool has1 = doc.contains("L1");
  const bool has2 = doc.contains("L2");
  if (has1 != has2) throw parse_error("give both L1 and L2 or neither");
  if (has1) {
    out.data.L1 = class_from_json(doc.at("L1"), n);
    out.data.L2 = class_from_json(doc.at("L2"), n);
  } else {
    try {
      out.data = derive_line_bundles(std::move(out.data));
    } catch (const invalid_building_data& e) {
      throw parse_error(e.what());
    }
  }

  if (doc.contains("pencil")) {
    out.pencil = class_from_json(doc.at("pencil"), n);
  } else {
    out.pencil = quadrilateral_catalogue(out.cfg).cls("f1");
  }
  return out;
}

ordered_json cover_to_json(const BidoubleData& bd, const std::string& configuration, const DivisorClass& pencil) {
  ordered_json j;
  j["lattice_n"] = bd.points;
  j["configuration"] = configuration;
  j["components"] = ordered_json::array();
  for (const auto& c : bd.components) {
    ordered_json comp;
    comp["name"] = c.name;
    comp["class"] = c.cls.coefficients();
    comp["branch"] = c.branch;
    comp["multiplicity"] = 1;
    j["components"].push_back(std::move(comp));
  }
  j["L1"] = bd.L1.coefficients();
  j["L2"] = bd.L2.coefficients();
  j["pencil"] = pencil.coefficients();
  return j;
}

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["chi"] = r.chi;
  j["K2_cover"] = r.K2_cover;
  j["pg"] = r.pg;
  j["q"] = r.q;
  j["contractions"] = r.contractions;
  j["K2_minimal"] = r.K2_minimal;
  j["P2"] = r.P2;
  j["double_fibres"] = r.double_fibres;
  j["bicanonical_degree"] = r.bicanonical_degree;
  j["involution_index"] = r.involution_index;
  return j;
}

ordered_json to_json(const BinaryCode& code) {
  ordered_json j;
  j["length"] = code.length();
  j["dimension"] = code.dimension();
  j["generators"] = ordered_json::array();
  for (const auto& g : code.generators()) {
    std::vector<int> bits(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) bits[i] = g[i] ? 1 : 0;
    j["generators"].push_back(bits);
  }
  return j;
}

NodalFixture parse_nodal_fixture(const json& doc) {
  NodalFixture out;
  out.points = lattice_size(doc);
  const auto& classes = field(doc, "classes");
  if (!classes.is_array()) throw parse_error("classes must be an array");
  for (const auto& c : classes) {
    if (c.is_object()) {
      out.names.push_back(c.contains("name") ? c.at("name").get<std::string>() : "C" + std::to_string(out.names.size() + 1));
      out.classes.push_back(class_from_json(field(c, "class"), out.points));
    } else {
      out.names.push_back("C" + std::to_string(out.names.size() + 1));
      out.classes.push_back(class_from_json(c, out.points));
    }
  }
  return out;
}

}  // namespace pgzero
