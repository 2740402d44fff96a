// pgzero: verification scenarios and probes for Z_2^2-covers of blown-up planes.

#include "pgzero/cover_json.hpp"
#include "pgzero/nodal_codes.hpp"
#include "pgzero/scenarios.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kInput = 2 };

struct Globals {
  std::string format = "json";
  std::uint64_t seed = pgzero::kDefaultSeed;
  std::size_t jobs = 1;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pgzero::parse_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw pgzero::parse_error(path + ": " + e.what());
  }
}

void emit_flat(const ordered_json& j, const Globals& g) {
  if (g.format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

int cmd_verify(const std::string& name, const Globals& g) {
  std::vector<std::string> names;
  if (name == "all") {
    names = pgzero::scenario_names();
  } else {
    names = {name};
  }
  pgzero::ScenarioOptions opts;
  opts.seed = g.seed;
  const auto reports = pgzero::run_scenarios(names, opts, g.jobs);
  bool ok = true;
  ordered_json all = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.all_pass();
    all.push_back(pgzero::to_json(r));
  }
  if (g.format == "json") {
    std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  } else {
    for (const auto& r : all) std::cout << pgzero::to_text(r);
  }
  return ok ? kOk : kFailed;
}

int cmd_custom(const std::string& path, const Globals& g) {
  pgzero::ScenarioOptions opts;
  opts.seed = g.seed;
  try {
    const auto report = pgzero::run_custom(read_json(path), opts);
    const auto j = pgzero::to_json(report);
    std::cout << (g.format == "json" ? j.dump(2) + "\n" : pgzero::to_text(j));
    return report.all_pass() ? kOk : kFailed;
  } catch (const pgzero::relation_failure& e) {
    ordered_json err{{"error", "relation failure"},
                     {"relation", e.which()},
                     {"residue", e.residue().coefficients()},
                     {"message", e.what()}};
    if (g.format == "json") {
      std::cout << err.dump(2) << '\n';
    } else {
      std::cout << "relation " << e.which() << " fails, residue " << e.residue().to_string() << '\n';
    }
    return kFailed;
  } catch (const pgzero::invalid_building_data& e) {
    std::cerr << "invalid building data: " << e.what() << '\n';
    return kFailed;
  }
}

std::vector<std::int64_t> parse_mults(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::istringstream ws(tok);
    std::int64_t v = 0;
    std::string rest;
    if (!(ws >> v) || (ws >> rest)) throw pgzero::parse_error("bad multiplicity \"" + tok + "\"");
    if (v < 0) throw pgzero::parse_error("multiplicities must be non-negative");
    out.push_back(v);
  }
  return out;
}

int cmd_h0(std::int64_t degree, const std::string& mults, bool with_p7, bool general, const Globals& g) {
  if (degree < 0) throw pgzero::parse_error("degree must be non-negative");
  const auto cfg = pgzero::standard_quadrilateral(with_p7, general, g.seed);
  const auto m = parse_mults(mults);
  if (m.size() > cfg.size())
    throw pgzero::parse_error(std::to_string(m.size()) + " multiplicities for " + std::to_string(cfg.size()) +
                              " points");
  pgzero::FatPointSystem sys;
  sys.degree = degree;
  std::int64_t conditions = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    sys.assignments.emplace_back(i + 1, m[i]);
    conditions += m[i] * (m[i] + 1) / 2;
  }
  const std::int64_t forms = (degree + 1) * (degree + 2) / 2;
  ordered_json j;
  j["degree"] = degree;
  j["multiplicities"] = m;
  ordered_json pts = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) pts.push_back(cfg.point(i + 1).to_string());
  j["points"] = pts;
  j["expected_dimension"] = std::max<std::int64_t>(0, forms - conditions);
  j["h0"] = pgzero::h0_fat_points(cfg, sys);
  emit_flat(j, g);
  return kOk;
}

int cmd_code(const std::string& path, const Globals& g) {
  const auto fx = pgzero::parse_nodal_fixture(read_json(path));
  try {
    pgzero::require_disjoint_nodal(fx.classes);
  } catch (const pgzero::not_nodal& e) {
    std::cerr << "not a set of disjoint nodal classes: " << e.what() << '\n';
    return kFailed;
  }
  const auto code = pgzero::code_of_classes(fx.classes);
  const auto iso = pgzero::isotropy_bound_holds(fx.classes);
  ordered_json j;
  j["curves"] = fx.names;
  const auto cj = pgzero::to_json(code);
  j["length"] = cj["length"];
  j["dimension"] = cj["dimension"];
  j["generators"] = cj["generators"];
  if (code.dimension() <= pgzero::kEnumerationCap) {
    ordered_json w = ordered_json::object();
    for (const auto& [weight, count] : pgzero::weights(code)) w[std::to_string(weight)] = count;
    j["weights"] = w;
    j["doubly_even"] = pgzero::is_doubly_even(code);
  }
  j["isotropy"] = {{"twice_image_dim", iso.twice_image_dim}, {"ambient_rank", iso.ambient_rank}, {"holds", iso.holds}};
  emit_flat(j, g);
  return iso.holds ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification scenarios for Z_2^2-covers of blown-up planes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "Seed for the general point");
  app.add_option("--jobs", g.jobs, "Scenarios run in parallel")->check(CLI::PositiveNumber);

  std::string scenario;
  auto* verify = app.add_subcommand("verify", "Run a named scenario (or \"all\")");
  verify->add_option("scenario", scenario)->required();

  std::string cover;
  auto* custom = app.add_subcommand("custom", "Run the pipeline on a JSON cover description");
  custom->add_option("file", cover)->required();

  std::int64_t degree = 0;
  std::string mults;
  bool with_p7 = false;
  bool general = false;
  auto* h0 = app.add_subcommand("h0", "Dimension of a fat-point system on the quadrilateral configuration");
  h0->add_option("--degree", degree)->required();
  h0->add_option("--mults", mults, "Comma-separated multiplicities at P1, P2, ...")->required();
  h0->add_flag("--with-p7", with_p7);
  h0->add_flag("--general-point", general);

  std::string fixture;
  auto* code = app.add_subcommand("code", "Binary code of a set of disjoint nodal classes");
  code->add_option("--fixture", fixture)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(scenario, g);
    if (custom->parsed()) return cmd_custom(cover, g);
    if (h0->parsed()) return cmd_h0(degree, mults, with_p7, general, g);
    if (code->parsed()) return cmd_code(fixture, g);
  } catch (const pgzero::unknown_scenario& e) {
    std::cerr << e.what() << '\n';
    return kInput;
  } catch (const pgzero::parse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const pgzero::lattice_mismatch& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kInput;
}
