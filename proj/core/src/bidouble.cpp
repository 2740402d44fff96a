#include "pgzero/bidouble.hpp"

#include <algorithm>
#include <set>

namespace pgzero {

namespace {

void require_branch_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("branch index must be 1, 2 or 3");
}

DivisorClass half(const DivisorClass& d, const std::string& what) {
  auto coeffs = d.coefficients();
  for (auto& c : coeffs) {
    if (c % 2 != 0) throw invalid_building_data(what + " = " + d.to_string() + " is not divisible by 2");
    c /= 2;
  }
  return DivisorClass::from_coefficients(coeffs);
}

void check_structure(const BidoubleData& bd) {
  if (bd.L1.points() != bd.points || bd.L2.points() != bd.points)
    throw invalid_building_data("L1/L2 do not live on the " + std::to_string(bd.points) + "-point lattice");
  std::set<std::string> names;
  for (const auto& c : bd.components) {
    if (c.cls.points() != bd.points)
      throw invalid_building_data("component " + c.name + " does not live on the declared lattice");
    if (c.branch < 0 || c.branch > 3) throw invalid_building_data("component " + c.name + " has branch index outside 0..3");
    if (!names.insert(c.name).second) throw invalid_building_data("component name " + c.name + " is repeated");
  }
  // A rigid curve is the only member of its class, so it can be listed once.
  for (std::size_t i = 0; i < bd.components.size(); ++i) {
    const auto& a = bd.components[i];
    if (self_intersection(a.cls) >= 0) continue;
    for (std::size_t j = i + 1; j < bd.components.size(); ++j)
      if (bd.components[j].cls == a.cls)
        throw invalid_building_data("rigid curve " + a.cls.to_string() + " listed twice (" + a.name + ", " +
                                    bd.components[j].name + ")");
  }
}

}  // namespace

relation_failure::relation_failure(int which, DivisorClass residue)
    : std::runtime_error("relation 2L" + std::to_string(which) + " = " + (which == 1 ? "D2+D3" : "D1+D3") +
                         " fails; residue " + residue.to_string()),
      which_(which),
      residue_(std::move(residue)) {}

DivisorClass BidoubleData::branch_class(int i) const {
  require_branch_index(i);
  DivisorClass d = DivisorClass::zero(points);
  for (const auto& c : components)
    if (c.branch == i) d += c.cls;
  return d;
}

DivisorClass BidoubleData::total_branch() const { return branch_class(1) + branch_class(2) + branch_class(3); }

const BranchComponent* BidoubleData::find(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

Validation validate(const BidoubleData& bd) {
  check_structure(bd);
  const auto d1 = bd.branch_class(1);
  const auto d2 = bd.branch_class(2);
  const auto d3 = bd.branch_class(3);
  if (auto r = 2 * bd.L1 - (d2 + d3); !r.is_zero()) throw relation_failure(1, r);
  if (auto r = 2 * bd.L2 - (d1 + d3); !r.is_zero()) throw relation_failure(2, r);

  Validation out;
  out.L3 = bd.L1 + bd.L2 - d3;
  if (!(2 * out.L3 - (d1 + d2)).is_zero()) throw std::logic_error("2L3 != D1 + D2 after both relations held");

  for (int i = 1; i <= 3; ++i) {
    for (std::size_t a = 0; a < bd.components.size(); ++a) {
      const auto& ca = bd.components[a];
      if (ca.branch != i) continue;
      for (std::size_t b = a + 1; b < bd.components.size(); ++b) {
        const auto& cb = bd.components[b];
        if (cb.branch == i && pair(ca.cls, cb.cls) != 0)
          out.diagnostics.push_back("D" + std::to_string(i) + " components " + ca.name + " and " + cb.name +
                                    " meet (" + std::to_string(pair(ca.cls, cb.cls)) + ")");
      }
    }
  }
  return out;
}

BidoubleData derive_line_bundles(BidoubleData bd) {
  const auto d1 = bd.branch_class(1);
  const auto d2 = bd.branch_class(2);
  const auto d3 = bd.branch_class(3);
  bd.L1 = half(d2 + d3, "D2+D3");
  bd.L2 = half(d1 + d3, "D1+D3");
  bd.line_bundles = Provenance::Derived;
  return bd;
}

std::array<DivisorClass, 3> line_bundles(const BidoubleData& bd) { return {bd.L1, bd.L2, validate(bd).L3}; }

BranchPreimage branch_preimage(const DivisorClass& component, int branch, const BidoubleData& bd) {
  require_branch_index(branch);
  if (arithmetic_genus(component) != 0)
    throw invalid_building_data("branch component " + component.to_string() + " is not a smooth rational class");
  const auto L = line_bundles(bd)[branch - 1];
  BranchPreimage out;
  out.branch_degree = pair(component, 2 * L);
  if (out.branch_degree < 0 || out.branch_degree % 2 != 0)
    throw invalid_building_data("branch degree " + std::to_string(out.branch_degree) + " of " +
                                component.to_string() + " is impossible for valid data");
  const auto sq = self_intersection(component);
  if (out.branch_degree == 0) {
    if (sq % 2 != 0)
      throw invalid_building_data("unramified component " + component.to_string() + " has odd self-intersection");
    out.split = true;
    out.curves = 2;
    out.genus = 0;
    out.self_intersection = sq / 2;
    out.contractible = out.self_intersection == -1 ? 2 : 0;
  } else {
    out.split = false;
    out.curves = 1;
    out.genus = out.branch_degree / 2 - 1;
    out.self_intersection = sq;
    out.contractible = (out.genus == 0 && sq == -1) ? 1 : 0;
  }
  return out;
}

std::int64_t contraction_count(const BidoubleData& bd) {
  std::int64_t total = 0;
  for (const auto& c : bd.components)
    if (c.branch >= 1) total += branch_preimage(c.cls, c.branch, bd).contractible;
  return total;
}

DivisorClass bicanonical_class(const BidoubleData& bd) {
  return 2 * DivisorClass::canonical(bd.points) + bd.total_branch();
}

CurveCatalogue cover_catalogue(const BidoubleData& bd, const PointConfiguration& cfg) {
  const auto base = quadrilateral_catalogue(cfg);
  std::vector<CatalogueEntry> entries(base.entries().begin(), base.entries().end());
  for (const auto& c : bd.components) {
    const auto sq = self_intersection(c.cls);
    if (sq >= 0 || base.rigid_with_class(c.cls)) continue;
    CatalogueEntry e;
    e.name = c.name;
    e.cls = c.cls;
    e.self_intersection = sq;
    e.plane_degree = static_cast<int>(c.cls.degree());
    entries.push_back(std::move(e));
  }
  return CurveCatalogue(std::move(entries));
}

CoverInvariants bidouble_invariants(const BidoubleData& bd, const PointConfiguration& cfg) {
  if (cfg.size() != bd.points) throw invalid_building_data("configuration and building data use different lattices");
  const auto ls = line_bundles(bd);
  const auto K = DivisorClass::canonical(bd.points);
  const auto catalogue = cover_catalogue(bd, cfg);

  CoverInvariants out;
  out.chi = 4;
  for (const auto& L : ls) out.chi += pair(L, L + K) / 2;
  out.K2_cover = self_intersection(bicanonical_class(bd));
  for (std::size_t i = 0; i < 3; ++i) {
    out.adjoint_h0[i] = h0_class(cfg, catalogue, K + ls[i]);
    out.pg += out.adjoint_h0[i];
  }
  out.q = out.pg + 1 - out.chi;
  if (out.q < 0) throw inconsistent_data("irregularity came out negative");
  return out;
}

BidoubleData resolve_111(const BidoubleData& bd, const PointConfiguration& cfg,
                         std::span<const std::string> through_point) {
  if (!cfg.general_point || *cfg.general_point != bd.points + 1 || cfg.size() != bd.points + 1)
    throw invalid_building_data("resolve_111 needs the configuration with the general point appended");
  std::array<int, 4> hits{};
  for (const auto& name : through_point) {
    const auto* c = bd.find(name);
    if (!c) throw invalid_building_data("no component named " + name);
    if (c->branch < 1) throw invalid_building_data(name + " is not a branch component");
    if (self_intersection(c->cls) < 0)
      throw invalid_building_data("rigid curve " + name + " does not pass through a general point");
    ++hits[c->branch];
  }
  if (hits[1] != 1 || hits[2] != 1 || hits[3] != 1)
    throw invalid_building_data("incidence pattern at the point is not (1,1,1)");

  const std::size_t n = bd.points + 1;
  const auto e = DivisorClass::exceptional(n, n);
  BidoubleData out;
  out.points = n;
  out.line_bundles = bd.line_bundles;
  for (const auto& c : bd.components) {
    BranchComponent lifted{c.name, c.cls.lifted(), c.branch};
    if (std::find(through_point.begin(), through_point.end(), c.name) != through_point.end()) lifted.cls -= e;
    out.components.push_back(std::move(lifted));
  }
  out.L1 = bd.L1.lifted() - e;
  out.L2 = bd.L2.lifted() - e;
  validate(out);
  return out;
}

int fibre_multiplicity(std::span<const FibreComponent> member, const DivisorClass& pencil) {
  DivisorClass sum = DivisorClass::zero(pencil.points());
  for (const auto& c : member) sum += c.multiplicity * c.cls;
  if (sum != pencil)
    throw std::invalid_argument("member sums to " + sum.to_string() + ", not the pencil class " + pencil.to_string());
  for (const auto& c : member)
    if (c.branch == 0 && c.multiplicity % 2 != 0) return 1;
  return 2;
}

FibreCount count_double_fibres(const BidoubleData& bd, const DivisorClass& pencil, const PointConfiguration& cfg,
                               std::size_t depth) {
  if (self_intersection(pencil) != 0) throw std::invalid_argument("pencil class must have square 0");
  const auto catalogue = quadrilateral_catalogue(cfg);

  std::vector<NamedClass> pieces;
  std::vector<int> branch_of;
  for (const auto& c : bd.components) {
    if (c.cls.is_zero() || pair(c.cls, pencil) != 0) continue;
    pieces.push_back({c.name, c.cls});
    branch_of.push_back(c.branch);
  }
  for (const auto& e : catalogue.entries()) {
    if (e.moving || e.self_intersection >= 0 || pair(e.cls, pencil) != 0) continue;
    const bool listed = std::any_of(bd.components.begin(), bd.components.end(),
                                    [&](const BranchComponent& c) { return c.cls == e.cls; });
    if (listed) continue;
    pieces.push_back({e.name, e.cls});
    branch_of.push_back(0);
  }

  FibreCount out;
  out.depth = depth;
  for (const auto& dec : effective_decompositions(pencil, pieces, depth)) {
    FibreMember member;
    for (const auto& [name, mult] : dec) {
      const auto it = std::find_if(pieces.begin(), pieces.end(), [&](const NamedClass& p) { return p.name == name; });
      const auto idx = static_cast<std::size_t>(it - pieces.begin());
      member.components.push_back({name, it->cls, mult, branch_of[idx]});
    }
    member.multiplicity = fibre_multiplicity(member.components, pencil);
    if (member.multiplicity == 2) ++out.double_fibres;
    out.members.push_back(std::move(member));
  }
  return out;
}

BicanonicalDecomposition bicanonical_decomposition(const BidoubleData& bd, const PointConfiguration& cfg) {
  const auto inv = bidouble_invariants(bd, cfg);
  const auto K2_minimal = inv.K2_cover + contraction_count(bd);
  const auto ls = line_bundles(bd);
  const auto M = bicanonical_class(bd);
  const auto catalogue = cover_catalogue(bd, cfg);

  BicanonicalDecomposition out;
  out.invariant = h0_class(cfg, catalogue, M);
  out.total = out.invariant;
  int nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out.character[i] = h0_class(cfg, catalogue, M - ls[i]);
    out.total += out.character[i];
    if (out.character[i] != 0) {
      ++nonzero;
      out.involution = static_cast<int>(i + 1);
    }
  }
  if (out.total != inv.chi + K2_minimal)
    throw inconsistent_data("h0(2K_X) = " + std::to_string(out.total) + " but chi + K^2 = " +
                            std::to_string(inv.chi + K2_minimal));
  if (nonzero == 0) {
    out.degree = 4;
  } else if (nonzero == 1) {
    out.degree = 2;
  } else {
    out.degree = 1;
    out.involution = 0;
  }
  return out;
}

InvariantReport analyze(const BidoubleData& bd, const PointConfiguration& cfg, const DivisorClass& pencil,
                        std::size_t depth) {
  validate(bd);
  const auto inv = bidouble_invariants(bd, cfg);
  InvariantReport r;
  r.chi = inv.chi;
  r.K2_cover = inv.K2_cover;
  r.pg = inv.pg;
  r.q = inv.q;
  r.contractions = contraction_count(bd);
  r.K2_minimal = r.K2_cover + r.contractions;
  r.double_fibres = static_cast<std::int64_t>(count_double_fibres(bd, pencil, cfg, depth).double_fibres);
  const auto bic = bicanonical_decomposition(bd, cfg);
  r.P2 = bic.total;
  r.bicanonical_degree = bic.degree;
  r.involution_index = bic.involution;
  return r;
}

}  // namespace pgzero
