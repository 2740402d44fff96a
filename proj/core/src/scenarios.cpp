#include "pgzero/scenarios.hpp"

#include "pgzero/constructions.hpp"
#include "pgzero/cover_json.hpp"
#include "pgzero/double_cover.hpp"
#include "pgzero/nodal_codes.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace pgzero {

using nlohmann::ordered_json;

std::size_t ScenarioReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

namespace {

class Checker {
 public:
  explicit Checker(ScenarioReport& r) : r_(r) {}

  void expect(std::string id, std::string anchor, ordered_json expected, const std::function<ordered_json()>& compute) {
    Check c{std::move(id), std::move(anchor), std::move(expected), nullptr, false};
    try {
      c.computed = compute();
      c.pass = c.computed == c.expected;
    } catch (const std::exception& e) {
      c.computed = ordered_json{{"error", e.what()}};
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  ScenarioReport& r_;
};

ordered_json preimage_json(const BranchPreimage& p) {
  return {{"curves", p.curves}, {"genus", p.genus}, {"self_intersection", p.self_intersection}};
}

ordered_json preimage_json(std::int64_t curves, std::int64_t genus, std::int64_t self) {
  return {{"curves", curves}, {"genus", genus}, {"self_intersection", self}};
}

ordered_json member_json(const FibreMember& m) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : m.components) comps.push_back({{"name", c.name}, {"multiplicity", c.multiplicity}});
  return {{"components", comps}, {"multiplicity", m.multiplicity}};
}

const BranchComponent& component(const BidoubleData& bd, const std::string& name) {
  const auto* c = bd.find(name);
  if (c == nullptr) throw std::out_of_range("no branch component named " + name);
  return *c;
}

BranchPreimage preimage_of(const BidoubleData& bd, const std::string& name) {
  const auto& c = component(bd, name);
  return branch_preimage(c.cls, c.branch, bd);
}

// Cached pipeline stages for one construction; each accessor rethrows on
// every call so that every dependent check records the failure.
class Pipeline {
 public:
  Pipeline(const Construction& c, std::size_t depth) : c_(c), depth_(depth) {}

  const Construction& construction() const { return c_; }
  const Validation& validation() { return cached(validation_, [&] { return validate(c_.data); }); }
  const CoverInvariants& invariants() {
    return cached(invariants_, [&] { return bidouble_invariants(c_.data, c_.cfg); });
  }
  std::int64_t contractions() {
    return cached(contractions_, [&] { return contraction_count(c_.data); });
  }
  std::int64_t K2_minimal() { return invariants().K2_cover + contractions(); }
  const FibreCount& fibres() {
    return cached(fibres_, [&] { return count_double_fibres(c_.data, c_.pencil, c_.cfg, depth_); });
  }
  const BicanonicalDecomposition& decomposition() {
    return cached(decomposition_, [&] { return bicanonical_decomposition(c_.data, c_.cfg); });
  }
  InvariantReport report() {
    return cached(report_, [&] { return analyze(c_.data, c_.cfg, c_.pencil, depth_); });
  }
  CurveCatalogue catalogue() const { return cover_catalogue(c_.data, c_.cfg); }

 private:
  template <class T, class F>
  const T& cached(std::optional<T>& slot, F&& f) {
    if (!slot) slot = f();
    return *slot;
  }

  const Construction& c_;
  std::size_t depth_;
  std::optional<Validation> validation_;
  std::optional<CoverInvariants> invariants_;
  std::optional<std::int64_t> contractions_;
  std::optional<FibreCount> fibres_;
  std::optional<BicanonicalDecomposition> decomposition_;
  std::optional<InvariantReport> report_;
};

void common_checks(Checker& ck, Pipeline& p, const std::string& where) {
  ck.expect("relations", where + ", building data", "valid", [&]() -> ordered_json {
    p.validation();
    return "valid";
  });
}

void fibre_details(ScenarioReport& r, Pipeline& p) {
  try {
    const auto& f = p.fibres();
    ordered_json members = ordered_json::array();
    for (const auto& m : f.members) members.push_back(member_json(m));
    r.details["fibre_search_depth"] = f.depth;
    r.details["special_fibres"] = members;
  } catch (const std::exception&) {
  }
  try {
    r.invariants = p.report();
  } catch (const std::exception&) {
  }
}

void bicanonical_checks(Checker& ck, Pipeline& p, const std::string& where, std::int64_t P2, int involution) {
  ck.expect("bicanonical-total", where + ", bicanonical decomposition", P2,
            [&] { return ordered_json(p.decomposition().total); });
  ck.expect("bicanonical-degree", where + ", bicanonical map", 2,
            [&] { return ordered_json(p.decomposition().degree); });
  ck.expect("bicanonical-involution", where + ", bicanonical involution", involution,
            [&] { return ordered_json(p.decomposition().involution); });
}

ScenarioReport scenario_example1(const ScenarioOptions& opts) {
  ScenarioReport r{"example1", {}, std::nullopt, ordered_json::object()};
  const Construction c = example1();
  Pipeline p(c, opts.fibre_depth);
  Checker ck(r);
  const std::string where = "Example 1";
  common_checks(ck, p, where);
  ck.expect("L3", where + ", L3", DivisorClass(4, {2, 2, 2, 1, 1, 1}).coefficients(),
            [&] { return ordered_json(p.validation().L3.coefficients()); });
  ck.expect("bicanonical-class", where + ", 2K+D", DivisorClass(9, {3, 4, 3, 4, 4, 4}).coefficients(),
            [&] { return ordered_json(bicanonical_class(c.data).coefficients()); });
  ck.expect("K2-cover", where + ", K^2 of X", -1, [&] { return ordered_json(p.invariants().K2_cover); });
  ck.expect("side-preimages", where + ", inverse images of S1..S4",
            ordered_json::array({preimage_json(2, 0, -1), preimage_json(2, 0, -1), preimage_json(2, 0, -1),
                                 preimage_json(2, 0, -1)}),
            [&] {
              ordered_json out = ordered_json::array();
              for (const char* s : {"S1", "S2", "S3", "S4"}) out.push_back(preimage_json(preimage_of(c.data, s)));
              return out;
            });
  ck.expect("contractions", where + ", exceptional curves on X", 8, [&] { return ordered_json(p.contractions()); });
  ck.expect("K2-minimal", where + ", K^2 of S", 7, [&] { return ordered_json(p.K2_minimal()); });
  ck.expect("chi", where + ", chi(S)", 1, [&] { return ordered_json(p.invariants().chi); });
  ck.expect("pg", where + ", p_g(S)", 0, [&] { return ordered_json(p.invariants().pg); });
  ck.expect("adjoint-h0", where + ", h0(K+L_i)", ordered_json::array({0, 0, 0}),
            [&] { return ordered_json(p.invariants().adjoint_h0); });
  ck.expect("double-fibres", where + ", double fibres of |F|", 5,
            [&] { return ordered_json(p.fibres().double_fibres); });
  bicanonical_checks(ck, p, where, 8, 1);
  fibre_details(r, p);
  return r;
}

ScenarioReport scenario_example1_degenerate(const ScenarioOptions& opts) {
  ScenarioReport r{"example1-degenerate", {}, std::nullopt, ordered_json::object()};
  std::optional<Construction> built;
  Checker ck(r);
  const std::string where = "Example 1, (1,1,1) point";
  ck.expect("resolve-111", where + ", resolution of the point", "valid", [&]() -> ordered_json {
    built = example1_degenerate(opts.seed);
    return "valid";
  });
  if (!built) return r;
  const Construction& c = *built;
  if (c.cfg.general_point) r.details["general_point"] = c.cfg.point(*c.cfg.general_point).to_string();
  r.details["seed"] = opts.seed;
  Pipeline p(c, opts.fibre_depth);
  common_checks(ck, p, where);
  const auto n = c.data.points;
  ck.expect("exceptional-unbranched", where + ", exceptional curve over P", true, [&] {
    const auto e = DivisorClass::exceptional(n, n);
    for (const auto& comp : c.data.components)
      if (comp.branch != 0 && comp.cls == e) return ordered_json(false);
    return ordered_json(true);
  });
  ck.expect("resolution-curve", where + ", exceptional divisor of S -> S0", preimage_json(1, 0, -4), [&] {
    // Unbranched rational curve meeting each D_i once: a 4:1 cover of P^1
    // with 2 ramification points of index 2 over each meeting point.
    const auto e = DivisorClass::exceptional(n, n);
    std::int64_t ramification = 0;
    for (int i = 1; i <= 3; ++i) ramification += 2 * pair(e, c.data.branch_class(i));
    const std::int64_t euler = 4 * (2 * arithmetic_genus(e) - 2) + ramification;
    return preimage_json(1, euler / 2 + 1, 4 * self_intersection(e));
  });
  ck.expect("K2-cover", where + ", K^2 of X", -2, [&] { return ordered_json(p.invariants().K2_cover); });
  ck.expect("contractions", where + ", exceptional curves on X", 8, [&] { return ordered_json(p.contractions()); });
  ck.expect("K2-minimal", where + ", K^2 of S", 6, [&] { return ordered_json(p.K2_minimal()); });
  ck.expect("chi", where + ", chi(S)", 1, [&] { return ordered_json(p.invariants().chi); });
  ck.expect("pg", where + ", p_g(S)", 0, [&] { return ordered_json(p.invariants().pg); });
  ck.expect("double-fibres", where + ", double fibres of |F|", 4,
            [&] { return ordered_json(p.fibres().double_fibres); });
  ck.expect("fibre-through-point", where + ", pullback of f1 through P", 1, [&] {
    const auto e = DivisorClass::exceptional(n, n);
    for (const auto& m : p.fibres().members)
      for (const auto& comp : m.components)
        if (comp.cls == e) return ordered_json(m.multiplicity);
    throw std::runtime_error("no special fibre contains the exceptional curve");
  });
  bicanonical_checks(ck, p, where, 7, 1);
  fibre_details(r, p);
  return r;
}

ScenarioReport scenario_example2(const ScenarioOptions& opts) {
  ScenarioReport r{"example2", {}, std::nullopt, ordered_json::object()};
  const Construction c = example2();
  Pipeline p(c, opts.fibre_depth);
  Checker ck(r);
  const std::string where = "Example 2";
  const auto catalogue = quadrilateral_catalogue(c.cfg);
  const auto K = c.data.lattice().canonical();
  const auto L = line_bundles(c.data);
  const auto M = bicanonical_class(c.data);
  const auto e4 = DivisorClass::exceptional(7, 4);
  const auto e7 = DivisorClass::exceptional(7, 7);
  const auto sides = catalogue.cls("S1") + catalogue.cls("S2") + catalogue.cls("S3") + catalogue.cls("S4");
  const auto f1 = catalogue.cls("f1");

  common_checks(ck, p, where);
  ck.expect("L3", where + ", L3", DivisorClass(4, {2, 2, 2, 1, 1, 1, 1}).coefficients(),
            [&] { return ordered_json(p.validation().L3.coefficients()); });
  ck.expect("C-class", where + ", C in |f2+f3-2e7|",
            ordered_json{{"class", DivisorClass(4, {2, 1, 2, 1, 1, 1, 2}).coefficients()}, {"p_a", 0}, {"h0", 2}},
            [&] {
              const auto C = catalogue.cls("f2") + catalogue.cls("f3") - 2 * e7;
              return ordered_json{{"class", C.coefficients()}, {"p_a", arithmetic_genus(C)}, {"h0", h0_class(c.cfg, C)}};
            });
  ck.expect("adjoint-classes", where + ", K+L_i",
            ordered_json::array({DivisorClass(2, {0, 1, 0, 2, 1, 1, 0}).coefficients(),
                                 DivisorClass(4, {1, 2, 1, 2, 2, 2, 1}).coefficients(),
                                 DivisorClass(1, {1, 1, 1, 0, 0, 0, 0}).coefficients()}),
            [&] {
              ordered_json out = ordered_json::array();
              for (const auto& Li : L) out.push_back((K + Li).coefficients());
              return out;
            });
  ck.expect("adjoint-h0", where + ", h0(K+L_i)", ordered_json::array({0, 0, 0}),
            [&] { return ordered_json(p.invariants().adjoint_h0); });
  ck.expect("pg", where + ", p_g(X)", 0, [&] { return ordered_json(p.invariants().pg); });
  ck.expect("chi", where + ", chi(S)", 1, [&] { return ordered_json(p.invariants().chi); });
  ck.expect("preimages", where + ", inverse images of S1..S4 and Delta2bar",
            ordered_json::array({preimage_json(2, 0, -1), preimage_json(2, 0, -1), preimage_json(2, 0, -1),
                                 preimage_json(2, 0, -1), preimage_json(2, 0, -1)}),
            [&] {
              ordered_json out = ordered_json::array();
              for (const char* s : {"S1", "S2", "S3", "S4", "Delta2bar"})
                out.push_back(preimage_json(preimage_of(c.data, s)));
              return out;
            });
  ck.expect("bicanonical-class", where + ", 2K+D = -K+f1+Delta2bar+S1+S2+S3+S4", true, [&] {
    return ordered_json(M == -K + f1 + catalogue.cls("Delta2bar") + sides);
  });
  ck.expect("K2-cover", where + ", K^2 of X", -4, [&] { return ordered_json(p.invariants().K2_cover); });
  ck.expect("contractions", where + ", exceptional curves on X", 10, [&] { return ordered_json(p.contractions()); });
  ck.expect("K2-minimal", where + ", K^2 of S", 6, [&] { return ordered_json(p.K2_minimal()); });
  ck.expect("K2-quarter", where + ", (-K+f1)^2", 6, [&] { return ordered_json(self_intersection(-K + f1)); });
  ck.expect("h0-minus-K-plus-f1", where + ", h0(-K+f1)", 6, [&] { return ordered_json(h0_class(c.cfg, -K + f1)); });
  ck.expect("h0-invariant-part", where + ", h0(2K+D) = h0(-K+f1)", 6,
            [&] { return ordered_json(h0_class(c.cfg, p.catalogue(), M)); });
  ck.expect("M-minus-L1", where + ", 2K+D-L1 = e4+Delta2bar+S1+S2+S3+S4", ordered_json{{"equal", true}, {"h0", 1}},
            [&] {
              const auto R = M - L[0];
              return ordered_json{{"equal", R == e4 + catalogue.cls("Delta2bar") + sides},
                                  {"h0", h0_class(c.cfg, p.catalogue(), R)}};
            });
  ck.expect("bicanonical-decomposition", where + ", H0(2K_X) by characters",
            ordered_json{{"invariant", 6}, {"character", {1, 0, 0}}}, [&] {
              const auto& d = p.decomposition();
              return ordered_json{{"invariant", d.invariant}, {"character", d.character}};
            });
  bicanonical_checks(ck, p, where, 7, 1);
  ck.expect("double-fibres", where + ", double fibres of |F|", 5,
            [&] { return ordered_json(p.fibres().double_fibres); });
  ck.expect("fibre-2A", where + ", fibre Delta2bar+Delta3bar+2e7", 2, [&] {
    for (const auto& m : p.fibres().members)
      for (const auto& comp : m.components)
        if (comp.cls == e7 && comp.multiplicity == 2) return ordered_json(m.multiplicity);
    throw std::runtime_error("no special fibre contains 2e7");
  });
  fibre_details(r, p);
  return r;
}

ScenarioReport scenario_example3(const ScenarioOptions& opts) {
  ScenarioReport r{"example3", {}, std::nullopt, ordered_json::object()};
  const Construction c = example3();
  Pipeline p(c, opts.fibre_depth);
  Checker ck(r);
  const std::string where = "Example 3";
  r.details["line_bundles"] = c.data.line_bundles == Provenance::Derived ? "derived" : "given";
  common_checks(ck, p, where);
  ck.expect("L1-derived", where + ", L1 by halving D2+D3", DivisorClass(4, {1, 1, 1, 2, 2, 2, 0}).coefficients(),
            [&] { return ordered_json(c.data.L1.coefficients()); });
  ck.expect("L2-derived", where + ", L2 as in Example 2", example2().data.L2.coefficients(),
            [&] { return ordered_json(c.data.L2.coefficients()); });
  ck.expect("chi", where + ", chi(S)", 1, [&] { return ordered_json(p.invariants().chi); });
  ck.expect("pg", where + ", p_g(S)", 0, [&] { return ordered_json(p.invariants().pg); });
  ck.expect("K2-cover", where + ", K^2 of X'", -2, [&] { return ordered_json(p.invariants().K2_cover); });
  ck.expect("contractions", where + ", exceptional curves on X'", 8, [&] { return ordered_json(p.contractions()); });
  ck.expect("K2-minimal", where + ", K^2 of S", 6, [&] { return ordered_json(p.K2_minimal()); });
  ck.expect("theta1", where + ", theta1 over Delta2bar", preimage_json(1, 0, -2),
            [&] { return preimage_json(preimage_of(c.data, "Delta2bar")); });
  ck.expect("theta2", where + ", theta2 over Delta3bar", preimage_json(1, 0, -2),
            [&] { return preimage_json(preimage_of(c.data, "Delta3bar")); });
  ck.expect("E", where + ", elliptic curve E over e7", preimage_json(1, 1, -1),
            [&] { return preimage_json(preimage_of(c.data, "e7")); });
  // Intersections of reduced preimages: a point of Gamma.Gamma' where the
  // two lie in different D_i has one point above it in X'.
  ck.expect("A-intersections", where + ", A = theta1+theta2+2E",
            ordered_json{{"theta1.E", 1}, {"theta2.E", 1}, {"theta1.theta2", 0}, {"A^2", 0}, {"K.A", 2}}, [&] {
              const auto t1 = preimage_of(c.data, "Delta2bar");
              const auto t2 = preimage_of(c.data, "Delta3bar");
              const auto E = preimage_of(c.data, "e7");
              const auto& d1 = component(c.data, "Delta2bar").cls;
              const auto& d2 = component(c.data, "Delta3bar").cls;
              const auto& d3 = component(c.data, "e7").cls;
              const std::int64_t t1E = pair(d1, d3), t2E = pair(d2, d3), t1t2 = pair(d1, d2);
              const std::int64_t A2 = t1.self_intersection + t2.self_intersection + 4 * E.self_intersection +
                                      2 * t1t2 + 4 * t1E + 4 * t2E;
              const auto KX = [](const BranchPreimage& b) { return 2 * b.genus - 2 - b.self_intersection; };
              return ordered_json{{"theta1.E", t1E}, {"theta2.E", t2E}, {"theta1.theta2", t1t2},
                                  {"A^2", A2},       {"K.A", KX(t1) + KX(t2) + 2 * KX(E)}};
            });
  ck.expect("double-fibres", where + ", double fibres of |F|", 5,
            [&] { return ordered_json(p.fibres().double_fibres); });
  bicanonical_checks(ck, p, where, 7, 1);
  fibre_details(r, p);
  return r;
}

ScenarioReport scenario_lemma_numeri(const ScenarioOptions&) {
  ScenarioReport r{"lemma-numeri", {}, std::nullopt, ordered_json::object()};
  Checker ck(r);
  const std::string where = "Bicanonical quotient lemma";
  const auto id = numeri_identities(-4, 10);
  ck.expect("K.L-L^2", where + ", K.L and L^2 at K^2 = -4", ordered_json{{"K.L", 4}, {"L^2", -6}},
            [&] { return ordered_json{{"K.L", id.K_dot_L}, {"L^2", id.L_squared}}; });
  ck.expect("K.B0-B0^2", where + ", (K.B0, B0^2) at K^2 = -4", ordered_json::array({8, -4}),
            [&] { return ordered_json::array({id.K_dot_B0, id.B0_squared}); });
  ck.expect("chi-double", where + ", chi of the double cover", 1,
            [&] { return ordered_json(double_cover_chi(id.L_squared, id.K_dot_L)); });
  ck.expect("H", where + ", H = 2K+B0", ordered_json{{"H^2", 12}, {"K.H", 0}, {"genus", 7}}, [&] {
    const std::int64_t K2 = -4;
    const std::int64_t H2 = 4 * K2 + 4 * id.K_dot_B0 + id.B0_squared;
    const std::int64_t KH = 2 * K2 + id.K_dot_B0;
    return ordered_json{{"H^2", H2}, {"K.H", KH}, {"genus", arithmetic_genus(H2, KH)}};
  });
  ck.expect("H-lattice", where + ", H realized on the 13-point blowup",
            ordered_json{{"H^2", 12}, {"K.H", 0}, {"genus", 7}, {"chi", 7}}, [&] {
              std::vector<std::int64_t> m(13, 1);
              std::fill(m.begin(), m.begin() + 8, 2);
              const DivisorClass H(7, m);
              const auto K = BlowupLattice(13).canonical();
              return ordered_json{{"H^2", self_intersection(H)},
                                  {"K.H", pair(K, H)},
                                  {"genus", arithmetic_genus(H)},
                                  {"chi", riemann_roch_chi(H)}};
            });
  ck.expect("castelnuovo-H", where + ", genus of H against degree 12 in P^6", 7,
            [&] { return ordered_json(castelnuovo_bound(12, 6)); });
  ck.expect("b2-bound", where + ", -K^2_Y <= b2(S)", ordered_json{{"b2", 4}, {"holds", true}}, [&] {
    const auto b2 = second_betti(1, 6);
    return ordered_json{{"b2", b2}, {"holds", 4 <= b2}};
  });
  ck.expect("etale-double", where + ", unramified double cover of S", ordered_json::array({2, 12}), [&] {
    const auto d = etale_double(1, 6);
    return ordered_json::array({d.chi, d.K2});
  });
  return r;
}

ScenarioReport scenario_codes(const ScenarioOptions&) {
  ScenarioReport r{"codes", {}, std::nullopt, ordered_json::object()};
  Checker ck(r);
  const std::string where = "Codes of nodal curves";
  ordered_json de_expected = ordered_json::array();
  for (std::size_t s = 1; s <= 8; ++s) de_expected.push_back({{"s", s}, {"dimension", s - 1}, {"doubly_even", true}});
  ck.expect("de-codes", where + ", DE(s)", de_expected, [&] {
    ordered_json out = ordered_json::array();
    for (std::size_t s = 1; s <= 8; ++s) {
      const auto code = de_code(s);
      out.push_back({{"s", s}, {"dimension", code.dimension()}, {"doubly_even", is_doubly_even(code)}});
    }
    return out;
  });

  const auto cfg = standard_quadrilateral(false, false);
  const auto cat = quadrilateral_catalogue(cfg);
  ck.expect("sides-code", where + ", S1+S2+S3+S4 divisible by 2",
            ordered_json{{"dimension", 1}, {"generators", ordered_json::array({ordered_json::array({1, 1, 1, 1})})}},
            [&] {
              const std::vector<DivisorClass> sides{cat.cls("S1"), cat.cls("S2"), cat.cls("S3"), cat.cls("S4")};
              const auto j = to_json(code_of_classes(sides));
              return ordered_json{{"dimension", j["dimension"]}, {"generators", j["generators"]}};
            });

  ck.expect("isotropy-rank14", where + ", 10 disjoint nodal curves with rank 14",
            ordered_json{{"bound_holds", true}, {"dim_V_lower_bound", 3}, {"dim_V_at_least_bound", true},
                         {"doubly_even", true}},
            [&] {
              const std::size_t n = 13;
              std::vector<DivisorClass> cls;
              auto e = [&](std::size_t i) { return DivisorClass::exceptional(n, i); };
              for (std::size_t i = 1; i <= 11; i += 2) cls.push_back(e(i + 1) - e(i));
              const auto l = DivisorClass::line(n);
              for (std::size_t i = 1; i <= 7; i += 2) cls.push_back(l - e(i) - e(i + 1) - e(13));
              const auto b = isotropy_bound_holds(cls);
              const auto code = code_of_classes(cls);
              const std::int64_t lower =
                  static_cast<std::int64_t>(cls.size()) - static_cast<std::int64_t>(b.ambient_rank) / 2;
              return ordered_json{{"bound_holds", b.holds},
                                  {"dim_V_lower_bound", lower},
                                  {"dim_V_at_least_bound", static_cast<std::int64_t>(code.dimension()) >= lower},
                                  {"doubly_even", is_doubly_even(code)}};
            });

  ck.expect("isotropy-violation", where + ", seven independent images in rank 7", false, [&] {
    std::vector<BitRow> rows;
    for (std::size_t i = 0; i < 7; ++i) {
      BitRow v(7);
      v.set(i);
      rows.push_back(v);
    }
    return ordered_json(isotropy_bound_holds(rows, 7).holds);
  });
  return r;
}

ScenarioReport scenario_bounds(const ScenarioOptions&) {
  ScenarioReport r{"bounds", {}, std::nullopt, ordered_json::object()};
  Checker ck(r);
  const std::string where = "Bicanonical degree bounds";
  ck.expect("castelnuovo-8-5", where + ", curves of degree 8 in P^5", 3,
            [&] { return ordered_json(castelnuovo_bound(8, 5)); });
  ck.expect("genus-H-8", where + ", genus of H with H^2 = 8 and K.H <= 6", 3,
            [&] { return ordered_json(arithmetic_genus(8, canonical_degree_from_genus(8, 3))); });
  ck.expect("slope-12", where + ", slope inequality for K^2 = 12", false,
            [&] { return ordered_json(slope_check(12, 2, 3).holds); });
  ck.expect("slope-24", where + ", slope inequality for K^2 = 24", ordered_json{{"holds", true}, {"margin", 8}}, [&] {
    const auto s = slope_check(24, 2, 3);
    return ordered_json{{"holds", s.holds}, {"margin", s.margin}};
  });
  ck.expect("etale-double", where + ", unramified double cover", ordered_json::array({2, 12}), [&] {
    const auto d = etale_double(1, 6);
    return ordered_json::array({d.chi, d.K2});
  });
  ck.expect("degree-pairs", where + ", (deg phi, deg image) for K^2 = 6",
            ordered_json::array({{2, 12}, {3, 8}, {4, 6}}), [&] {
              ordered_json out = ordered_json::array();
              for (const auto& [d, s] : bicanonical_degree_pairs(6)) out.push_back({d, s});
              return out;
            });
  ck.expect("P2", where + ", P2 = chi + K^2", 7, [&] { return ordered_json(bicanonical_h0(1, 6)); });
  return r;
}

using ScenarioFn = ScenarioReport (*)(const ScenarioOptions&);

const std::vector<std::pair<std::string, ScenarioFn>>& registry() {
  static const std::vector<std::pair<std::string, ScenarioFn>> r{
      {"example1", scenario_example1},         {"example1-degenerate", scenario_example1_degenerate},
      {"example2", scenario_example2},         {"example3", scenario_example3},
      {"lemma-numeri", scenario_lemma_numeri}, {"codes", scenario_codes},
      {"bounds", scenario_bounds},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opts);
  throw unknown_scenario("unknown scenario \"" + name + "\"");
}

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts,
                                          std::size_t jobs) {
  for (const auto& n : names) {
    if (std::find(scenario_names().begin(), scenario_names().end(), n) == scenario_names().end())
      throw unknown_scenario("unknown scenario \"" + n + "\"");
  }
  std::vector<ScenarioReport> out(names.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(names.size(), 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < names.size(); ++i) out[i] = run_scenario(names[i], opts);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < names.size(); i = next++) out[i] = run_scenario(names[i], opts);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

ScenarioReport run_custom(const nlohmann::json& doc, const ScenarioOptions& opts) {
  const auto parsed = parse_cover(doc, opts.seed);
  const auto v = validate(parsed.data);

  ScenarioReport r{"custom", {}, std::nullopt, ordered_json::object()};
  r.details["configuration"] = parsed.configuration;
  r.details["line_bundles"] = parsed.data.line_bundles == Provenance::Derived ? "derived" : "given";
  r.details["L1"] = parsed.data.L1.coefficients();
  r.details["L2"] = parsed.data.L2.coefficients();
  r.details["L3"] = v.L3.coefficients();
  r.details["diagnostics"] = v.diagnostics;

  const Construction c{"custom", parsed.cfg, parsed.data, parsed.pencil};
  Pipeline p(c, opts.fibre_depth);
  Checker ck(r);
  ck.expect("relations", "custom data, building data", "valid", [&]() -> ordered_json { return "valid"; });
  ck.expect("noether-chi", "custom data, chi = 1 - q + p_g", true, [&] {
    const auto& inv = p.invariants();
    return ordered_json(inv.chi == 1 - inv.q + inv.pg);
  });
  ck.expect("bicanonical-total", "custom data, P2 = chi + K^2 of the minimal model", true, [&] {
    const auto& d = p.decomposition();
    return ordered_json(d.total == p.invariants().chi + p.K2_minimal());
  });
  fibre_details(r, p);
  return r;
}

ordered_json to_json(const ScenarioReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["pass"] = c.pass;
    j["checks"].push_back(std::move(cj));
  }
  if (r.invariants) j["invariants"] = to_json(*r.invariants);
  if (!r.details.empty()) j["details"] = r.details;
  j["summary"] = {{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  return j;
}

std::string to_text(const ordered_json& report) {
  std::ostringstream os;
  os << "scenario " << report.at("scenario").get<std::string>() << '\n';
  for (const auto& c : report.at("checks")) {
    os << (c.at("pass").get<bool>() ? "  PASS " : "  FAIL ") << c.at("id").get<std::string>() << "  ["
       << c.at("anchor").get<std::string>() << "]\n";
    os << "       expected " << c.at("expected").dump() << '\n';
    if (!c.at("pass").get<bool>() || c.at("computed") != c.at("expected"))
      os << "       computed " << c.at("computed").dump() << '\n';
  }
  if (report.contains("invariants")) {
    os << "  invariants";
    for (const auto& [k, v] : report.at("invariants").items()) os << ' ' << k << '=' << v.dump();
    os << '\n';
  }
  const auto& s = report.at("summary");
  os << "  " << s.at("passed").get<std::size_t>() << '/' << s.at("total").get<std::size_t>() << " checks passed\n";
  return os.str();
}

}  // namespace pgzero
