#include "oracles.hpp"
#include "perturb.hpp"
#include "pgzero/bidouble.hpp"
#include "pgzero/constructions.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace pgzero;

namespace {

DivisorClass sum_branch(const BidoubleData& bd) {
  DivisorClass d = DivisorClass::zero(bd.points);
  for (const auto& c : bd.components)
    if (c.branch != 0) d += c.cls;
  return d;
}

// K_X^2 from 2K_X = pi^*(2K+D) and (pi^* A)^2 = 4 A^2.
std::int64_t K2_oracle(const BidoubleData& bd) {
  auto M = oracle::canonical(bd.points);
  for (auto& x : M) x *= 2;
  const auto D = sum_branch(bd).coefficients();
  for (std::size_t i = 0; i < M.size(); ++i) M[i] += D[i];
  return oracle::dot(M, M);
}

}  // namespace

TEST(Bidouble, Example1Data) {
  const auto c = example1();
  const auto v = validate(c.data);
  EXPECT_EQ(v.L3, DivisorClass(4, {2, 2, 2, 1, 1, 1}));
  EXPECT_EQ(c.data.branch_class(1), DivisorClass(5, {3, 2, 3, 0, 2, 2}));
  EXPECT_EQ(c.data.branch_class(2), DivisorClass(3, {1, 2, 1, 2, 0, 0}));
  EXPECT_EQ(c.data.branch_class(3), DivisorClass(7, {1, 2, 1, 4, 4, 4}));
  EXPECT_EQ(bicanonical_class(c.data), DivisorClass(9, {3, 4, 3, 4, 4, 4}));
  const auto inv = bidouble_invariants(c.data, c.cfg);
  EXPECT_EQ(inv.chi, oracle::bidouble_chi({c.data.L1, c.data.L2, v.L3}));
  EXPECT_EQ(inv.chi, 1);
  EXPECT_EQ(inv.K2_cover, K2_oracle(c.data));
  EXPECT_EQ(inv.K2_cover, -1);
  EXPECT_EQ(inv.pg, 0);
  EXPECT_EQ(inv.q, 0);
  EXPECT_EQ(contraction_count(c.data), 8);
}

TEST(Bidouble, BranchPreimages) {
  const auto c = example3();
  auto pre = [&](const char* name) {
    const auto* comp = c.data.find(name);
    return branch_preimage(comp->cls, comp->branch, c.data);
  };
  const auto s1 = pre("S1");
  EXPECT_EQ(s1.branch_degree, 0);
  EXPECT_TRUE(s1.split);
  EXPECT_EQ(s1.curves, 2);
  EXPECT_EQ(s1.self_intersection, -1);
  EXPECT_EQ(s1.contractible, 2);
  const auto e = pre("e7");
  EXPECT_EQ(e.branch_degree, 4);
  EXPECT_EQ(e.genus, 1);
  EXPECT_EQ(e.self_intersection, -1);
  EXPECT_EQ(e.contractible, 0);
  const auto t = pre("Delta2bar");
  EXPECT_EQ(t.branch_degree, 2);
  EXPECT_EQ(t.genus, 0);
  EXPECT_EQ(t.self_intersection, -2);
  EXPECT_THROW(branch_preimage(DivisorClass(3, {0, 0, 0, 0, 0, 0, 0}), 1, c.data), invalid_building_data);
}

TEST(Bidouble, BranchPreimageHurwitz) {
  // Genus of the reduced preimage by Riemann-Hurwitz for the double cover
  // of a rational curve branched in Gamma.2L_i points.
  for (const auto& c : {example1(), example2(), example3()}) {
    const auto L = line_bundles(c.data);
    for (const auto& comp : c.data.components) {
      if (comp.branch == 0) continue;
      const auto b = pair(comp.cls, 2 * L[comp.branch - 1]);
      const auto p = branch_preimage(comp.cls, comp.branch, c.data);
      if (b == 0) {
        EXPECT_EQ(p.curves, 2) << comp.name;
        EXPECT_EQ(2 * p.self_intersection, self_intersection(comp.cls)) << comp.name;
      } else {
        EXPECT_EQ(p.curves, 1) << comp.name;
        EXPECT_EQ(2 * p.genus - 2, 2 * -2 + b) << comp.name;
        EXPECT_EQ(p.self_intersection, self_intersection(comp.cls)) << comp.name;
      }
    }
  }
}

TEST(Bidouble, ErrorPaths) {
  auto bd = example2().data;
  auto bad = bd;
  bad.L1 = bad.L1 + DivisorClass::line(7);
  try {
    validate(bad);
    FAIL() << "expected relation_failure";
  } catch (const relation_failure& e) {
    EXPECT_EQ(e.which(), 1);
    EXPECT_EQ(e.residue(), 2 * DivisorClass::line(7));
  }
  bad = bd;
  bad.L2 = bad.L2 - DivisorClass::exceptional(7, 3);
  try {
    validate(bad);
    FAIL() << "expected relation_failure";
  } catch (const relation_failure& e) {
    EXPECT_EQ(e.which(), 2);
    EXPECT_EQ(e.residue(), -2 * DivisorClass::exceptional(7, 3));
  }
  bad = bd;
  bad.components.push_back(bad.components.front());
  EXPECT_THROW(validate(bad), invalid_building_data);
  bad = bd;
  bad.components.back().branch = 4;
  EXPECT_THROW(validate(bad), invalid_building_data);
  bad = bd;
  bad.components.push_back({"S1copy", bd.find("S1")->cls, 2});
  EXPECT_THROW(validate(bad), invalid_building_data);
  bad = bd;
  bad.L1 = DivisorClass::line(6);
  EXPECT_THROW(validate(bad), invalid_building_data);

  auto odd = bd;
  odd.components.pop_back();
  EXPECT_THROW(derive_line_bundles(odd), invalid_building_data);
}

TEST(Bidouble, DerivedLineBundles) {
  auto bd = example2().data;
  const auto given = line_bundles(bd);
  const auto derived = derive_line_bundles(bd);
  EXPECT_EQ(derived.line_bundles, Provenance::Derived);
  EXPECT_EQ(derived.L1, given[0]);
  EXPECT_EQ(derived.L2, given[1]);
  const auto ex3 = example3();
  EXPECT_EQ(ex3.data.L1, DivisorClass(4, {1, 1, 1, 2, 2, 2, 0}));
  EXPECT_EQ(ex3.data.L2, example2().data.L2);
}

TEST(Bidouble, DiagnosticsForMeetingComponents) {
  EXPECT_TRUE(validate(example1().data).diagnostics.empty());
  const auto cat = quadrilateral_catalogue(standard_quadrilateral(false, false));
  BidoubleData bd;
  bd.points = 6;
  for (const char* name : {"Delta1", "f1", "Delta2", "f2"}) bd.components.push_back({name, cat.cls(name), 3});
  bd = derive_line_bundles(std::move(bd));
  EXPECT_EQ(bd.L1, -BlowupLattice(6).canonical());
  const auto v = validate(bd);
  EXPECT_FALSE(v.diagnostics.empty());
}

TEST(Bidouble, Resolve111) {
  const auto base = example1();
  const auto deg = example1_degenerate();
  EXPECT_EQ(deg.data.points, 7u);
  const auto e7 = DivisorClass::exceptional(7, 7);
  EXPECT_EQ(deg.data.find("f1")->cls, base.data.find("f1")->cls.lifted() - e7);
  EXPECT_EQ(deg.data.find("f1'")->cls, base.data.find("f1")->cls.lifted());
  EXPECT_EQ(deg.data.L1, base.data.L1.lifted() - e7);
  EXPECT_NO_THROW(validate(deg.data));
  const auto inv = bidouble_invariants(deg.data, deg.cfg);
  EXPECT_EQ(inv.K2_cover, K2_oracle(deg.data));
  EXPECT_EQ(inv.K2_cover - bidouble_invariants(base.data, base.cfg).K2_cover, -1);

  const std::array<std::string, 3> two_in_d3{"f1", "f1'", "f2"};
  EXPECT_THROW(resolve_111(base.data, deg.cfg, two_in_d3), invalid_building_data);
  const std::array<std::string, 3> rigid{"f1", "f2", "Delta2"};
  EXPECT_THROW(resolve_111(base.data, deg.cfg, rigid), invalid_building_data);
  const std::array<std::string, 3> ok{"f1", "f2", "f3"};
  EXPECT_THROW(resolve_111(base.data, base.cfg, ok), invalid_building_data);
}

TEST(Bidouble, FibreMultiplicity) {
  const auto cat = quadrilateral_catalogue(standard_quadrilateral(false, false));
  const auto f1 = cat.cls("f1");
  const auto e1 = DivisorClass::exceptional(6, 1);
  std::vector<FibreComponent> m{{"S1", cat.cls("S1"), 1, 1}, {"S4", cat.cls("S4"), 1, 3}, {"e1", e1, 2, 0}};
  EXPECT_EQ(fibre_multiplicity(m, f1), 2);
  m[0].branch = 0;
  EXPECT_EQ(fibre_multiplicity(m, f1), 1);
  m.pop_back();
  EXPECT_THROW(fibre_multiplicity(m, f1), std::invalid_argument);
}

TEST(Bidouble, FibreMembersAreThePencil) {
  for (const auto& c : {example1(), example1_degenerate(), example2(), example3()}) {
    const auto fc = count_double_fibres(c.data, c.pencil, c.cfg);
    EXPECT_EQ(fc.depth, kDefaultFibreDepth);
    std::size_t doubles = 0;
    for (const auto& m : fc.members) {
      DivisorClass sum = DivisorClass::zero(c.data.points);
      for (const auto& comp : m.components) sum += comp.multiplicity * comp.cls;
      EXPECT_EQ(sum, c.pencil) << c.name;
      doubles += m.multiplicity == 2;
    }
    EXPECT_EQ(doubles, fc.double_fibres);
  }
}

TEST(Bidouble, Example2AdjointSystems) {
  const auto c = example2();
  const auto K = BlowupLattice(7).canonical();
  const auto L = line_bundles(c.data);
  EXPECT_EQ(K + L[0], DivisorClass(2, {0, 1, 0, 2, 1, 1, 0}));
  EXPECT_EQ(K + L[1], DivisorClass(4, {1, 2, 1, 2, 2, 2, 1}));
  EXPECT_EQ(K + L[2], DivisorClass(1, {1, 1, 1, 0, 0, 0, 0}));
  // Independent rank computation on the raw fat-point systems.
  std::vector<PlanePoint> pts(c.cfg.points.begin(), c.cfg.points.end());
  for (const auto& Li : L) {
    const auto A = K + Li;
    EXPECT_EQ(oracle::h0_fat(pts, A.degree(), {A.mults().begin(), A.mults().end()}), 0) << A;
  }
  // The conic through P4, P5, P6, P7 double at P4 does not exist.
  EXPECT_EQ(oracle::h0_fat(pts, 2, {0, 0, 0, 2, 1, 1, 1}), 0);
}

TEST(Bidouble, BicanonicalDecompositionExample2) {
  const auto c = example2();
  const auto d = bicanonical_decomposition(c.data, c.cfg);
  EXPECT_EQ(d.invariant, 6);
  EXPECT_EQ(d.character, (std::array<std::int64_t, 3>{1, 0, 0}));
  EXPECT_EQ(d.total, 7);
  EXPECT_EQ(d.degree, 2);
  EXPECT_EQ(d.involution, 1);
}

TEST(BidoubleProperty, CharacterRelabelingPreservesInvariants) {
  for (const auto& c : {example1(), example2(), example3()}) {
    const auto base = analyze(c.data, c.cfg, c.pencil);
    for (const auto& sigma : perturb::s3()) {
      const auto bd = perturb::relabel_characters(c.data, sigma);
      ASSERT_NO_THROW(validate(bd));
      const auto r = analyze(bd, c.cfg, c.pencil);
      EXPECT_EQ(r.chi, base.chi);
      EXPECT_EQ(r.K2_cover, base.K2_cover);
      EXPECT_EQ(r.pg, base.pg);
      EXPECT_EQ(r.contractions, base.contractions);
      EXPECT_EQ(r.P2, base.P2);
      EXPECT_EQ(r.double_fibres, base.double_fibres);
      EXPECT_EQ(r.bicanonical_degree, base.bicanonical_degree);
      EXPECT_EQ(sigma[r.involution_index - 1], base.involution_index);
    }
  }
}

TEST(BidoubleProperty, ProjectiveSymmetriesPreserveInvariants) {
  for (const auto& c : {example1(), example2(), example3()}) {
    const auto base = analyze(c.data, c.cfg, c.pencil);
    for (const auto& pi : configuration_symmetries(c.cfg)) {
      const auto moved = perturb::relabel_points(c, pi);
      EXPECT_EQ(analyze(moved.data, moved.cfg, moved.pencil), base) << c.name;
    }
  }
}
