#include "pgzero/constructions.hpp"

#include <array>

namespace pgzero {

namespace {

BranchComponent from_catalogue(const CurveCatalogue& cat, const std::string& entry, int branch,
                               std::string name = {}) {
  return {name.empty() ? entry : std::move(name), cat.cls(entry), branch};
}

}  // namespace

Construction example1() {
  Construction c;
  c.name = "example1";
  c.cfg = standard_quadrilateral(false, false);
  const auto cat = quadrilateral_catalogue(c.cfg);
  auto& bd = c.data;
  bd.points = 6;
  bd.components = {
      from_catalogue(cat, "Delta1", 1), from_catalogue(cat, "f2", 1),     from_catalogue(cat, "S1", 1),
      from_catalogue(cat, "S2", 1),     from_catalogue(cat, "Delta2", 2), from_catalogue(cat, "f3", 2),
      from_catalogue(cat, "Delta3", 3), from_catalogue(cat, "f1", 3),     from_catalogue(cat, "f1", 3, "f1'"),
      from_catalogue(cat, "S3", 3),     from_catalogue(cat, "S4", 3),
  };
  bd.L1 = DivisorClass(5, {1, 2, 1, 3, 2, 2});
  bd.L2 = DivisorClass(6, {2, 2, 2, 2, 3, 3});
  c.pencil = cat.cls("f1");
  return c;
}

Construction example1_degenerate(std::uint64_t seed) {
  const Construction base = example1();
  Construction c;
  c.name = "example1-degenerate";
  c.cfg = standard_quadrilateral(false, true, seed);
  const std::array<std::string, 3> through{"f1", "f2", "f3"};
  c.data = resolve_111(base.data, c.cfg, through);
  c.pencil = base.pencil.lifted();
  return c;
}

Construction example2() {
  Construction c;
  c.name = "example2";
  c.cfg = standard_quadrilateral(true, false);
  const auto cat = quadrilateral_catalogue(c.cfg);
  const auto e7 = DivisorClass::exceptional(7, 7);
  auto& bd = c.data;
  bd.points = 7;
  bd.components = {
      {"C", cat.cls("f2") + cat.cls("f3") - 2 * e7, 1},
      from_catalogue(cat, "S1", 1),
      from_catalogue(cat, "S2", 1),
      from_catalogue(cat, "f3", 2),
      from_catalogue(cat, "f1", 3),
      from_catalogue(cat, "f1", 3, "f1'"),
      from_catalogue(cat, "Delta2bar", 3),
      from_catalogue(cat, "Delta3bar", 3),
      from_catalogue(cat, "S3", 3),
      from_catalogue(cat, "S4", 3),
  };
  bd.L1 = DivisorClass(5, {1, 2, 1, 3, 2, 2, 1});
  bd.L2 = DivisorClass(7, {2, 3, 2, 3, 3, 3, 2});
  c.pencil = cat.cls("f1");
  return c;
}

Construction example3() {
  Construction c;
  c.name = "example3";
  c.cfg = standard_quadrilateral(true, false);
  const auto cat = quadrilateral_catalogue(c.cfg);
  const auto e7 = DivisorClass::exceptional(7, 7);
  BidoubleData bd;
  bd.points = 7;
  bd.components = {
      {"C", cat.cls("f2") + cat.cls("f3") - 2 * e7, 1},
      from_catalogue(cat, "Delta2bar", 1),
      from_catalogue(cat, "S1", 1),
      from_catalogue(cat, "S2", 1),
      from_catalogue(cat, "Delta1", 2),
      from_catalogue(cat, "e7", 2),
      from_catalogue(cat, "f1", 3),
      from_catalogue(cat, "f1", 3, "f1'"),
      from_catalogue(cat, "Delta3bar", 3),
      from_catalogue(cat, "S3", 3),
      from_catalogue(cat, "S4", 3),
  };
  c.data = derive_line_bundles(std::move(bd));
  c.pencil = cat.cls("f1");
  return c;
}

}  // namespace pgzero
