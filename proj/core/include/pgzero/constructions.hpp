#pragma once

// The three Z_2^2-cover constructions over the quadrilateral blowups, plus the
// (1,1,1) degeneration of the first one.

#include "pgzero/bidouble.hpp"
#include "pgzero/plane_geometry.hpp"

#include <cstdint>
#include <string>

namespace pgzero {

struct Construction {
  std::string name;
  PointConfiguration cfg;
  BidoubleData data;
  /// The conic pencil |f1| whose pullback is the genus 3 fibration.
  DivisorClass pencil;
};

/// D1 = Delta1+f2+S1+S2, D2 = Delta2+f3, D3 = Delta3+f1+f1'+S3+S4 on the
/// six-point blowup.
Construction example1();

/// example1 with f1, f2, f3 through a seeded general point, resolved by
/// blowing the point up.
Construction example1_degenerate(std::uint64_t seed = kDefaultSeed);

/// On the blowup at P1..P7: D1 = C+S1+S2 with C in |f2+f3-2e7|, D2 = f3,
/// D3 = f1+f1'+Delta2bar+Delta3bar+S3+S4.
Construction example2();

/// Specialization of example2: D1 = C+Delta2bar+S1+S2, D2 = Delta1+e7,
/// D3 = f1+f1'+Delta3bar+S3+S4; L1, L2 derived by halving.
Construction example3();

}  // namespace pgzero
