#pragma once

// Relabelings of building data that must leave every invariant unchanged
// except the involution index, which follows the character permutation.

#include "pgzero/bidouble.hpp"
#include "pgzero/constructions.hpp"

#include <array>
#include <vector>

namespace perturb {

/// D'_i = D_{sigma[i-1]}, L'_i = L_{sigma[i-1]}; sigma a permutation of {1,2,3}.
inline pgzero::BidoubleData relabel_characters(const pgzero::BidoubleData& bd, const std::array<int, 3>& sigma) {
  const auto L = pgzero::line_bundles(bd);
  pgzero::BidoubleData out = bd;
  for (auto& c : out.components) {
    if (c.branch == 0) continue;
    for (int i = 0; i < 3; ++i)
      if (sigma[i] == c.branch) {
        c.branch = i + 1;
        break;
      }
  }
  out.L1 = L[sigma[0] - 1];
  out.L2 = L[sigma[1] - 1];
  return out;
}

/// Apply a point permutation coming from a projectivity of the configuration.
inline pgzero::Construction relabel_points(const pgzero::Construction& c, const std::vector<std::size_t>& pi) {
  pgzero::Construction out = c;
  for (auto& comp : out.data.components) comp.cls = comp.cls.permuted(pi);
  out.data.L1 = c.data.L1.permuted(pi);
  out.data.L2 = c.data.L2.permuted(pi);
  out.pencil = c.pencil.permuted(pi);
  return out;
}

inline const std::vector<std::array<int, 3>>& s3() {
  static const std::vector<std::array<int, 3>> all{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  return all;
}

}  // namespace perturb
