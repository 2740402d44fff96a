#pragma once

// Numerical invariants of double covers and the accompanying inequalities.

#include "pgzero/pic_lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pgzero {

/// chi(O_X) of the flat double cover given by 2L = B: 2 chi(O_Y) + L(L+K)/2.
std::int64_t double_cover_chi(const DivisorClass& L, std::int64_t chi_base = 1);
std::int64_t double_cover_chi(std::int64_t L_squared, std::int64_t K_dot_L, std::int64_t chi_base = 1);

/// Intersection numbers forced on the quotient Y of a surface with chi = 1
/// by its bicanonical involution, when 2L = B0 + C_1 + ... + C_k with
/// disjoint nodal C_i and B0 disjoint from them:
///   L^2 + K L = -2,  K^2 + K L = 0,  K B0 = 2 K L,  4 L^2 = B0^2 - 2k.
struct NumeriIdentities {
  std::int64_t K_dot_L = 0;
  std::int64_t L_squared = 0;
  std::int64_t K_dot_B0 = 0;
  std::int64_t B0_squared = 0;
};
NumeriIdentities numeri_identities(std::int64_t K2_base, std::size_t nodes = 10);

struct ChiK2 {
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  friend bool operator==(const ChiK2&, const ChiK2&) = default;
};
/// Invariants of an unramified double cover.
ChiK2 etale_double(std::int64_t chi, std::int64_t K2);

struct SlopeCheck {
  bool holds = false;
  std::int64_t lhs = 0;  // K^2
  std::int64_t rhs = 0;  // 8 (g(C)-1)(g(F)-1)
  std::int64_t margin = 0;
};
/// K^2 >= 8 (g(C)-1)(g(F)-1) for a fibration of genus g(F) over a curve of genus g(C).
SlopeCheck slope_check(std::int64_t K2, std::int64_t genus_base, std::int64_t genus_fibre);

/// (deg phi, deg image) for a non-birational bicanonical morphism of a
/// surface with p_g = q = 0: deg phi * deg image = 4 K^2, deg phi >= 2, and
/// the image is a non-degenerate surface in P^{K^2}, so deg image >= K^2 - 1.
std::vector<std::pair<std::int64_t, std::int64_t>> bicanonical_degree_pairs(std::int64_t K2);

/// K.H from adjunction for a smooth curve H of genus g.
inline std::int64_t canonical_degree_from_genus(std::int64_t self_int, std::int64_t genus) {
  return 2 * genus - 2 - self_int;
}

/// h^0(2K) = chi + K^2 for a minimal surface of general type.
inline std::int64_t bicanonical_h0(std::int64_t chi, std::int64_t K2) { return chi + K2; }

/// b_2 = 12 chi - K^2 - 2 when q = 0 (Noether).
inline std::int64_t second_betti(std::int64_t chi, std::int64_t K2) { return 12 * chi - K2 - 2; }

}  // namespace pgzero
