#include "pgzero/double_cover.hpp"

#include <stdexcept>

namespace pgzero {

std::int64_t double_cover_chi(const DivisorClass& L, std::int64_t chi_base) {
  const auto k = DivisorClass::canonical(L.points());
  return double_cover_chi(self_intersection(L), pair(k, L), chi_base);
}

std::int64_t double_cover_chi(std::int64_t L_squared, std::int64_t K_dot_L, std::int64_t chi_base) {
  return 2 * chi_base + (L_squared + K_dot_L) / 2;
}

NumeriIdentities numeri_identities(std::int64_t K2_base, std::size_t nodes) {
  NumeriIdentities out;
  out.K_dot_L = -K2_base;
  out.L_squared = -2 - out.K_dot_L;
  out.K_dot_B0 = 2 * out.K_dot_L;  // K.C_i = 0
  out.B0_squared = 4 * out.L_squared + 2 * static_cast<std::int64_t>(nodes);
  return out;
}

ChiK2 etale_double(std::int64_t chi, std::int64_t K2) { return {2 * chi, 2 * K2}; }

SlopeCheck slope_check(std::int64_t K2, std::int64_t genus_base, std::int64_t genus_fibre) {
  if (genus_base < 2 || genus_fibre < 2) throw std::invalid_argument("slope check needs genera >= 2");
  SlopeCheck out;
  out.lhs = K2;
  out.rhs = 8 * (genus_base - 1) * (genus_fibre - 1);
  out.margin = out.lhs - out.rhs;
  out.holds = out.margin >= 0;
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> bicanonical_degree_pairs(std::int64_t K2) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t total = 4 * K2;
  for (std::int64_t d = 2; d <= total; ++d) {
    if (total % d != 0) continue;
    const std::int64_t image = total / d;
    if (image >= K2 - 1) out.emplace_back(d, image);
  }
  return out;
}

}  // namespace pgzero
