#include "pgzero/double_cover.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pgzero;

TEST(DoubleCover, ChiAgreesWithRiemannRoch) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> v(-6, 6);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 9;
    std::vector<std::int64_t> m(n);
    for (auto& x : m) x = v(rng);
    const DivisorClass L(v(rng), m);
    // chi(O_X) = chi(O_Y) + chi(-L)
    EXPECT_EQ(double_cover_chi(L), 1 + riemann_roch_chi(-L));
    EXPECT_EQ(double_cover_chi(L, 3), 3 + riemann_roch_chi(-L, 3));
  }
}

TEST(DoubleCover, NumeriIdentitiesAtMinusFour) {
  const auto id = numeri_identities(-4, 10);
  EXPECT_EQ(id.K_dot_L, 4);
  EXPECT_EQ(id.L_squared, -6);
  EXPECT_EQ(id.K_dot_B0, 8);
  EXPECT_EQ(id.B0_squared, -4);
  EXPECT_EQ(double_cover_chi(id.L_squared, id.K_dot_L), 1);
  const std::int64_t H2 = 4 * -4 + 4 * id.K_dot_B0 + id.B0_squared;
  const std::int64_t KH = 2 * -4 + id.K_dot_B0;
  EXPECT_EQ(H2, 12);
  EXPECT_EQ(KH, 0);
  EXPECT_EQ(arithmetic_genus(H2, KH), 7);
}

TEST(DoubleCover, NumeriIdentitiesAreConsistent) {
  for (std::int64_t K2 = -8; K2 <= 8; ++K2) {
    for (std::size_t k = 0; k <= 12; ++k) {
      const auto id = numeri_identities(K2, k);
      EXPECT_EQ(id.L_squared + id.K_dot_L, -2);
      EXPECT_EQ(K2 + id.K_dot_L, 0);
      EXPECT_EQ(id.K_dot_B0, 2 * id.K_dot_L);
      EXPECT_EQ(4 * id.L_squared, id.B0_squared - 2 * static_cast<std::int64_t>(k));
      EXPECT_EQ(double_cover_chi(id.L_squared, id.K_dot_L), 1);
    }
  }
}

TEST(DoubleCover, EtaleDouble) {
  EXPECT_EQ(etale_double(1, 6), (ChiK2{2, 12}));
  EXPECT_EQ(etale_double(3, 5), (ChiK2{6, 10}));
}

TEST(DoubleCover, SlopeCheck) {
  const auto a = slope_check(12, 2, 3);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.rhs, 16);
  EXPECT_EQ(a.margin, -4);
  const auto b = slope_check(24, 2, 3);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.margin, 8);
  EXPECT_TRUE(slope_check(16, 2, 3).holds);
  EXPECT_THROW(slope_check(12, 1, 3), std::invalid_argument);
  EXPECT_THROW(slope_check(12, 2, 1), std::invalid_argument);
}

TEST(DoubleCover, BicanonicalDegreePairs) {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  EXPECT_EQ(bicanonical_degree_pairs(6), (P{{2, 12}, {3, 8}, {4, 6}}));
  for (std::int64_t K2 = 2; K2 <= 9; ++K2)
    for (const auto& [d, s] : bicanonical_degree_pairs(K2)) {
      EXPECT_EQ(d * s, 4 * K2);
      EXPECT_GE(d, 2);
      EXPECT_GE(s, K2 - 1);
    }
}

TEST(DoubleCover, Helpers) {
  EXPECT_EQ(canonical_degree_from_genus(8, 3), -4);
  EXPECT_EQ(arithmetic_genus(8, canonical_degree_from_genus(8, 3)), 3);
  EXPECT_EQ(bicanonical_h0(1, 6), 7);
  EXPECT_EQ(second_betti(1, 6), 4);
}
