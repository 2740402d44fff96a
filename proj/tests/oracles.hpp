#pragma once

// Reference computations kept apart from the library: plain loops, rational
// Gauss-Jordan, brute-force enumeration.  Slow but obviously right.

#include "pgzero/pic_lattice.hpp"
#include "pgzero/plane_geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Coeffs = std::vector<std::int64_t>;

inline std::int64_t dot(const Coeffs& a, const Coeffs& b) {
  std::int64_t s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

inline Coeffs canonical(std::size_t n) {
  Coeffs k(n + 1, -1);
  k[0] = -3;
  return k;
}

inline std::size_t rank_q(std::vector<std::vector<cpp_int>> rows) {
  std::vector<std::vector<cpp_rational>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline cpp_int falling(std::int64_t a, std::int64_t i) {
  cpp_int r = 1;
  for (std::int64_t t = 0; t < i; ++t) r *= (a - t);
  return r;
}

inline cpp_int power(const cpp_int& x, std::int64_t e) {
  cpp_int r = 1;
  for (std::int64_t t = 0; t < e; ++t) r *= x;
  return r;
}

/// h0 of degree-d forms vanishing to order m_i at p_i, imposing every
/// partial derivative of order < m_i (not just order m_i - 1).
inline std::int64_t h0_fat(const std::vector<pgzero::PlanePoint>& pts, std::int64_t d, const Coeffs& mults) {
  if (d < 0) return 0;
  std::vector<std::array<std::int64_t, 3>> monos;
  for (std::int64_t a = d; a >= 0; --a)
    for (std::int64_t b = d - a; b >= 0; --b) monos.push_back({a, b, d - a - b});
  std::vector<std::vector<cpp_int>> rows;
  for (std::size_t p = 0; p < mults.size(); ++p) {
    const auto m = mults[p];
    if (m <= 0) continue;
    if (m > d) return 0;
    const auto& c = pts[p].coords;
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; i + j < m; ++j)
        for (std::int64_t k = 0; i + j + k < m; ++k) {
          std::vector<cpp_int> row;
          for (const auto& mo : monos) {
            if (mo[0] < i || mo[1] < j || mo[2] < k) {
              row.push_back(0);
              continue;
            }
            row.push_back(falling(mo[0], i) * falling(mo[1], j) * falling(mo[2], k) * power(c[0], mo[0] - i) *
                          power(c[1], mo[1] - j) * power(c[2], mo[2] - k));
          }
          rows.push_back(std::move(row));
        }
  }
  return static_cast<std::int64_t>(monos.size()) - static_cast<std::int64_t>(rank_q(std::move(rows)));
}

/// (-1)-classes (E^2 = -1, K.E = -1) on the n-point blowup, by brute force.
inline std::vector<Coeffs> minus_one_classes(std::size_t n) {
  std::vector<Coeffs> out;
  const auto K = canonical(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Coeffs e(n + 1, 0);
    e[i] = -1;
    out.push_back(e);
  }
  Coeffs c(n + 1, 0);
  for (std::int64_t d = 1; d <= 6; ++d) {
    c[0] = d;
    std::fill(c.begin() + 1, c.end(), 0);
    while (true) {
      if (dot(c, c) == -1 && dot(K, c) == -1) out.push_back(c);
      std::size_t k = 1;
      while (k <= n && c[k] == 3) c[k++] = 0;
      if (k > n) break;
      ++c[k];
    }
  }
  return out;
}

/// Dimension of |D| for points in general position (at most 8 of them):
/// strip (-1)-curves E with D.E < 0, then the residual class is either not
/// effective or nef with h0 = chi.
inline std::int64_t corrected_dimension(Coeffs D) {
  const std::size_t n = D.size() - 1;
  static std::map<std::size_t, std::vector<Coeffs>> cache;
  if (!cache.count(n)) cache[n] = minus_one_classes(n);
  const auto& curves = cache[n];
  const auto K = canonical(n);
  while (true) {
    if (std::all_of(D.begin(), D.end(), [](std::int64_t v) { return v == 0; })) return 1;
    if (-dot(K, D) <= 0) return 0;
    bool stripped = false;
    for (const auto& E : curves) {
      if (dot(D, E) < 0) {
        for (std::size_t i = 0; i <= n; ++i) D[i] -= E[i];
        stripped = true;
        break;
      }
    }
    if (stripped) continue;
    if (D[0] < 0) return 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (D[0] - D[i] < 0) return 0;  // D.(l - e_i) with l - e_i nef
    return 1 + (dot(D, D) - dot(D, K)) / 2;
  }
}

/// max(0, forms - conditions).
inline std::int64_t naive_dimension(std::int64_t d, const Coeffs& mults) {
  std::int64_t v = (d + 1) * (d + 2) / 2;
  for (auto m : mults) v -= m * (m + 1) / 2;
  return std::max<std::int64_t>(0, v);
}

inline cpp_int det(std::vector<std::vector<cpp_int>> m) {
  std::vector<std::vector<cpp_rational>> a;
  for (auto& r : m) a.emplace_back(r.begin(), r.end());
  const std::size_t n = a.size();
  cpp_rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const cpp_rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return boost::multiprecision::numerator(d);
}

/// No 3 on a line, no 6 on a conic, no 8 on a cubic singular at one of them.
inline bool general_position(const std::vector<pgzero::PlanePoint>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (pgzero::det3(pts[a], pts[b], pts[c]) == 0) return false;
  if (n >= 6) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + 6, true);
    do {
      std::vector<pgzero::PlanePoint> six;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) six.push_back(pts[i]);
      if (h0_fat(six, 2, Coeffs(6, 1)) != 0) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (n == 8) {
    for (std::size_t s = 0; s < 8; ++s) {
      Coeffs m(8, 1);
      m[s] = 2;
      if (h0_fat(pts, 3, m) != 0) return false;
    }
  }
  return true;
}

inline std::vector<pgzero::PlanePoint> random_general_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-12, 12);
  while (true) {
    std::vector<pgzero::PlanePoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
      int x = coord(rng), y = coord(rng), z = coord(rng);
      if (x == 0 && y == 0 && z == 0) z = 1;
      pts.emplace_back(x, y, z);
    }
    if (general_position(pts)) return pts;
  }
}

/// Subsets (as bitmasks) of the classes whose sum is divisible by 2.
inline std::vector<std::uint32_t> kernel_masks(const std::vector<pgzero::DivisorClass>& classes) {
  std::vector<std::uint32_t> out;
  const std::size_t k = classes.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    auto sum = classes.front().coefficients();
    std::fill(sum.begin(), sum.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) {
        const auto c = classes[i].coefficients();
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += c[t];
      }
    if (std::all_of(sum.begin(), sum.end(), [](std::int64_t v) { return v % 2 == 0; })) out.push_back(mask);
  }
  return out;
}

/// chi of the Z_2^2-cover as chi(O) + sum chi(-L_i).
inline std::int64_t bidouble_chi(const std::vector<pgzero::DivisorClass>& L) {
  std::int64_t s = 1;
  for (const auto& Li : L) s += pgzero::riemann_roch_chi(-Li);
  return s;
}

}  // namespace oracle
