#include "pgzero/nodal_codes.hpp"

#include <random>
#include <string>

namespace pgzero {

namespace {

/// Reduced row echelon form over F_2; returns pivot columns.
std::vector<std::size_t> rref(std::vector<BitRow>& rows, std::size_t length) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < length && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

BinaryCode::BinaryCode(std::size_t length, std::vector<BitRow> rows) : length_(length) {
  for (const auto& row : rows)
    if (row.size() != length) throw std::invalid_argument("generator length differs from code length");
  pivots_ = rref(rows, length);
  generators_ = std::move(rows);
}

bool BinaryCode::contains(const BitRow& v) const {
  if (v.size() != length_) return false;
  BitRow rest = v;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (rest[pivots_[i]]) rest ^= generators_[i];
  return rest.none();
}

std::vector<BitRow> BinaryCode::elements() const {
  if (dimension() > kEnumerationCap)
    throw dimension_cap_exceeded("code dimension " + std::to_string(dimension()) + " exceeds enumeration cap");
  std::vector<BitRow> out;
  out.reserve(std::size_t{1} << dimension());
  // Gray-code walk: each step flips one generator.
  BitRow cur(length_);
  out.push_back(cur);
  for (std::size_t i = 1; i < (std::size_t{1} << dimension()); ++i) {
    const auto flip = static_cast<std::size_t>(__builtin_ctzll(i));
    cur ^= generators_[flip];
    out.push_back(cur);
  }
  return out;
}

std::size_t BinaryCode::support_size() const {
  BitRow any(length_);
  for (const auto& g : generators_) any |= g;
  return any.count();
}

std::size_t rank_f2(std::vector<BitRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t length = rows.front().size();
  return rref(rows, length).size();
}

void require_disjoint_nodal(std::span<const DivisorClass> classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const auto k = DivisorClass::canonical(c.points());
    if (self_intersection(c) != -2 || pair(k, c) != 0)
      throw not_nodal("class " + std::to_string(i + 1) + " (" + c.to_string() + ") is not a nodal class");
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (pair(c, classes[j]) != 0)
        throw not_nodal("classes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " meet");
  }
}

namespace {

/// Columns of psi as rows: the mod-2 image of each class.
std::vector<BitRow> images(std::span<const DivisorClass> classes) {
  std::vector<BitRow> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(mod2(c));
  return out;
}

}  // namespace

BinaryCode code_of_classes(std::span<const DivisorClass> classes) {
  require_disjoint_nodal(classes);
  const std::size_t k = classes.size();
  if (k == 0) return BinaryCode(0, {});
  // Kernel of psi via elimination on [image | identity].
  const std::size_t rank = classes.front().points() + 1;
  std::vector<BitRow> aug;
  for (std::size_t i = 0; i < k; ++i) {
    BitRow row(rank + k);
    const auto img = mod2(classes[i]);
    for (std::size_t b = 0; b < rank; ++b) row[b] = img[b];
    row[rank + i] = true;
    aug.push_back(std::move(row));
  }
  rref(aug, rank + k);
  std::vector<BitRow> kernel;
  for (const auto& row : aug) {
    bool left_zero = true;
    for (std::size_t b = 0; b < rank && left_zero; ++b) left_zero = !row[b];
    if (!left_zero) continue;
    BitRow v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = row[rank + i];
    kernel.push_back(std::move(v));
  }
  return BinaryCode(k, std::move(kernel));
}

std::size_t image_dimension(std::span<const DivisorClass> classes) {
  require_disjoint_nodal(classes);
  return rank_f2(images(classes));
}

std::map<std::size_t, std::size_t> weights(const BinaryCode& code) {
  std::map<std::size_t, std::size_t> dist;
  for (const auto& v : code.elements()) ++dist[v.count()];
  return dist;
}

bool is_doubly_even(const BinaryCode& code) {
  for (const auto& [w, count] : weights(code))
    if (w % 4 != 0) return false;
  return true;
}

std::vector<std::size_t> sample_weights(const BinaryCode& code, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    BitRow v(code.length());
    for (const auto& g : code.generators())
      if (coin(rng)) v ^= g;
    out.push_back(v.count());
  }
  return out;
}

BinaryCode de_code(std::size_t s) {
  if (s == 0) throw std::invalid_argument("DE(s) needs s >= 1");
  // Even-weight code of length s is spanned by e_1 + e_i, i = 2..s.
  std::vector<BitRow> rows;
  for (std::size_t i = 1; i < s; ++i) {
    BitRow row(2 * s);
    row[0] = row[1] = true;
    row[2 * i] = row[2 * i + 1] = true;
    rows.push_back(std::move(row));
  }
  return BinaryCode(2 * s, std::move(rows));
}

IsotropyBound isotropy_bound_holds(std::span<const DivisorClass> classes) {
  if (classes.empty()) return {0, 0, true};
  const std::size_t ambient = classes.front().points() + 1;
  const auto code = code_of_classes(classes);
  IsotropyBound out;
  out.twice_image_dim = 2 * (classes.size() - code.dimension());
  out.ambient_rank = ambient;
  out.holds = out.twice_image_dim <= out.ambient_rank;
  return out;
}

IsotropyBound isotropy_bound_holds(std::span<const BitRow> imgs, std::size_t ambient_rank) {
  for (const auto& v : imgs)
    if (v.size() != ambient_rank) throw std::invalid_argument("image vector length differs from ambient rank");
  IsotropyBound out;
  out.twice_image_dim = 2 * rank_f2(std::vector<BitRow>(imgs.begin(), imgs.end()));
  out.ambient_rank = ambient_rank;
  out.holds = out.twice_image_dim <= out.ambient_rank;
  return out;
}

}  // namespace pgzero
