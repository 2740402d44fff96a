#pragma once

// Binary codes of disjoint nodal classes: V = ker(F_2^k -> Pic/2Pic).

#include "pgzero/pic_lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace pgzero {

using BitRow = boost::dynamic_bitset<>;

/// Raised when an input is not a set of pairwise disjoint nodal classes.
class not_nodal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when enumeration would exceed the dimension cap.
class dimension_cap_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kEnumerationCap = 20;

class BinaryCode {
 public:
  /// Row-reduces `rows` (all of length `length`), dropping dependent rows.
  BinaryCode(std::size_t length, std::vector<BitRow> rows);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return generators_.size(); }
  /// Reduced row echelon generators.
  std::span<const BitRow> generators() const { return generators_; }

  bool contains(const BitRow& v) const;
  /// All 2^dim elements; throws dimension_cap_exceeded past kEnumerationCap.
  std::vector<BitRow> elements() const;
  /// Coordinates that are nonzero in some element (the curves "appearing" in V).
  std::size_t support_size() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::size_t length_;
  std::vector<BitRow> generators_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a set of F_2 rows.
std::size_t rank_f2(std::vector<BitRow> rows);

/// Throws not_nodal unless every class has C^2 = -2, K.C = 0 and the
/// classes are pairwise orthogonal.
void require_disjoint_nodal(std::span<const DivisorClass> classes);

/// Kernel of (x_1..x_k) -> sum x_i [C_i] in Pic/2Pic.
BinaryCode code_of_classes(std::span<const DivisorClass> classes);
/// dim of the image of the same map.
std::size_t image_dimension(std::span<const DivisorClass> classes);

/// Weight -> number of codewords of that weight.
std::map<std::size_t, std::size_t> weights(const BinaryCode& code);
bool is_doubly_even(const BinaryCode& code);
/// Weights of `count` seeded random codewords; usable for any dimension.
std::vector<std::size_t> sample_weights(const BinaryCode& code, std::size_t count, std::uint64_t seed);

/// DE(s): the even-weight code of length s with every coordinate doubled.
BinaryCode de_code(std::size_t s);

struct IsotropyBound {
  std::size_t twice_image_dim = 0;  // 2 * dim Im(psi)
  std::size_t ambient_rank = 0;     // rank of Pic/2Pic
  bool holds = false;
};

/// 2 (k - dim V) <= 1 + n for nodal classes on the n-point blowup.
IsotropyBound isotropy_bound_holds(std::span<const DivisorClass> classes);
/// Same inequality for arbitrary image vectors in F_2^ambient_rank; no
/// geometric validation, so synthetic violations can be exercised.
IsotropyBound isotropy_bound_holds(std::span<const BitRow> images, std::size_t ambient_rank);

}  // namespace pgzero
