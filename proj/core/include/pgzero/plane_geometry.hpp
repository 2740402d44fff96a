#pragma once

// Explicit point configurations in P^2, exact fat-point interpolation, the
// catalogue of named curves on the quadrilateral blowups, and a bounded
// search for effective decompositions of a class.

#include "pgzero/pic_lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgzero {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultSeed = 20011977;

/// Homogeneous coordinates, stored as a primitive integer triple.
struct PlanePoint {
  std::array<BigInt, 3> coords;

  PlanePoint() = default;
  PlanePoint(BigInt x, BigInt y, BigInt z);
  static PlanePoint from_rational(const Rational& x, const Rational& y, const Rational& z);

  /// Same point of P^2 (proportional coordinates).
  bool same_as(const PlanePoint& other) const;
  std::string to_string() const;
};

BigInt det3(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);
inline bool collinear(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return det3(a, b, c) == 0;
}

/// Raised when a configuration's recorded incidences do not match its coordinates.
class incidence_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PointConfiguration {
  std::vector<PlanePoint> points;
  /// 1-based, each sorted ascending.
  std::vector<std::array<std::size_t, 3>> collinear_triples;
  /// 1-based index of P7 = Delta2 ∩ Delta3 when present.
  std::optional<std::size_t> p7;
  /// 1-based index of the general point when present.
  std::optional<std::size_t> general_point;

  std::size_t size() const { return points.size(); }
  BlowupLattice lattice() const { return BlowupLattice(points.size()); }
  const PlanePoint& point(std::size_t i) const { return points.at(i - 1); }

  /// Every triple is collinear iff it is recorded; throws incidence_error otherwise.
  void verify_incidences() const;
};

/// P1=(1:0:0), P2=(0:1:0), P3=(0:0:1), P4=(1:1:1), P5=(1:1:0), P6=(0:1:1),
/// optionally P7=(1:2:1), optionally a seeded general point appended last.
PointConfiguration standard_quadrilateral(bool with_p7, bool with_general_point,
                                          std::uint64_t seed = kDefaultSeed);

/// Projectivities of P^2 permuting the configuration's points, as 0-based
/// permutations sigma (point i goes to point sigma[i]).
std::vector<std::vector<std::size_t>> configuration_symmetries(const PointConfiguration& cfg);

// ---------------------------------------------------------------------------
// Curve catalogue

struct CatalogueEntry {
  std::string name;
  DivisorClass cls;
  std::int64_t self_intersection = 0;
  /// Degree of the plane curve; 0 for exceptional curves.
  int plane_degree = 0;
  /// 1-based configuration points the plane curve passes through.
  std::vector<std::size_t> through;
  /// General member of a base-point-free pencil rather than a rigid curve.
  bool moving = false;
};

class CurveCatalogue {
 public:
  CurveCatalogue() = default;
  explicit CurveCatalogue(std::vector<CatalogueEntry> entries) : entries_(std::move(entries)) {}

  std::span<const CatalogueEntry> entries() const { return entries_; }
  const CatalogueEntry* find(const std::string& name) const;
  const CatalogueEntry& at(const std::string& name) const;
  DivisorClass cls(const std::string& name) const { return at(name).cls; }
  /// Rigid curve with exactly this class, if catalogued.
  const CatalogueEntry* rigid_with_class(const DivisorClass& d) const;

 private:
  std::vector<CatalogueEntry> entries_;
};

/// e_i, S1..S4 (sides P1P2, P2P3, P3P4, P4P1), Delta1..Delta3 (lines P1P3,
/// P2P4, P5P6; suffix "bar" when the line also passes through P7) and the
/// conic pencils f1 (P2P4P5P6), f2 (P1P3P5P6), f3 (P1P2P3P4).
CurveCatalogue quadrilateral_catalogue(const PointConfiguration& cfg);

// ---------------------------------------------------------------------------
// Fat points

struct FatPointSystem {
  std::int64_t degree = 0;
  /// (1-based point index, multiplicity >= 1)
  std::vector<std::pair<std::size_t, std::int64_t>> assignments;
};

/// Rows: all partial derivatives of order m-1 of the degree-d monomials at
/// each assigned point; columns: monomials x^a y^b z^c, a+b+c = d.
std::vector<std::vector<BigInt>> constraint_matrix(const PointConfiguration& cfg,
                                                   const FatPointSystem& sys);

/// Rank over Q of an integer matrix (fraction-free elimination).
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

/// Dimension of the space of degree-d forms with the assigned multiplicities.
std::int64_t h0_fat_points(const PointConfiguration& cfg, const FatPointSystem& sys);

/// Degree d and multiplicity m_i at P_i; rejects negative multiplicities.
FatPointSystem class_to_system(const PointConfiguration& cfg, const DivisorClass& d);

/// Raised when fixed-part removal exceeds its iteration budget.
class catalogue_gap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h^0 of a class on the blowup: strips fixed negative curves of the
/// catalogue, then interpolates.
std::int64_t h0_class(const PointConfiguration& cfg, const CurveCatalogue& catalogue,
                      const DivisorClass& d);
std::int64_t h0_class(const PointConfiguration& cfg, const DivisorClass& d);

// ---------------------------------------------------------------------------
// Effective decompositions

struct NamedClass {
  std::string name;
  DivisorClass cls;
};

/// (name, multiplicity) pairs in the order the pieces were supplied.
using Decomposition = std::vector<std::pair<std::string, std::int64_t>>;

/// All non-negative integer combinations of `pieces` equal to `target` with
/// at most `depth` components counted with multiplicity.
std::vector<Decomposition> effective_decompositions(const DivisorClass& target,
                                                    std::span<const NamedClass> pieces,
                                                    std::size_t depth);
std::vector<Decomposition> effective_decompositions(const DivisorClass& target,
                                                    const CurveCatalogue& catalogue,
                                                    std::size_t depth);

/// Catalogue entries as plain named classes.
std::vector<NamedClass> named_classes(const CurveCatalogue& catalogue);

}  // namespace pgzero
