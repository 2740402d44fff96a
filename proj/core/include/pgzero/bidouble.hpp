#pragma once

// Z_2^2-covers X -> Y of a blown-up plane given by building data
// (D1, D2, D3, L1, L2) with 2L1 = D2 + D3 and 2L2 = D1 + D3.

#include "pgzero/pic_lattice.hpp"
#include "pgzero/plane_geometry.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgzero {

struct BranchComponent {
  std::string name;
  DivisorClass cls;
  /// 1..3 for a component of D_i; 0 for an unbranched curve that is only
  /// registered so fibre searches can see it.
  int branch = 0;
};

enum class Provenance { Given, Derived };

struct BidoubleData {
  std::size_t points = 0;
  std::vector<BranchComponent> components;
  DivisorClass L1;
  DivisorClass L2;
  Provenance line_bundles = Provenance::Given;

  BlowupLattice lattice() const { return BlowupLattice(points); }
  /// Class of D_i, i in 1..3.
  DivisorClass branch_class(int i) const;
  /// D = D1 + D2 + D3.
  DivisorClass total_branch() const;
  const BranchComponent* find(const std::string& name) const;
};

/// Structurally invalid input (duplicate components, wrong lattice, ...).
class invalid_building_data : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of the two fundamental relations fails; `residue` is 2L_i minus the
/// required sum of branch divisors.
class relation_failure : public std::runtime_error {
 public:
  relation_failure(int which, DivisorClass residue);
  int which() const { return which_; }
  const DivisorClass& residue() const { return residue_; }

 private:
  int which_;
  DivisorClass residue_;
};

/// Computed invariants disagree with each other (e.g. P2 bookkeeping).
class inconsistent_data : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Validation {
  DivisorClass L3;
  /// Non-fatal findings, e.g. two components of one D_i that meet.
  std::vector<std::string> diagnostics;
};

/// Checks both relations exactly and returns L3 = L1 + L2 - D3.
Validation validate(const BidoubleData& bd);

/// L1 = (D2+D3)/2, L2 = (D1+D3)/2; unique because the lattice is torsion free.
BidoubleData derive_line_bundles(BidoubleData bd);

/// L1, L2, L3 in that order.
std::array<DivisorClass, 3> line_bundles(const BidoubleData& bd);

struct BranchPreimage {
  /// Number of points of Gamma on the other branch divisors: Gamma . 2L_i.
  std::int64_t branch_degree = 0;
  bool split = false;
  /// 2 when split, else 1.
  std::int64_t curves = 1;
  std::int64_t genus = 0;
  /// Self-intersection of each preimage curve.
  std::int64_t self_intersection = 0;
  /// How many of the preimage curves are (-1)-curves.
  std::int64_t contractible = 0;
};

/// Preimage of a smooth rational component of D_i.
BranchPreimage branch_preimage(const DivisorClass& component, int branch, const BidoubleData& bd);

/// Sum of BranchPreimage::contractible over all branch components.
std::int64_t contraction_count(const BidoubleData& bd);

/// 2K_Y + D; the bicanonical class of X is its pullback.
DivisorClass bicanonical_class(const BidoubleData& bd);

/// Catalogue of the configuration plus the negative branch components.
CurveCatalogue cover_catalogue(const BidoubleData& bd, const PointConfiguration& cfg);

struct CoverInvariants {
  std::int64_t chi = 0;
  std::int64_t K2_cover = 0;
  std::int64_t pg = 0;
  std::int64_t q = 0;
  /// h^0(K_Y + L_i), i = 1..3
  std::array<std::int64_t, 3> adjoint_h0{};
};

/// chi = 4 + sum L_i(L_i+K)/2, K_X^2 = (2K_Y+D)^2, p_g = sum h^0(K_Y+L_i).
CoverInvariants bidouble_invariants(const BidoubleData& bd, const PointConfiguration& cfg);

/// Blow up the configuration's general point P, through which exactly one
/// component of each D_i passes (named in `through_point`).
BidoubleData resolve_111(const BidoubleData& bd, const PointConfiguration& cfg,
                         std::span<const std::string> through_point);

struct FibreComponent {
  std::string name;
  DivisorClass cls;
  std::int64_t multiplicity = 1;
  /// 0 when the curve is not in the branch locus.
  int branch = 0;
};

/// 2 iff the pullback of the member is divisible by 2: each component is
/// branched or appears with even multiplicity.
int fibre_multiplicity(std::span<const FibreComponent> member, const DivisorClass& pencil);

struct FibreMember {
  std::vector<FibreComponent> components;
  int multiplicity = 1;
};

struct FibreCount {
  std::size_t double_fibres = 0;
  std::vector<FibreMember> members;
  /// Completeness boundary of the decomposition search.
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultFibreDepth = 12;

/// Special members of the pencil: branch components of the pencil class and
/// every decomposition into curves orthogonal to the pencil.
FibreCount count_double_fibres(const BidoubleData& bd, const DivisorClass& pencil, const PointConfiguration& cfg,
                               std::size_t depth = kDefaultFibreDepth);

struct BicanonicalDecomposition {
  std::int64_t invariant = 0;
  std::array<std::int64_t, 3> character{};
  std::int64_t total = 0;
  std::int64_t degree = 0;
  /// i when the map is composed with gamma_i; 0 otherwise.
  int involution = 0;
};

/// H^0(2K_X) = H^0(M) + sum_i H^0(M - L_i), M = 2K_Y + D; throws
/// inconsistent_data when the total is not chi + K^2 of the minimal model.
BicanonicalDecomposition bicanonical_decomposition(const BidoubleData& bd, const PointConfiguration& cfg);

struct InvariantReport {
  std::int64_t chi = 0;
  std::int64_t K2_cover = 0;
  std::int64_t pg = 0;
  std::int64_t q = 0;
  std::int64_t contractions = 0;
  std::int64_t K2_minimal = 0;
  std::int64_t P2 = 0;
  std::int64_t double_fibres = 0;
  std::int64_t bicanonical_degree = 0;
  int involution_index = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// validate, invariants, contractions, fibres over `pencil`, bicanonical decomposition.
InvariantReport analyze(const BidoubleData& bd, const PointConfiguration& cfg, const DivisorClass& pencil,
                        std::size_t depth = kDefaultFibreDepth);

}  // namespace pgzero
