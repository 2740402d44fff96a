#pragma once

// Divisor-class arithmetic on the Picard lattice of P^2 blown up at n
// distinct points.  A class is written d*l - sum m_i e_i and stored as the
// integer vector (d; m_1, ..., m_n).  Pairing: l.l = 1, e_i.e_i = -1, all
// mixed products 0.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgzero {

/// Raised when two classes from lattices of different rank are combined.
class lattice_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::int64_t degree, std::vector<std::int64_t> mults)
      : degree_(degree), mults_(std::move(mults)) {}
  DivisorClass(std::int64_t degree, std::initializer_list<std::int64_t> mults)
      : degree_(degree), mults_(mults) {}

  static DivisorClass zero(std::size_t n) { return {0, std::vector<std::int64_t>(n, 0)}; }
  static DivisorClass line(std::size_t n) { return {1, std::vector<std::int64_t>(n, 0)}; }
  /// e_i, 1-based: stored multiplicity -1 so that the class is +e_i.
  static DivisorClass exceptional(std::size_t n, std::size_t i);
  /// K = -3l + e_1 + ... + e_n.
  static DivisorClass canonical(std::size_t n);
  /// Inverse of coefficients(): [d, m1, ..., mn].
  static DivisorClass from_coefficients(std::span<const std::int64_t> coeffs);

  std::int64_t degree() const { return degree_; }
  std::span<const std::int64_t> mults() const { return mults_; }
  /// Multiplicity m_i, 1-based.
  std::int64_t mult(std::size_t i) const { return mults_.at(i - 1); }
  /// Number of exceptional classes of the ambient lattice.
  std::size_t points() const { return mults_.size(); }

  /// [d, m1, ..., mn], the serialized form.
  std::vector<std::int64_t> coefficients() const;

  /// Pull back along a blowup at `extra` further points (new mults are 0).
  DivisorClass lifted(std::size_t extra = 1) const;
  /// Relabel points: result has mult at position sigma[i] equal to mult i (0-based).
  DivisorClass permuted(std::span<const std::size_t> sigma) const;

  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// Human-readable form, e.g. "5l-e1-2e2-e3".
  std::string to_string() const;

 private:
  std::int64_t degree_ = 0;
  std::vector<std::int64_t> mults_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

/// The lattice Z l + Z e_1 + ... + Z e_n.
class BlowupLattice {
 public:
  explicit BlowupLattice(std::size_t n) : n_(n) {}

  std::size_t points() const { return n_; }
  std::size_t rank() const { return n_ + 1; }

  DivisorClass line() const { return DivisorClass::line(n_); }
  DivisorClass exceptional(std::size_t i) const { return DivisorClass::exceptional(n_, i); }
  DivisorClass canonical() const { return DivisorClass::canonical(n_); }
  DivisorClass zero() const { return DivisorClass::zero(n_); }

  /// Blow up one more point; classes move over with DivisorClass::lifted.
  BlowupLattice blow_up() const { return BlowupLattice(n_ + 1); }
  DivisorClass lift(const DivisorClass& d) const;

  bool contains(const DivisorClass& d) const { return d.points() == n_; }

  friend bool operator==(const BlowupLattice&, const BlowupLattice&) = default;

 private:
  std::size_t n_;
};

/// Intersection number d_a d_b - sum m_i m'_i.
std::int64_t pair(const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DivisorClass& d) { return pair(d, d); }

/// p_a(D) = D.(D+K)/2 + 1.
std::int64_t arithmetic_genus(const DivisorClass& d);
/// Same formula from the two intersection numbers D^2 and K.D.
std::int64_t arithmetic_genus(std::int64_t self_int, std::int64_t canonical_degree);

/// chi(O(D)) = chi_O + D.(D-K)/2; chi_O = 1 for rational surfaces.
std::int64_t riemann_roch_chi(const DivisorClass& d, std::int64_t chi_structure = 1);

/// Image in Pic/2Pic, bit 0 is the l-coefficient.
boost::dynamic_bitset<> mod2(const DivisorClass& d);

/// Classical Castelnuovo bound for the genus of an irreducible
/// non-degenerate curve of degree d in P^r (r >= 3).
std::int64_t castelnuovo_bound(std::int64_t degree, std::int64_t ambient_dim);

}  // namespace pgzero
