#include "pgzero/pic_lattice.hpp"

#include "checked.hpp"

#include <sstream>

namespace pgzero {

namespace {

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (a.points() != b.points()) {
    throw lattice_mismatch("classes live in lattices of rank " + std::to_string(a.points() + 1) +
                           " and " + std::to_string(b.points() + 1));
  }
}

}  // namespace

DivisorClass DivisorClass::exceptional(std::size_t n, std::size_t i) {
  if (i == 0 || i > n) throw std::out_of_range("exceptional index out of range");
  DivisorClass d = zero(n);
  d.mults_[i - 1] = -1;
  return d;
}

DivisorClass DivisorClass::canonical(std::size_t n) {
  return {-3, std::vector<std::int64_t>(n, -1)};
}

DivisorClass DivisorClass::from_coefficients(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("a class needs at least the degree coefficient");
  return {coeffs.front(), std::vector<std::int64_t>(coeffs.begin() + 1, coeffs.end())};
}

std::vector<std::int64_t> DivisorClass::coefficients() const {
  std::vector<std::int64_t> out;
  out.reserve(mults_.size() + 1);
  out.push_back(degree_);
  out.insert(out.end(), mults_.begin(), mults_.end());
  return out;
}

DivisorClass DivisorClass::lifted(std::size_t extra) const {
  DivisorClass d = *this;
  d.mults_.resize(mults_.size() + extra, 0);
  return d;
}

DivisorClass DivisorClass::permuted(std::span<const std::size_t> sigma) const {
  if (sigma.size() != mults_.size()) throw lattice_mismatch("permutation length differs from lattice");
  DivisorClass d = zero(mults_.size());
  d.degree_ = degree_;
  for (std::size_t i = 0; i < sigma.size(); ++i) d.mults_.at(sigma[i]) = mults_[i];
  return d;
}

bool DivisorClass::is_zero() const {
  if (degree_ != 0) return false;
  for (auto m : mults_)
    if (m != 0) return false;
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(*this, other);
  degree_ = detail::add(degree_, other.degree_);
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = detail::add(mults_[i], other.mults_[i]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(*this, other);
  degree_ = detail::sub(degree_, other.degree_);
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = detail::sub(mults_[i], other.mults_[i]);
  return *this;
}

DivisorClass DivisorClass::operator-() const { return zero(points()) - *this; }

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
  DivisorClass d = a;
  d.degree_ = detail::mul(k, a.degree_);
  for (auto& m : d.mults_) m = detail::mul(k, m);
  return d;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << sym;
    first = false;
  };
  term(degree_, "l");
  for (std::size_t i = 0; i < mults_.size(); ++i) term(-mults_[i], "e" + std::to_string(i + 1));
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << d.to_string(); }

DivisorClass BlowupLattice::lift(const DivisorClass& d) const {
  if (!contains(d)) throw lattice_mismatch("class does not belong to this lattice");
  return d.lifted(1);
}

std::int64_t pair(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  std::int64_t acc = detail::mul(a.degree(), b.degree());
  auto ma = a.mults();
  auto mb = b.mults();
  for (std::size_t i = 0; i < ma.size(); ++i) acc = detail::sub(acc, detail::mul(ma[i], mb[i]));
  return acc;
}

std::int64_t arithmetic_genus(const DivisorClass& d) {
  const auto k = DivisorClass::canonical(d.points());
  return arithmetic_genus(pair(d, d), pair(k, d));
}

std::int64_t arithmetic_genus(std::int64_t self_int, std::int64_t canonical_degree) {
  // D(D+K) is always even on a unimodular lattice with characteristic K.
  return detail::add(self_int, canonical_degree) / 2 + 1;
}

std::int64_t riemann_roch_chi(const DivisorClass& d, std::int64_t chi_structure) {
  const auto k = DivisorClass::canonical(d.points());
  return chi_structure + pair(d, d - k) / 2;
}

boost::dynamic_bitset<> mod2(const DivisorClass& d) {
  boost::dynamic_bitset<> bits(d.points() + 1);
  bits[0] = (d.degree() % 2) != 0;
  auto m = d.mults();
  for (std::size_t i = 0; i < m.size(); ++i) bits[i + 1] = (m[i] % 2) != 0;
  return bits;
}

std::int64_t castelnuovo_bound(std::int64_t degree, std::int64_t ambient_dim) {
  if (ambient_dim < 3) throw std::invalid_argument("Castelnuovo bound needs r >= 3");
  if (degree < 1) throw std::invalid_argument("Castelnuovo bound needs d >= 1");
  const std::int64_t m = (degree - 1) / (ambient_dim - 1);
  const std::int64_t eps = degree - 1 - m * (ambient_dim - 1);
  return detail::add(detail::mul(m * (m - 1) / 2, ambient_dim - 1), detail::mul(m, eps));
}

}  // namespace pgzero
