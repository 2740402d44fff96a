#include "pgzero/plane_geometry.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pgzero {

namespace mp = boost::multiprecision;

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt gcd_big(const BigInt& a, const BigInt& b) { return mp::gcd(abs_big(a), abs_big(b)); }

using Matrix3 = std::array<std::array<BigInt, 3>, 3>;

Matrix3 adjugate(const Matrix3& m) {
  Matrix3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return adj;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c[i][j] = 0;
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PlanePoint apply(const Matrix3& m, const PlanePoint& p) {
  std::array<BigInt, 3> v;
  for (int i = 0; i < 3; ++i) {
    v[i] = 0;
    for (int k = 0; k < 3; ++k) v[i] += m[i][k] * p.coords[k];
  }
  return {v[0], v[1], v[2]};
}

/// Matrix sending e1, e2, e3, (1,1,1) to q0..q3 (up to scalars).
Matrix3 frame_map(const std::array<PlanePoint, 4>& q) {
  Matrix3 cols;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) cols[i][k] = q[k].coords[i];
  const Matrix3 adj = adjugate(cols);
  std::array<BigInt, 3> lambda;
  for (int k = 0; k < 3; ++k) {
    lambda[k] = 0;
    for (int j = 0; j < 3; ++j) lambda[k] += adj[k][j] * q[3].coords[j];
  }
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i][k] = cols[i][k] * lambda[k];
  return out;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  // Bareiss; exact division at every step.
  const std::size_t n = a.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::array<BigInt, 6> conic_row(const PlanePoint& p) {
  const auto& [x, y, z] = p.coords;
  return {x * x, y * y, z * z, x * y, x * z, y * z};
}

bool six_on_conic(const std::array<const PlanePoint*, 6>& pts) {
  std::vector<std::vector<BigInt>> m;
  for (auto* p : pts) {
    auto r = conic_row(*p);
    m.emplace_back(r.begin(), r.end());
  }
  return determinant(std::move(m)) == 0;
}

/// Coefficients of the conic through five points (kernel via signed minors).
std::array<BigInt, 6> conic_through(const std::array<const PlanePoint*, 5>& pts) {
  std::array<std::array<BigInt, 6>, 5> rows;
  for (int i = 0; i < 5; ++i) rows[i] = conic_row(*pts[i]);
  std::array<BigInt, 6> coeffs;
  for (int j = 0; j < 6; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (int i = 0; i < 5; ++i) {
      std::vector<BigInt> r;
      for (int c = 0; c < 6; ++c)
        if (c != j) r.push_back(rows[i][c]);
      minor.push_back(std::move(r));
    }
    coeffs[j] = (j % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
  }
  return coeffs;
}

std::array<BigInt, 3> conic_gradient(const std::array<BigInt, 6>& c, const PlanePoint& p) {
  const auto& [x, y, z] = p.coords;
  // c0 x^2 + c1 y^2 + c2 z^2 + c3 xy + c4 xz + c5 yz
  return {2 * c[0] * x + c[3] * y + c[4] * z, 2 * c[1] * y + c[3] * x + c[5] * z,
          2 * c[2] * z + c[4] * x + c[5] * y};
}

bool proportional(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
  return a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 &&
         a[0] * b[1] - a[1] * b[0] == 0;
}

/// Rejects candidates lying on a line through two configuration points, on a
/// conic through five of them, or where the three conic pencils through the
/// candidate fail to meet pairwise transversally.
bool is_general(const std::vector<PlanePoint>& pts, const PlanePoint& cand) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i].same_as(cand)) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (collinear(pts[i], pts[j], cand)) return false;
  }
  std::vector<bool> mask(n, false);
  if (n >= 5) {
    std::fill(mask.end() - 5, mask.end(), true);
    do {
      std::array<const PlanePoint*, 6> six{};
      int k = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) six[k++] = &pts[i];
      six[5] = &cand;
      if (six_on_conic(six)) return false;
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  if (n >= 6) {
    const std::array<std::array<std::size_t, 4>, 3> bases{{{1, 3, 4, 5}, {0, 2, 4, 5}, {0, 1, 2, 3}}};
    std::array<std::array<BigInt, 3>, 3> grads;
    for (int f = 0; f < 3; ++f) {
      std::array<const PlanePoint*, 5> five{};
      for (int k = 0; k < 4; ++k) five[k] = &pts[bases[f][k]];
      five[4] = &cand;
      grads[f] = conic_gradient(conic_through(five), cand);
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (proportional(grads[a], grads[b])) return false;
  }
  return true;
}

std::vector<std::array<std::int64_t, 3>> monomials(std::int64_t degree) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = degree; a >= 0; --a)
    for (std::int64_t b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  return out;
}

BigInt falling(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt power(const BigInt& base, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

PlanePoint::PlanePoint(BigInt x, BigInt y, BigInt z) : coords{std::move(x), std::move(y), std::move(z)} {
  BigInt g = gcd_big(gcd_big(coords[0], coords[1]), coords[2]);
  if (g == 0) throw std::invalid_argument("(0:0:0) is not a point of P^2");
  for (auto& c : coords) c /= g;
  for (const auto& c : coords) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : coords) d = -d;
    break;
  }
}

PlanePoint PlanePoint::from_rational(const Rational& x, const Rational& y, const Rational& z) {
  BigInt l = 1;
  for (const auto* r : {&x, &y, &z}) {
    BigInt den = mp::denominator(*r);
    l = l / gcd_big(l, den) * den;
  }
  auto scaled = [&](const Rational& r) { return BigInt(mp::numerator(r) * (l / mp::denominator(r))); };
  return {scaled(x), scaled(y), scaled(z)};
}

bool PlanePoint::same_as(const PlanePoint& other) const {
  // Both primitive with normalized sign.
  return coords == other.coords;
}

std::string PlanePoint::to_string() const {
  std::ostringstream os;
  os << '(' << coords[0] << ':' << coords[1] << ':' << coords[2] << ')';
  return os.str();
}

BigInt det3(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const auto& p = a.coords;
  const auto& q = b.coords;
  const auto& r = c.coords;
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

void PointConfiguration::verify_incidences() const {
  const std::size_t n = points.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (point(i).same_as(point(j)))
        throw incidence_error("P" + std::to_string(i) + " and P" + std::to_string(j) + " coincide");
      for (std::size_t k = j + 1; k <= n; ++k) {
        const bool recorded = std::find(collinear_triples.begin(), collinear_triples.end(),
                                        std::array<std::size_t, 3>{i, j, k}) != collinear_triples.end();
        const bool actual = collinear(point(i), point(j), point(k));
        if (recorded != actual) {
          throw incidence_error("triple {" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "} is " + (actual ? "" : "not ") +
                                "collinear, contrary to the recorded incidences");
        }
      }
    }
}

PointConfiguration standard_quadrilateral(bool with_p7, bool with_general_point, std::uint64_t seed) {
  PointConfiguration cfg;
  cfg.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1}};
  cfg.collinear_triples = {{1, 2, 5}, {3, 4, 5}, {2, 3, 6}, {1, 4, 6}};
  if (with_p7) {
    cfg.points.emplace_back(1, 2, 1);
    cfg.p7 = cfg.points.size();
    cfg.collinear_triples.push_back({5, 6, 7});
    cfg.collinear_triples.push_back({2, 4, 7});
  }
  if (with_general_point) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    for (;;) {
      const Rational x(num(rng), den(rng));
      const Rational y(num(rng), den(rng));
      auto cand = PlanePoint::from_rational(x, y, Rational(1));
      if (is_general(cfg.points, cand)) {
        cfg.points.push_back(std::move(cand));
        break;
      }
    }
    cfg.general_point = cfg.points.size();
  }
  std::sort(cfg.collinear_triples.begin(), cfg.collinear_triples.end());
  cfg.verify_incidences();
  return cfg;
}

std::vector<std::vector<std::size_t>> configuration_symmetries(const PointConfiguration& cfg) {
  const std::size_t n = cfg.size();
  if (n < 4 || collinear(cfg.points[0], cfg.points[1], cfg.points[2]) ||
      collinear(cfg.points[0], cfg.points[1], cfg.points[3]) ||
      collinear(cfg.points[0], cfg.points[2], cfg.points[3]) ||
      collinear(cfg.points[1], cfg.points[2], cfg.points[3])) {
    throw std::invalid_argument("symmetry search needs P1..P4 in general linear position");
  }
  const Matrix3 from_frame = frame_map({cfg.points[0], cfg.points[1], cfg.points[2], cfg.points[3]});
  const Matrix3 to_frame = adjugate(from_frame);

  std::vector<std::vector<std::size_t>> out;
  std::array<std::size_t, 4> head{0, 1, 2, 3};
  do {
    const Matrix3 t = multiply(
        frame_map({cfg.points[head[0]], cfg.points[head[1]], cfg.points[head[2]], cfg.points[head[3]]}),
        to_frame);
    std::vector<std::size_t> sigma(n, n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < 4; ++i) {
      sigma[i] = head[i];
      used[head[i]] = true;
    }
    bool ok = true;
    for (std::size_t i = 4; i < n && ok; ++i) {
      const PlanePoint image = apply(t, cfg.points[i]);
      ok = false;
      for (std::size_t j = 4; j < n; ++j) {
        if (!used[j] && cfg.points[j].same_as(image)) {
          sigma[i] = j;
          used[j] = true;
          ok = true;
          break;
        }
      }
    }
    if (ok) out.push_back(std::move(sigma));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

// ---------------------------------------------------------------------------

const CatalogueEntry* CurveCatalogue::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogueEntry& CurveCatalogue::at(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw std::out_of_range("no catalogued curve named " + name);
}

const CatalogueEntry* CurveCatalogue::rigid_with_class(const DivisorClass& d) const {
  for (const auto& e : entries_)
    if (!e.moving && e.cls == d) return &e;
  return nullptr;
}

CurveCatalogue quadrilateral_catalogue(const PointConfiguration& cfg) {
  const std::size_t n = cfg.size();
  if (n < 6) throw std::invalid_argument("quadrilateral catalogue needs P1..P6");
  std::vector<CatalogueEntry> entries;

  for (std::size_t i = 1; i <= n; ++i) {
    CatalogueEntry e;
    e.name = "e" + std::to_string(i);
    e.cls = DivisorClass::exceptional(n, i);
    e.self_intersection = -1;
    entries.push_back(std::move(e));
  }

  struct LineSpec {
    const char* name;
    std::size_t a, b;
  };
  const LineSpec lines[] = {{"S1", 1, 2}, {"S2", 2, 3}, {"S3", 3, 4},    {"S4", 4, 1},
                            {"Delta1", 1, 3}, {"Delta2", 2, 4}, {"Delta3", 5, 6}};
  for (const auto& spec : lines) {
    CatalogueEntry e;
    e.name = spec.name;
    e.plane_degree = 1;
    DivisorClass c = DivisorClass::line(n);
    for (std::size_t k = 1; k <= n; ++k) {
      if (k == spec.a || k == spec.b || collinear(cfg.point(spec.a), cfg.point(spec.b), cfg.point(k))) {
        e.through.push_back(k);
        c -= DivisorClass::exceptional(n, k);
      }
    }
    e.cls = c;
    e.self_intersection = self_intersection(c);
    if (cfg.p7 && std::find(e.through.begin(), e.through.end(), *cfg.p7) != e.through.end()) e.name += "bar";
    entries.push_back(std::move(e));
  }

  struct PencilSpec {
    const char* name;
    std::array<std::size_t, 4> base;
  };
  const PencilSpec pencils[] = {{"f1", {2, 4, 5, 6}}, {"f2", {1, 3, 5, 6}}, {"f3", {1, 2, 3, 4}}};
  for (const auto& spec : pencils) {
    CatalogueEntry e;
    e.name = spec.name;
    e.plane_degree = 2;
    e.moving = true;
    e.through.assign(spec.base.begin(), spec.base.end());
    DivisorClass c = 2 * DivisorClass::line(n);
    for (auto k : spec.base) c -= DivisorClass::exceptional(n, k);
    e.cls = c;
    e.self_intersection = self_intersection(c);
    entries.push_back(std::move(e));
  }
  return CurveCatalogue(std::move(entries));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<BigInt>> constraint_matrix(const PointConfiguration& cfg, const FatPointSystem& sys) {
  std::vector<std::vector<BigInt>> rows;
  if (sys.degree < 0) return rows;
  const auto monos = monomials(sys.degree);
  for (const auto& [idx, m] : sys.assignments) {
    if (m < 1) throw std::invalid_argument("fat-point multiplicities must be >= 1");
    const auto& p = cfg.point(idx).coords;
    // every partial derivative of order m-1: exponent vectors alpha with |alpha| = m-1
    for (const auto& alpha : monomials(m - 1)) {
      std::vector<BigInt> row;
      row.reserve(monos.size());
      for (const auto& beta : monos) {
        if (beta[0] < alpha[0] || beta[1] < alpha[1] || beta[2] < alpha[2]) {
          row.emplace_back(0);
          continue;
        }
        BigInt v = 1;
        for (int k = 0; k < 3; ++k) v *= falling(beta[k], alpha[k]) * power(p[k], beta[k] - alpha[k]);
        row.push_back(std::move(v));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const auto& piv = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const BigInt a = piv[c];
      const BigInt b = rows[r][c];
      BigInt g = 0;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - piv[k] * b;
        g = gcd_big(g, rows[r][k]);
      }
      if (g > 1)
        for (std::size_t k = c; k < cols; ++k) rows[r][k] /= g;
    }
    ++rank;
  }
  return rank;
}

std::int64_t h0_fat_points(const PointConfiguration& cfg, const FatPointSystem& sys) {
  if (sys.degree < 0) return 0;
  for (const auto& [idx, m] : sys.assignments)
    if (m > sys.degree) return 0;  // a nonzero form of degree d has multiplicity <= d
  const auto total = static_cast<std::int64_t>((sys.degree + 1) * (sys.degree + 2) / 2);
  return total - static_cast<std::int64_t>(exact_rank(constraint_matrix(cfg, sys)));
}

FatPointSystem class_to_system(const PointConfiguration& cfg, const DivisorClass& d) {
  if (d.points() != cfg.size()) throw lattice_mismatch("class and configuration have different point counts");
  FatPointSystem sys;
  sys.degree = d.degree();
  for (std::size_t i = 1; i <= d.points(); ++i) {
    const auto m = d.mult(i);
    if (m < 0)
      throw std::invalid_argument("negative multiplicity at P" + std::to_string(i) +
                                  "; remove the fixed part first");
    if (m > 0) sys.assignments.emplace_back(i, m);
  }
  return sys;
}

std::int64_t h0_class(const PointConfiguration& cfg, const CurveCatalogue& catalogue, const DivisorClass& d) {
  DivisorClass residue = d;
  std::int64_t budget = (d.degree() < 0 ? -d.degree() : d.degree()) + 1;
  for (auto m : d.mults()) budget += (m < 0 ? -m : m);
  budget += static_cast<std::int64_t>(catalogue.entries().size());

  for (std::int64_t iter = 0;; ++iter) {
    if (residue.degree() < 0) return 0;
    const CatalogueEntry* fixed = nullptr;
    for (const auto& e : catalogue.entries()) {
      if (e.moving || e.self_intersection >= 0) continue;
      if (pair(e.cls, residue) < 0) {
        fixed = &e;
        break;
      }
    }
    if (!fixed) break;
    if (iter >= budget) throw catalogue_gap("fixed-part removal for " + d.to_string() + " did not terminate");
    residue -= fixed->cls;
  }
  for (std::size_t i = 1; i <= residue.points(); ++i)
    if (residue.mult(i) < 0)
      throw catalogue_gap("residue " + residue.to_string() + " keeps a negative multiplicity at P" +
                          std::to_string(i));
  return h0_fat_points(cfg, class_to_system(cfg, residue));
}

std::int64_t h0_class(const PointConfiguration& cfg, const DivisorClass& d) {
  return h0_class(cfg, quadrilateral_catalogue(cfg), d);
}

// ---------------------------------------------------------------------------

namespace {

struct DecompositionSearch {
  const std::vector<const NamedClass*>& others;
  // exceptional_piece[i] = piece supplying e_{i+1}, or nullptr
  const std::vector<const NamedClass*>& exceptional_piece;
  std::size_t depth;
  std::vector<std::int64_t> chosen;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> found;

  void run(std::size_t idx, const DivisorClass& remaining, std::size_t used) {
    if (idx == others.size()) {
      finish(remaining, used);
      return;
    }
    const auto& piece = others[idx]->cls;
    DivisorClass rest = remaining;
    for (std::size_t k = 0; used + k <= depth; ++k) {
      if (k > 0) {
        rest -= piece;
        if (rest.degree() < 0) break;
      }
      chosen[idx] = static_cast<std::int64_t>(k);
      run(idx + 1, rest, used + k);
    }
    chosen[idx] = 0;
  }

  void finish(const DivisorClass& remaining, std::size_t used) {
    if (remaining.degree() != 0) return;
    std::vector<std::int64_t> exc(remaining.points(), 0);
    std::size_t extra = 0;
    for (std::size_t i = 0; i < remaining.points(); ++i) {
      const auto m = remaining.mults()[i];
      if (m > 0) return;
      if (m < 0) {
        if (!exceptional_piece[i]) return;
        exc[i] = -m;
        extra += static_cast<std::size_t>(-m);
      }
    }
    if (used + extra > depth) return;
    found.emplace_back(chosen, std::move(exc));
  }
};

}  // namespace

std::vector<Decomposition> effective_decompositions(const DivisorClass& target, std::span<const NamedClass> pieces,
                                                    std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("decomposition depth must be >= 1");
  const std::size_t n = target.points();
  std::vector<const NamedClass*> others;
  std::vector<const NamedClass*> exceptional_piece(n, nullptr);
  for (const auto& p : pieces) {
    if (p.cls.points() != n) throw lattice_mismatch("piece " + p.name + " lives in a different lattice");
    bool is_exc = false;
    for (std::size_t i = 1; i <= n; ++i) {
      if (p.cls == DivisorClass::exceptional(n, i)) {
        if (!exceptional_piece[i - 1]) exceptional_piece[i - 1] = &p;
        is_exc = true;
        break;
      }
    }
    if (!is_exc) {
      if (p.cls.degree() < 0) throw std::invalid_argument("piece " + p.name + " has negative degree");
      if (p.cls.is_zero()) continue;
      others.push_back(&p);
    }
  }

  DecompositionSearch search{others, exceptional_piece, depth, std::vector<std::int64_t>(others.size(), 0), {}};
  search.run(0, target, 0);

  // Emit in the order the pieces were supplied.
  std::vector<Decomposition> out;
  out.reserve(search.found.size());
  for (const auto& [mult_others, mult_exc] : search.found) {
    Decomposition dec;
    for (const auto& p : pieces) {
      std::int64_t k = 0;
      for (std::size_t j = 0; j < others.size(); ++j)
        if (others[j] == &p) k = mult_others[j];
      for (std::size_t i = 0; i < n; ++i)
        if (exceptional_piece[i] == &p) k = mult_exc[i];
      if (k > 0) dec.emplace_back(p.name, k);
    }
    out.push_back(std::move(dec));
  }
  return out;
}

std::vector<NamedClass> named_classes(const CurveCatalogue& catalogue) {
  std::vector<NamedClass> out;
  for (const auto& e : catalogue.entries()) out.push_back({e.name, e.cls});
  return out;
}

std::vector<Decomposition> effective_decompositions(const DivisorClass& target, const CurveCatalogue& catalogue,
                                                    std::size_t depth) {
  const auto pieces = named_classes(catalogue);
  return effective_decompositions(target, pieces, depth);
}

}  // namespace pgzero
