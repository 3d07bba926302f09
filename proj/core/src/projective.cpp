#include "gpd/projective.hpp"

#include <sstream>
#include <utility>

#include "gpd/linalg.hpp"

namespace gpd {

namespace {

std::vector<FieldElement> canonicalize_vector(std::vector<FieldElement> v,
                                              const char* what) {
  for (const FieldElement& x : v) {
    if (!x.is_zero()) {
      if (x.is_one()) return v;
      FieldElement inv = x.inverse();
      for (FieldElement& y : v) y = y * inv;
      return v;
    }
  }
  throw PreconditionError(std::string(what) + " must not be zero");
}

}  // namespace

ProjPoint::ProjPoint(std::vector<FieldElement> coords)
    : coords_(canonicalize_vector(std::move(coords), "projective point")) {
  if (coords_.size() < 2) {
    throw PreconditionError("projective point needs at least 2 coordinates");
  }
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return ProjPoint::cmp(a, b) == 0;
}

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = FieldElement::cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string ProjPoint::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ", ";
    out << coords_[i].str();
  }
  out << ")";
  return out.str();
}

ParamLine::ParamLine(ProjPoint basis0, ProjPoint basis1)
    : basis0_(std::move(basis0)), basis1_(std::move(basis1)) {
  if (basis0_.size() != basis1_.size()) {
    throw PreconditionError("line basis points have mismatched dimensions");
  }
  linalg::Matrix m{basis0_.coords(), basis1_.coords()};
  if (linalg::rank(std::move(m)) != 2) {
    throw PreconditionError("line basis points are dependent");
  }
}

std::vector<FieldElement> ParamLine::subspace_key() const {
  linalg::Matrix m{basis0_.coords(), basis1_.coords()};
  linalg::rref(m);
  std::vector<FieldElement> flat;
  flat.reserve(2 * basis0_.size());
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

bool ParamLine::same_line(const ParamLine& other) const {
  if (ambient_coords() != other.ambient_coords()) return false;
  linalg::Matrix m{basis0_.coords(), basis1_.coords(), other.basis0_.coords(),
                   other.basis1_.coords()};
  return linalg::rank(std::move(m)) == 2;
}

PglMap::PglMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : entries_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  FieldElement det =
      entries_[0] * entries_[3] - entries_[1] * entries_[2];
  if (det.is_zero()) {
    throw SingularMatrixError("matrix is singular");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!entries_[i].is_zero()) {
      if (!entries_[i].is_one()) {
        FieldElement inv = entries_[i].inverse();
        for (std::size_t j = i; j < 4; ++j) entries_[j] = entries_[j] * inv;
      }
      break;
    }
  }
}

PglMap PglMap::identity(const Field& f) {
  return PglMap(f.one(), f.zero(), f.zero(), f.one());
}

FieldElement PglMap::det() const {
  return entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

FieldElement PglMap::trace() const { return entries_[0] + entries_[3]; }

PglMap PglMap::inverse() const {
  return PglMap(entries_[3], -entries_[1], -entries_[2], entries_[0]);
}

bool PglMap::is_identity() const {
  // Canonical scaling makes every scalar matrix the identity matrix.
  return entries_[0].is_one() && entries_[1].is_zero() &&
         entries_[2].is_zero() && entries_[3].is_one();
}

ProjPoint PglMap::apply(const ProjPoint& p) const {
  if (p.size() != 2) {
    throw PreconditionError("PGL(2) maps act on points of P^1");
  }
  return ProjPoint({entries_[0] * p[0] + entries_[1] * p[1],
                    entries_[2] * p[0] + entries_[3] * p[1]});
}

PglMap operator*(const PglMap& a, const PglMap& b) {
  return PglMap(a.entries_[0] * b.entries_[0] + a.entries_[1] * b.entries_[2],
                a.entries_[0] * b.entries_[1] + a.entries_[1] * b.entries_[3],
                a.entries_[2] * b.entries_[0] + a.entries_[3] * b.entries_[2],
                a.entries_[2] * b.entries_[1] + a.entries_[3] * b.entries_[3]);
}

bool operator==(const PglMap& a, const PglMap& b) {
  return PglMap::cmp(a, b) == 0;
}

int PglMap::cmp(const PglMap& a, const PglMap& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    int c = FieldElement::cmp(a.entries_[i], b.entries_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string PglMap::str() const {
  std::ostringstream out;
  out << "[[" << entries_[0].str() << ", " << entries_[1].str() << "], ["
      << entries_[2].str() << ", " << entries_[3].str() << "]]";
  return out.str();
}

FieldElement wedge4(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r,
                    const ProjPoint& s) {
  if (p.size() != 4 || q.size() != 4 || r.size() != 4 || s.size() != 4) {
    throw PreconditionError("wedge4 requires points with 4 coordinates");
  }
  return linalg::determinant(
      {p.coords(), q.coords(), r.coords(), s.coords()});
}

bool lines_skew(const ParamLine& l1, const ParamLine& l2) {
  if (l1.ambient_coords() != 4 || l2.ambient_coords() != 4) {
    throw PreconditionError("skewness test requires lines of P^3");
  }
  return !wedge4(l1.basis0(), l1.basis1(), l2.basis0(), l2.basis1()).is_zero();
}

PglMap projection_matrix(const ParamLine& u, const ParamLine& v,
                         const ParamLine& w) {
  if (!lines_skew(u, v)) {
    throw SkewnessError("auxiliary line meets the source line");
  }
  if (!lines_skew(v, w)) {
    throw SkewnessError("auxiliary line meets the target line");
  }
  const ProjPoint &u0 = u.basis0(), &u1 = u.basis1();
  const ProjPoint &v0 = v.basis0(), &v1 = v.basis1();
  const ProjPoint &w0 = w.basis0(), &w1 = w.basis1();
  return PglMap(-wedge4(u0, v0, v1, w1), -wedge4(u1, v0, v1, w1),
                wedge4(u0, v0, v1, w0), wedge4(u1, v0, v1, w0));
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (first.dst != second.src) {
    throw PreconditionError("morphism endpoints do not match: " +
                            std::to_string(first.dst) + " vs " +
                            std::to_string(second.src));
  }
  return Morphism{first.src, second.dst, second.map * first.map};
}

ProjPoint apply_map(const PglMap& m, const ProjPoint& p) { return m.apply(p); }

namespace {

// Matrix taking (p0, p1, p2) to ((1,0), (0,1), (1,1)); the rows are linear
// forms vanishing at p1 and p0, scaled to agree at p2.
PglMap mobius_to_standard(const std::array<ProjPoint, 3>& pts) {
  const FieldElement &a0 = pts[0][0], &b0 = pts[0][1];
  const FieldElement &a1 = pts[1][0], &b1 = pts[1][1];
  const FieldElement &a2 = pts[2][0], &b2 = pts[2][1];
  FieldElement lam = b0 * a2 - a0 * b2;
  FieldElement mu = b1 * a2 - a1 * b2;
  return PglMap(lam * b1, -(lam * a1), mu * b0, -(mu * a0));
}

}  // namespace

PglMap mobius_from_triples(const std::array<ProjPoint, 3>& src,
                           const std::array<ProjPoint, 3>& dst) {
  for (const auto& triple : {src, dst}) {
    for (int i = 0; i < 3; ++i) {
      if (triple[i].size() != 2) {
        throw PreconditionError("interpolation points must lie in P^1");
      }
      for (int j = i + 1; j < 3; ++j) {
        if (triple[i] == triple[j]) {
          throw PreconditionError("interpolation triple has a repeated point");
        }
      }
    }
  }
  return mobius_to_standard(dst).inverse() * mobius_to_standard(src);
}

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

int max_finite_order(int degree) {
  if (degree < 1) throw PreconditionError("field degree must be positive");
  // phi(n) >= sqrt(n/2), so phi(n) <= 2d forces n <= 8d^2.
  long bound = 8L * degree * degree + 1;
  long best = 1;
  for (long n = 1; n <= bound; ++n) {
    if (euler_phi(n) <= 2L * degree) best = n;
  }
  return static_cast<int>(best);
}

std::optional<int> element_order(const PglMap& m, const Field& f) {
  const int n_max = max_finite_order(f.degree());
  PglMap acc = m;
  for (int n = 1; n <= n_max; ++n) {
    if (acc.is_identity()) return n;
    acc = acc * m;
  }
  return std::nullopt;
}

ProjPoint point_on_line(const ParamLine& line, const ProjPoint& p) {
  if (p.size() != 2) {
    throw PreconditionError("line parameter must be a point of P^1");
  }
  std::vector<FieldElement> coords;
  coords.reserve(line.ambient_coords());
  for (std::size_t i = 0; i < line.ambient_coords(); ++i) {
    coords.push_back(p[0] * line.basis0()[i] + p[1] * line.basis1()[i]);
  }
  return ProjPoint(std::move(coords));
}

ProjPoint parameter_of_point(const ParamLine& line, const ProjPoint& ambient) {
  if (ambient.size() != line.ambient_coords()) {
    throw PreconditionError("point dimension does not match the line");
  }
  const auto& b0 = line.basis0();
  const auto& b1 = line.basis1();
  // Solve ambient = a*b0 + b*b1 from a coordinate pair with invertible minor.
  const std::size_t n = line.ambient_coords();
  for (std::size_t c1 = 0; c1 < n; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
      FieldElement det = b0[c1] * b1[c2] - b0[c2] * b1[c1];
      if (det.is_zero()) continue;
      FieldElement inv = det.inverse();
      FieldElement a = (ambient[c1] * b1[c2] - ambient[c2] * b1[c1]) * inv;
      FieldElement b = (b0[c1] * ambient[c2] - b0[c2] * ambient[c1]) * inv;
      if (a.is_zero() && b.is_zero()) {
        throw PreconditionError("point does not lie on the line");
      }
      ProjPoint param({a, b});
      if (point_on_line(line, param) != ambient) {
        throw PreconditionError("point does not lie on the line");
      }
      return param;
    }
  }
  throw PreconditionError("degenerate line basis");
}

std::optional<ProjPoint> line_intersection(const ParamLine& l1,
                                           const ParamLine& l2) {
  if (l1.ambient_coords() != 4 || l2.ambient_coords() != 4) {
    throw PreconditionError("line intersection implemented for P^3 lines");
  }
  if (lines_skew(l1, l2)) return std::nullopt;
  if (l1.same_line(l2)) {
    throw PreconditionError("lines coincide; intersection is not a point");
  }
  // Null vector (a,b,c,d) of the transposed 4x4 stack gives the common point
  // a*b0 + b*b1 = -(c*c0 + d*c1).
  const std::array<const ProjPoint*, 4> rows{&l1.basis0(), &l1.basis1(),
                                             &l2.basis0(), &l2.basis1()};
  Field f = l1.basis0().field();
  linalg::Matrix m(4, linalg::Row(4, f.zero()));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = (*rows[c])[static_cast<std::size_t>(r)];
  }
  int rk = linalg::rref(m);
  // rank 3 exactly: the lines are distinct and meet.
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::vector<bool> is_pivot(4, false);
  for (int r = 0; r < rk; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (!m[r][c].is_zero()) {
        pivot_col[r] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
        break;
      }
    }
  }
  int free_col = -1;
  for (int c = 0; c < 4; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  std::vector<FieldElement> sol(4, f.zero());
  sol[static_cast<std::size_t>(free_col)] = f.one();
  for (int r = 0; r < rk; ++r) {
    sol[static_cast<std::size_t>(pivot_col[r])] =
        -m[r][static_cast<std::size_t>(free_col)];
  }
  std::vector<FieldElement> pt;
  pt.reserve(4);
  for (std::size_t i = 0; i < 4; ++i) {
    pt.push_back(sol[0] * l1.basis0()[i] + sol[1] * l1.basis1()[i]);
  }
  return ProjPoint(std::move(pt));
}

}  // namespace gpd
