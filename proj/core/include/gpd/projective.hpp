#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gpd/field.hpp"

namespace gpd {

// Point of projective space, stored in canonical form: the first nonzero
// coordinate equals 1. Two points are projectively equal iff their canonical
// coordinate vectors are equal.
class ProjPoint {
 public:
  // Canonicalizes; throws on the zero vector or fewer than 2 coordinates.
  explicit ProjPoint(std::vector<FieldElement> coords);

  const std::vector<FieldElement>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  Field field() const { return coords_[0].field(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) {
    return !(a == b);
  }
  static int cmp(const ProjPoint& a, const ProjPoint& b);

  std::string str() const;

 private:
  std::vector<FieldElement> coords_;
};

struct ProjPointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const {
    return ProjPoint::cmp(a, b) < 0;
  }
};

// A line given by an ordered pair of independent points. The basis pair is
// the parametrization: (a,b) in P^1 names the point a*basis0 + b*basis1.
class ParamLine {
 public:
  ParamLine(ProjPoint basis0, ProjPoint basis1);

  const ProjPoint& basis0() const { return basis0_; }
  const ProjPoint& basis1() const { return basis1_; }
  std::size_t ambient_coords() const { return basis0_.size(); }

  // Equality of the underlying subspaces, ignoring the choice of basis.
  bool same_line(const ParamLine& other) const;
  // Canonical (RREF) basis of the subspace, flattened; equal iff same line.
  std::vector<FieldElement> subspace_key() const;

 private:
  ProjPoint basis0_, basis1_;
};

// Element of PGL(2,K): an invertible 2x2 matrix stored canonically, scaled so
// that the first nonzero entry in row-major order equals 1.
class PglMap {
 public:
  // Canonicalizes; throws SingularMatrixError when the determinant vanishes.
  PglMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  static PglMap identity(const Field& f);

  // Row-major canonical entries.
  const FieldElement& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(2 * row + col)];
  }
  const std::array<FieldElement, 4>& entries() const { return entries_; }
  Field field() const { return entries_[0].field(); }

  FieldElement det() const;
  FieldElement trace() const;
  PglMap inverse() const;
  bool is_identity() const;

  ProjPoint apply(const ProjPoint& p) const;

  friend PglMap operator*(const PglMap& a, const PglMap& b);
  friend bool operator==(const PglMap& a, const PglMap& b);
  friend bool operator!=(const PglMap& a, const PglMap& b) { return !(a == b); }
  static int cmp(const PglMap& a, const PglMap& b);

  std::string str() const;

 private:
  std::array<FieldElement, 4> entries_;
};

struct PglMapLess {
  bool operator()(const PglMap& a, const PglMap& b) const {
    return PglMap::cmp(a, b) < 0;
  }
};

// An arrow of the groupoid: a projective-line isomorphism between two lines
// of a configuration, identified by their indices.
struct Morphism {
  int src;
  int dst;
  PglMap map;
};

// Scalar quadruple product det[p;q;r;s] of four points with 4 coordinates.
// Representative-dependent up to a nonzero scalar; callers use only its
// vanishing or feed ratios into projectively interpreted matrices.
FieldElement wedge4(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r,
                    const ProjPoint& s);

// Lines of P^3 are skew iff their four basis points are independent.
bool lines_skew(const ParamLine& l1, const ParamLine& l2);

// The projection U -> W through the auxiliary line V, as a map of P^1
// parameters. Requires V skew to U and to W; U and W may meet or coincide.
PglMap projection_matrix(const ParamLine& u, const ParamLine& v,
                         const ParamLine& w);

// second after first; requires first.dst == second.src.
Morphism compose(const Morphism& second, const Morphism& first);

ProjPoint apply_map(const PglMap& m, const ProjPoint& p);

// The unique Moebius transformation sending src[i] -> dst[i] for the three
// pairwise distinct points of each triple.
PglMap mobius_from_triples(const std::array<ProjPoint, 3>& src,
                           const std::array<ProjPoint, 3>& dst);

// Largest order of a finite-order element of PGL(2,K) for [K:Q] = degree:
// the eigenvalue ratio of a finite-order element is a primitive n-th root of
// unity in a quadratic extension of K, so phi(n) <= 2*degree.
int max_finite_order(int degree);

// Smallest n >= 1 with M^n scalar, or nullopt when M has infinite order.
// Exact power iteration up to max_finite_order is a complete decision
// procedure in characteristic 0.
std::optional<int> element_order(const PglMap& m, const Field& f);

// a*basis0 + b*basis1 for the P^1 parameter p = (a,b), canonicalized.
ProjPoint point_on_line(const ParamLine& line, const ProjPoint& p1_param);

// Inverse of point_on_line; throws PreconditionError when the point does not
// lie on the line.
ProjPoint parameter_of_point(const ParamLine& line, const ProjPoint& ambient);

// Intersection point of two lines in P^3, or nullopt when skew.
std::optional<ProjPoint> line_intersection(const ParamLine& l1,
                                           const ParamLine& l2);

}  // namespace gpd
