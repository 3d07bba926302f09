#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gpd/projective.hpp"

namespace gpd {

enum class GroupKind {
  Trivial,
  Cyclic,      // C(n)
  Dihedral,    // D(2n), order 2n
  A4,
  S4,
  A5,
  OtherFinite,
  Infinite,
};

struct GroupLabel {
  GroupKind kind = GroupKind::Trivial;
  int order = 1;  // group order for Cyclic/Dihedral, informative otherwise

  std::string str() const;
  friend bool operator==(const GroupLabel& a, const GroupLabel& b) {
    return a.kind == b.kind && (a.kind != GroupKind::Cyclic &&
                                        a.kind != GroupKind::Dihedral
                                    ? true
                                    : a.order == b.order);
  }
  friend bool operator!=(const GroupLabel& a, const GroupLabel& b) {
    return !(a == b);
  }
};

// Result of a closure, stabilizer or vertex-group computation. When the
// soundness cap is exceeded the verdict is Infinite: elements and histogram
// are empty and `infinite` is set.
struct GroupResult {
  std::vector<PglMap> elements;    // canonical forms, first-discovered order
  std::map<int, int> histogram;    // element order -> count
  GroupLabel label;
  std::size_t cap = 0;             // cap in effect (0 = not applicable)
  bool infinite = false;

  std::size_t order() const { return elements.size(); }
};

// max(60, 2*max_finite_order(deg)): every finite subgroup of PGL(2,K) has
// order at most this bound (cyclic and dihedral orders are limited by the
// element-order bound; the sporadic subgroups have order at most 60), so a
// closure that exceeds it is provably infinite.
std::size_t default_cap(const Field& f);

// Breadth-first closure of the generated subgroup under left multiplication
// by the generators. A finite closed product set in PGL(2,K) is a group, so
// this is the generated group whenever it is finite.
GroupResult generate_closure(const std::vector<PglMap>& gens, std::size_t cap);

// Decision procedure over order and element-order histogram, with explicit
// subgroup structure for the dihedral case. Throws on an infinite input.
GroupLabel classify(const GroupResult& g, const Field& f);

// Full setwise stabilizer of >= 3 distinct points of P^1: an automorphism is
// determined by the images of the first three points, so trying all ordered
// triples of points of X is exhaustive.
GroupResult stabilizer(const std::vector<ProjPoint>& points);

}  // namespace gpd
