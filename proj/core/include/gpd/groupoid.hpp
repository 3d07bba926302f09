#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/groups.hpp"
#include "gpd/projective.hpp"

namespace gpd {

// A configuration of parametrized lines over a common field, optionally with
// a distinguished ("marked") finite set of P^1 parameters on every line.
struct Configuration {
  Field field = Field::rationals();
  std::vector<ParamLine> lines;
  std::optional<std::vector<std::vector<ProjPoint>>> marked;
  std::string name;

  // Projective ambient dimension: 3 for P^3 configurations, 4 for P^4.
  int ambient_dim() const {
    return static_cast<int>(lines.at(0).ambient_coords()) - 1;
  }
  void validate() const;  // distinct lines, marked shape and distinctness
};

// A generating morphism pi(src, aux, dst) before composition closure.
struct SimpleMorphism {
  int src;
  int aux;
  int dst;
  PglMap map;

  Morphism morphism() const { return Morphism{src, dst, map}; }
};

struct GroupoidAnalysis {
  // All simple morphisms, ordered by (src, dst, aux).
  std::vector<SimpleMorphism> generators;
  // Adjacency of the auxiliary relation: skewness in P^3, disjointness in
  // P^4. Diagonal is false.
  std::vector<std::vector<bool>> skew;
  // component[i] == component[k] iff Hom(i,k) is nonempty.
  std::vector<int> component;
  // (src,dst) -> number of valid auxiliary lines, for all ordered pairs.
  std::map<std::pair<int, int>, int> aux_counts;
};

// Enumerates the simple morphisms of the configuration's groupoid: triples
// (i,j,k) with i != k, j not in {i,k}, and the auxiliary L_j admissible for
// both endpoints. Degenerate triples pi(i,j,i) are identities and excluded.
GroupoidAnalysis enumerate_generators(const Configuration& c);

// Components as a partition of the line indices, each sorted ascending,
// ordered by smallest member.
std::vector<std::vector<int>> connectivity(const GroupoidAnalysis& a);

enum class TreeOrder { AscendingIndex, DescendingIndex };

// Vertex group Aut(base) via the standard spanning-tree reduction: tree-path
// morphisms tau conjugate every generator to a loop at the base, and the
// closure of those loops is the whole vertex group. The result does not
// depend on the tree; TreeOrder only varies the tie-break for testing that.
GroupResult vertex_group(const Configuration& c, const GroupoidAnalysis& a,
                         int base, std::size_t cap,
                         TreeOrder order = TreeOrder::AscendingIndex);

GroupResult vertex_group(const Configuration& c, int base);

struct OrbitResult {
  // (line index, canonical P^1 parameter), in discovery order.
  std::vector<std::pair<int, ProjPoint>> members;
  bool truncated = false;
};

constexpr std::size_t kDefaultOrbitCap = 10000;

OrbitResult orbit(const Configuration& c, const GroupoidAnalysis& a, int line,
                  const ProjPoint& start, std::size_t cap = kDefaultOrbitCap);

struct InvarianceReport {
  bool holds = true;
  std::size_t checked = 0;
  // First failing generator and source parameter, when holds is false.
  std::optional<SimpleMorphism> counterexample;
  std::optional<ProjPoint> offending_point;
};

// True iff every simple morphism maps the source line's marked set onto the
// target line's marked set.
InvarianceReport marked_invariance(const Configuration& c,
                                   const GroupoidAnalysis& a);

}  // namespace gpd
