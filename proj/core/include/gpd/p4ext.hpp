#pragma once

// The 25-line configuration of P^4 over Q[t]/(t^4+t^3+t^2+t+1) and its
// hyperplane-mediated projections. Lines of P^4 admit a projection map
// U -> W through an auxiliary V only inside a common 3-dimensional
// hyperplane; within it the construction is the same as in P^3.

#include <map>
#include <optional>
#include <vector>

#include "gpd/groups.hpp"
#include "gpd/projective.hpp"

namespace gpd {

// Q[t]/(t^4+t^3+t^2+t+1); t is a primitive fifth root of unity.
Field fifth_cyclotomic_field();

// Orbit of the seed line under the C5 x C5 action generated by the coordinate
// shift and the diagonal scaling by powers of t. Exactly 25 distinct lines;
// ordered by (shift power, scaling power) of the first representative.
std::vector<ParamLine> generate_l25();

// Two lines of P^4 span a hyperplane iff they are disjoint (stacked rank 4).
bool lines_disjoint4(const ParamLine& a, const ParamLine& b);

// True iff the three lines lie in a common hyperplane (stacked rank <= 4).
bool coplanar_triple(const ParamLine& u, const ParamLine& v,
                     const ParamLine& w);

// Projection U -> W through V inside their common hyperplane. For each basis
// point u of U the image parameters (c0,c1) satisfy c0*w0 + c1*w1 in
// span(u, v0, v1); every 4x4 minor of [u; v0; v1; c0*w0+c1*w1] is linear in
// (c0,c1), giving a 5x2 system with a 1-dimensional kernel. Both columns are
// read from the same minor row so their relative scale is consistent.
PglMap projection4(const ParamLine& u, const ParamLine& v, const ParamLine& w);

struct IncidenceStats {
  // Each hyperplane as the sorted set of incident line indices.
  std::vector<std::vector<int>> hyperplanes;
  std::map<int, int> lines_per_hyperplane;   // histogram
  std::map<int, int> hyperplanes_per_line;   // histogram
};

IncidenceStats incidence_stats(const std::vector<ParamLine>& lines);
IncidenceStats incidence_stats();  // over generate_l25()

struct ParabolicSearchResult {
  std::optional<PglMap> element;  // trace^2 = 4 det, non-scalar
  int word_length = 0;            // length of the witnessing word
  std::size_t states_explored = 0;
};

struct P4VertexReport {
  GroupResult group;
  ParabolicSearchResult parabolic;
};

// Vertex group of the 25-line groupoid (expected verdict: Infinite), plus a
// best-effort search for a parabolic element among loops at the base of word
// length <= max_word_length over simple morphisms.
P4VertexReport vertex_group_p4(int base, std::size_t cap,
                               int max_word_length = 4);

bool is_parabolic(const PglMap& m);

}  // namespace gpd
