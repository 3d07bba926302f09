#pragma once

// Combinatorial model of the D4 groupoid: the twelve quadruple points carry
// labels from {A,B,C} x (Z/2Z)^2 and every line corresponds to a triple
// {A+g, B+g', C+g''} with g+g'+g'' = 0. Projections act on labels by a
// collinearity rule that mirrors the geometric maps exactly.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd::d4 {

// Element of (Z/2Z)^2 packed into two bits.
struct Z2x2 {
  std::uint8_t bits = 0;  // 0..3

  friend Z2x2 operator+(Z2x2 a, Z2x2 b) {
    return Z2x2{static_cast<std::uint8_t>(a.bits ^ b.bits)};
  }
  friend bool operator==(Z2x2 a, Z2x2 b) { return a.bits == b.bits; }
  friend bool operator!=(Z2x2 a, Z2x2 b) { return a.bits != b.bits; }
  bool is_zero() const { return bits == 0; }
};

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2 };

struct Label {
  Letter letter = Letter::A;
  Z2x2 g;

  friend bool operator==(const Label& x, const Label& y) {
    return x.letter == y.letter && x.g == y.g;
  }
  friend bool operator!=(const Label& x, const Label& y) { return !(x == y); }
  std::string str() const;
};

// A line triple, stored as the group parts of its A, B and C labels.
struct LineTriple {
  Z2x2 a, b, c;  // invariant: a + b + c = 0

  Z2x2 part(Letter l) const {
    switch (l) {
      case Letter::A: return a;
      case Letter::B: return b;
      case Letter::C: return c;
    }
    return a;
  }
  bool contains(const Label& p) const { return part(p.letter) == p.g; }
  bool disjoint_from(const LineTriple& other) const {
    return a != other.a && b != other.b && c != other.c;
  }
  friend bool operator==(const LineTriple& x, const LineTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// All 16 triples, ordered lexicographically by (a, b).
std::vector<LineTriple> all_triples();

// Image of the label p of `dom` under the combinatorial projection through
// `aux` into `cod`. A label shared with the codomain is fixed; otherwise the
// image is the unique label q of cod such that some label r of aux completes
// {p, r, q} to three distinct letters with group parts summing to zero.
// Preconditions: aux disjoint from dom and cod, p on dom.
Label combinatorial_pi(const LineTriple& dom, const LineTriple& aux,
                       const LineTriple& cod, const Label& p);

// Exhaustively checks existence and uniqueness of the collinearity rule over
// every admissible (dom, aux, cod, p); returns the number of tuples checked.
std::size_t check_projection_rule();

struct Labeling {
  // line index -> triple; point (by index into `points`) -> label.
  std::vector<LineTriple> line_to_triple;
  std::vector<ProjPoint> points;  // the 12 quadruple points, sorted
  std::vector<Label> point_labels;
};

// Backtracking search for a labeling of the quadruple points compatible with
// the incidence structure. Deterministic: points in canonical order, letters
// A, B, C, group parts in bit order. Throws when the configuration does not
// have the (12_4, 16_3) incidence or no labeling exists.
Labeling find_labeling(const Configuration& c);

struct AgreementReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string mismatch;  // description of the first failure
};

// Verifies that every simple geometric morphism acts on marked points exactly
// as combinatorial_pi acts on their labels.
AgreementReport check_labeling_agreement(const Configuration& c,
                                         const GroupoidAnalysis& a,
                                         const Labeling& labeling);

}  // namespace gpd::d4
