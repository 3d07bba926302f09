#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/configs.hpp"
#include "gpd/d4_model.hpp"
#include "gpd/sampling.hpp"

using namespace gpd;
using namespace gpd::d4;

TEST_CASE("all triples") {
  std::vector<LineTriple> triples = all_triples();
  CHECK(triples.size() == 16);
  bool has_zero = false;
  for (const LineTriple& t : triples) {
    CHECK((t.a + t.b + t.c).is_zero());
    if (t.a.is_zero() && t.b.is_zero() && t.c.is_zero()) has_zero = true;
  }
  CHECK(has_zero);
}

TEST_CASE("combinatorial projection fixes shared labels") {
  // dom and cod share exactly the A-label; aux is disjoint from both.
  LineTriple dom{Z2x2{0}, Z2x2{1}, Z2x2{1}};
  LineTriple cod{Z2x2{0}, Z2x2{2}, Z2x2{2}};
  LineTriple aux{Z2x2{3}, Z2x2{0}, Z2x2{3}};
  Label shared{Letter::A, Z2x2{0}};
  CHECK(combinatorial_pi(dom, aux, cod, shared) == shared);

  // The B-point of dom maps to the C-point of cod (the letter swap).
  Label b_of_dom{Letter::B, Z2x2{1}};
  CHECK(combinatorial_pi(dom, aux, cod, b_of_dom) ==
        Label{Letter::C, Z2x2{2}});
  Label c_of_dom{Letter::C, Z2x2{1}};
  CHECK(combinatorial_pi(dom, aux, cod, c_of_dom) ==
        Label{Letter::B, Z2x2{2}});
}

TEST_CASE("combinatorial projection preconditions") {
  LineTriple dom{Z2x2{0}, Z2x2{1}, Z2x2{1}};
  LineTriple cod{Z2x2{0}, Z2x2{2}, Z2x2{2}};
  LineTriple aux{Z2x2{3}, Z2x2{0}, Z2x2{3}};
  CHECK_THROWS_AS(combinatorial_pi(dom, dom, cod, Label{Letter::A, Z2x2{0}}),
                  PreconditionError);
  CHECK_THROWS_AS(combinatorial_pi(dom, aux, cod, Label{Letter::A, Z2x2{1}}),
                  PreconditionError);
}

TEST_CASE("existence and uniqueness of the rule, exhaustively") {
  CHECK(check_projection_rule() == 1152);
}

TEST_CASE("labeling of the built-in D4") {
  Configuration d4 = builtin(Builtin::D4);
  Labeling lab = find_labeling(d4);
  CHECK(lab.points.size() == 12);
  CHECK(lab.line_to_triple.size() == 16);
  // Distinct labels and distinct triples (bijections both ways).
  std::set<int> label_ids;
  for (const Label& l : lab.point_labels) {
    label_ids.insert(static_cast<int>(l.letter) * 4 + l.g.bits);
  }
  CHECK(label_ids.size() == 12);
}

TEST_CASE("labeling fails for a non-D4 configuration") {
  CHECK_THROWS_AS(find_labeling(builtin(Builtin::Klein)), PreconditionError);
}

TEST_CASE("labeling survives a projective change of coordinates") {
  Configuration d4 = builtin(Builtin::D4);
  Field f = d4.field;
  // A fixed invertible 4x4 change of coordinates.
  const std::array<std::array<long long, 4>, 4> a{
      {{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}};
  auto transform = [&](const ProjPoint& p) {
    std::vector<FieldElement> out;
    for (int r = 0; r < 4; ++r) {
      FieldElement acc = f.zero();
      for (int c = 0; c < 4; ++c) {
        acc = acc + f.integer(a[static_cast<std::size_t>(r)]
                               [static_cast<std::size_t>(c)]) *
                        p[static_cast<std::size_t>(c)];
      }
      out.push_back(acc);
    }
    return ProjPoint(std::move(out));
  };
  Configuration moved;
  moved.field = f;
  moved.name = "d4-moved";
  for (const ParamLine& l : d4.lines) {
    moved.lines.emplace_back(transform(l.basis0()), transform(l.basis1()));
  }
  Labeling lab = find_labeling(moved);
  CHECK(lab.points.size() == 12);
}

TEST_CASE("geometric morphisms agree with the combinatorial model") {
  Configuration d4 = builtin(Builtin::D4);
  GroupoidAnalysis a = enumerate_generators(d4);
  Labeling lab = find_labeling(d4);
  AgreementReport rep = check_labeling_agreement(d4, a, lab);
  CHECK(rep.ok);
  CHECK(rep.checked == 480 * 3);
}
