#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/groupoid.hpp"
#include "gpd/p4ext.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

ProjPoint shift(const ProjPoint& p) {
  return ProjPoint({p[4], p[0], p[1], p[2], p[3]});
}

ProjPoint scale(const ProjPoint& p, const FieldElement& t) {
  return ProjPoint({p[0], t * p[1], t * t * p[2], t * t * t * p[3],
                    t * t * t * t * p[4]});
}

}  // namespace

TEST_CASE("the generating automorphisms have order five") {
  Field f = fifth_cyclotomic_field();
  FieldElement t = f.generator();
  ProjPoint p = oracles::ipt(f, {1, 2, 3, 4, 5});
  ProjPoint shifted = p;
  ProjPoint scaled = p;
  for (int k = 0; k < 5; ++k) {
    shifted = shift(shifted);
    scaled = scale(scaled, t);
  }
  CHECK(shifted == p);
  CHECK(scaled == p);
}

TEST_CASE("orbit of the seed line") {
  std::vector<ParamLine> lines = generate_l25();
  REQUIRE(lines.size() == 25);
  Field f = fifth_cyclotomic_field();
  CHECK(lines[0].basis0() == oracles::ipt(f, {0, 1, 0, 0, -1}));
  CHECK(lines[0].basis1() == oracles::ipt(f, {0, 0, 1, -1, 0}));

  // The orbit is closed under both generators of the C5 x C5 action.
  FieldElement t = f.generator();
  for (const ParamLine& l : lines) {
    ParamLine shifted(shift(l.basis0()), shift(l.basis1()));
    ParamLine scaled(scale(l.basis0(), t), scale(l.basis1(), t));
    bool shifted_in = false, scaled_in = false;
    for (const ParamLine& m : lines) {
      shifted_in = shifted_in || m.same_line(shifted);
      scaled_in = scaled_in || m.same_line(scaled);
    }
    CHECK(shifted_in);
    CHECK(scaled_in);
  }
}

TEST_CASE("incidence statistics") {
  IncidenceStats stats = incidence_stats();
  CHECK(stats.hyperplanes.size() == 30);
  CHECK(stats.lines_per_hyperplane == std::map<int, int>{{5, 30}});
  CHECK(stats.hyperplanes_per_line == std::map<int, int>{{6, 25}});
}

TEST_CASE("coplanarity") {
  std::vector<ParamLine> lines = generate_l25();
  CHECK(coplanar_triple(lines[0], lines[0], lines[0]));

  IncidenceStats stats = incidence_stats(lines);
  const auto& h = stats.hyperplanes.front();
  CHECK(coplanar_triple(lines[static_cast<std::size_t>(h[0])],
                        lines[static_cast<std::size_t>(h[1])],
                        lines[static_cast<std::size_t>(h[2])]));

  // Some triple of the 25 lines is not coplanar.
  bool found_non_coplanar = false;
  for (int k = 1; k < 25 && !found_non_coplanar; ++k) {
    for (int j = 1; j < k && !found_non_coplanar; ++j) {
      if (!coplanar_triple(lines[0], lines[static_cast<std::size_t>(j)],
                           lines[static_cast<std::size_t>(k)])) {
        found_non_coplanar = true;
      }
    }
  }
  CHECK(found_non_coplanar);
}

TEST_CASE("projection inside a hyperplane") {
  std::vector<ParamLine> lines = generate_l25();
  IncidenceStats stats = incidence_stats(lines);

  int checked = 0;
  for (const auto& h : stats.hyperplanes) {
    for (int i : h) {
      for (int j : h) {
        if (j == i) continue;
        for (int k : h) {
          if (k == i || k == j) continue;
          const ParamLine& u = lines[static_cast<std::size_t>(i)];
          const ParamLine& v = lines[static_cast<std::size_t>(j)];
          const ParamLine& w = lines[static_cast<std::size_t>(k)];
          if (!lines_disjoint4(u, v) || !lines_disjoint4(v, w)) continue;

          PglMap fwd = projection4(u, v, w);
          CHECK_FALSE(fwd.det().is_zero());
          PglMap bwd = projection4(w, v, u);
          CHECK((bwd * fwd).is_identity());
          CHECK(projection4(u, v, u).is_identity());

          // Image incidence: [p; v0; v1; image(p)] has rank 3; checked with
          // the exhaustive-minor oracle rather than the library elimination.
          Field f = u.basis0().field();
          ProjPoint param({f.one(), f.integer(2)});
          ProjPoint p = point_on_line(u, param);
          ProjPoint q = point_on_line(w, fwd.apply(param));
          std::vector<std::vector<FieldElement>> m{
              p.coords(), v.basis0().coords(), v.basis1().coords(),
              q.coords()};
          CHECK(oracles::minor_rank(m) == 3);
          ++checked;
        }
        if (checked >= 8) break;
      }
      if (checked >= 8) break;
    }
    if (checked >= 8) break;
  }
  CHECK(checked >= 8);
}

TEST_CASE("projection preconditions") {
  std::vector<ParamLine> lines = generate_l25();
  IncidenceStats stats = incidence_stats(lines);
  // A non-coplanar triple is rejected.
  for (int k = 1; k < 25; ++k) {
    for (int j = 1; j < k; ++j) {
      const ParamLine& u = lines[0];
      const ParamLine& v = lines[static_cast<std::size_t>(j)];
      const ParamLine& w = lines[static_cast<std::size_t>(k)];
      if (!coplanar_triple(u, v, w) && lines_disjoint4(u, v) &&
          lines_disjoint4(v, w)) {
        CHECK_THROWS_AS(projection4(u, v, w), PreconditionError);
        return;
      }
    }
  }
  FAIL("no admissible test triple found");
}

TEST_CASE("the 25 lines are pairwise disjoint") {
  std::vector<ParamLine> lines = generate_l25();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      CHECK(lines_disjoint4(lines[i], lines[j]));
    }
  }
}

TEST_CASE("intersecting auxiliary is rejected") {
  Field f = fifth_cyclotomic_field();
  // u and v share the point e0; both lie in the hyperplane x4 = 0 with w.
  ParamLine u = oracles::iline(f, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0});
  ParamLine v = oracles::iline(f, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0});
  ParamLine w = oracles::iline(f, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0});
  CHECK_FALSE(lines_disjoint4(u, v));
  CHECK_THROWS_AS(projection4(u, v, w), SkewnessError);
}

TEST_CASE("parabolic detection") {
  Field f = Field::rationals();
  CHECK(is_parabolic(PglMap(f.one(), f.one(), f.zero(), f.one())));
  CHECK_FALSE(is_parabolic(PglMap::identity(f)));
  CHECK_FALSE(is_parabolic(PglMap(f.zero(), f.one(), f.one(), f.zero())));
}

TEST_CASE("vertex group of the 25-line groupoid is infinite") {
  P4VertexReport report =
      vertex_group_p4(0, default_cap(fifth_cyclotomic_field()));
  CHECK(report.group.infinite);
  CHECK(report.group.label.kind == GroupKind::Infinite);
  REQUIRE(report.parabolic.element.has_value());
  CHECK(is_parabolic(*report.parabolic.element));
  CHECK(report.parabolic.word_length <= 4);
}
