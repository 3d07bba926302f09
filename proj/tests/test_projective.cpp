#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/configs.hpp"
#include "gpd/projective.hpp"
#include "gpd/sampling.hpp"
#include "oracles.hpp"

using namespace gpd;
using oracles::iline;
using oracles::ipt;

TEST_CASE("projective points canonicalize") {
  Field f = Field::rationals();
  ProjPoint p = ipt(f, {2, 4, 0, 6});
  CHECK(p[0].is_one());
  CHECK(p[1] == f.integer(2));
  CHECK(p == ipt(f, {1, 2, 0, 3}));
  CHECK_THROWS_AS(ProjPoint({f.zero(), f.zero()}), PreconditionError);
}

TEST_CASE("wedge4 against the cofactor oracle") {
  Field f = Field::rationals();
  ProjPoint e1 = ipt(f, {1, 0, 0, 0}), e2 = ipt(f, {0, 1, 0, 0});
  ProjPoint e3 = ipt(f, {0, 0, 1, 0}), e4 = ipt(f, {0, 0, 0, 1});
  CHECK(wedge4(e1, e2, e3, e4) == f.one());
  ProjPoint r = ipt(f, {0, 1, 0, 1});
  CHECK(wedge4(e1, e1, e3, r).is_zero());
  CHECK(wedge4(e1, e3, e4, r) == f.one());
  CHECK_THROWS_AS(wedge4(ProjPoint({f.one(), f.zero()}), e2, e3, e4),
                  PreconditionError);

  sampling::Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    ProjPoint a = sampling::random_point(f, 4, rng);
    ProjPoint b = sampling::random_point(f, 4, rng);
    ProjPoint c = sampling::random_point(f, 4, rng);
    ProjPoint d = sampling::random_point(f, 4, rng);
    CHECK(wedge4(a, b, c, d) ==
          oracles::cofactor_det(
              {a.coords(), b.coords(), c.coords(), d.coords()}));
  }
}

TEST_CASE("skewness") {
  Configuration quad = builtin(Builtin::Quadric4);
  CHECK(lines_skew(quad.lines[0], quad.lines[1]));

  Configuration d4 = builtin(Builtin::D4);
  CHECK_FALSE(lines_skew(d4.lines[0], d4.lines[1]));  // shared basis point

  Configuration klein = builtin(Builtin::Klein);
  CHECK(lines_skew(klein.lines[7], klein.lines[0]));
}

TEST_CASE("projection matrix basics") {
  Configuration quad = builtin(Builtin::Quadric4);
  const ParamLine &a = quad.lines[0], &b = quad.lines[1], &c = quad.lines[2];

  // pi(a,b,c) for the quadric lines is the identity in PGL(2).
  CHECK(projection_matrix(a, b, c).is_identity());
  // W = U collapses to a scalar matrix.
  CHECK(projection_matrix(a, b, a).is_identity());

  CHECK_THROWS_AS(projection_matrix(a, a, c), SkewnessError);
  CHECK_THROWS_WITH_AS(projection_matrix(builtin(Builtin::D4).lines[0],
                                         builtin(Builtin::D4).lines[1],
                                         builtin(Builtin::D4).lines[2]),
                       "auxiliary line meets the source line", SkewnessError);
}

TEST_CASE("canonical matrix scaling") {
  Field f = oracles::f3();
  FieldElement t = f.generator();
  PglMap two(f.integer(2), f.zero(), f.zero(), f.integer(2));
  CHECK(two.is_identity());

  PglMap m(f.zero(), -f.one(), t, f.zero());
  CHECK(m == PglMap(f.zero(), f.one(), -t, f.zero()));

  CHECK_THROWS_AS(PglMap(f.one(), f.one(), f.one(), f.one()),
                  SingularMatrixError);

  sampling::Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    PglMap r = sampling::random_invertible_map(f, rng);
    CHECK(PglMap(r.at(0, 0), r.at(0, 1), r.at(1, 0), r.at(1, 1)) == r);
  }
}

TEST_CASE("apply_map matches the quoted actions") {
  Field f = oracles::f3();
  FieldElement t = f.generator();
  // f = [[-1,2t+1],[1,1]] sends (1,0) to (-1,1).
  PglMap fm(-f.one(), f.integer(2) * t + f.one(), f.one(), f.one());
  CHECK(apply_map(fm, ProjPoint({f.one(), f.zero()})) ==
        ProjPoint({-f.one(), f.one()}));

  CHECK(apply_map(PglMap::identity(f), ProjPoint({t, f.one()})) ==
        ProjPoint({t, f.one()}));

  // [[0,t^2],[1,0]] sends (-t^2,1) to (1,-1) ~ (-1,1).
  PglMap swap_t(f.zero(), t * t, f.one(), f.zero());
  CHECK(apply_map(swap_t, ProjPoint({-(t * t), f.one()})) ==
        ProjPoint({f.one(), -f.one()}));
}

TEST_CASE("compose respects endpoints") {
  Field f = Field::rationals();
  Morphism id0{0, 0, PglMap::identity(f)};
  Morphism m01{0, 1, PglMap(f.one(), f.one(), f.zero(), f.one())};
  Morphism back{1, 0, PglMap(f.one(), -f.one(), f.zero(), f.one())};

  Morphism loop = compose(back, m01);
  CHECK(loop.src == 0);
  CHECK(loop.dst == 0);
  CHECK(loop.map.is_identity());
  CHECK(compose(m01, id0).map == m01.map);
  CHECK_THROWS_AS(compose(m01, m01), PreconditionError);
}

TEST_CASE("mobius interpolation") {
  Field f = oracles::f3();
  FieldElement t = f.generator();
  ProjPoint inf({f.one(), f.zero()});
  ProjPoint zero({f.zero(), f.one()});
  ProjPoint one({f.one(), f.one()});

  CHECK(mobius_from_triples({inf, zero, one}, {inf, zero, one}).is_identity());
  CHECK(mobius_from_triples({inf, zero, one}, {zero, inf, one}) ==
        PglMap(f.zero(), f.one(), f.one(), f.zero()));

  ProjPoint tp({t, f.one()});
  CHECK(mobius_from_triples({inf, zero, tp}, {zero, inf, tp}) ==
        PglMap(f.zero(), t * t, f.one(), f.zero()));

  CHECK_THROWS_AS(mobius_from_triples({inf, inf, one}, {inf, zero, one}),
                  PreconditionError);

  sampling::Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    std::array<ProjPoint, 3> src{sampling::random_point(f, 2, rng),
                                 sampling::random_point(f, 2, rng),
                                 sampling::random_point(f, 2, rng)};
    std::array<ProjPoint, 3> dst{sampling::random_point(f, 2, rng),
                                 sampling::random_point(f, 2, rng),
                                 sampling::random_point(f, 2, rng)};
    auto distinct = [](const std::array<ProjPoint, 3>& v) {
      return v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
    };
    if (!distinct(src) || !distinct(dst)) continue;
    PglMap m = mobius_from_triples(src, dst);
    for (int k = 0; k < 3; ++k) {
      CHECK(m.apply(src[static_cast<std::size_t>(k)]) ==
            dst[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("element orders") {
  CHECK(max_finite_order(1) == 6);
  CHECK(max_finite_order(2) == 12);
  CHECK(max_finite_order(4) == 30);

  Field f = oracles::f3();
  FieldElement t = f.generator();
  CHECK(element_order(PglMap::identity(f), f) == 1);
  CHECK(element_order(PglMap(t, f.one(), f.zero(), t * t), f) == 3);
  CHECK(element_order(PglMap(f.one(), f.one(), f.zero(), f.one()), f) ==
        std::nullopt);
}

TEST_CASE("parameters and ambient points round-trip") {
  Configuration pen = builtin(Builtin::Penrose);
  Field f = pen.field;
  FieldElement t = f.generator();
  ProjPoint param({-(t * t), f.one()});
  CHECK(point_on_line(pen.lines[0], param) == ipt(f, {1, 0, 0, 0}));
  CHECK(parameter_of_point(pen.lines[0], ipt(f, {1, 0, 0, 0})) == param);
  CHECK_THROWS_AS(parameter_of_point(pen.lines[0], ipt(f, {0, 1, 0, 0})),
                  PreconditionError);
}

TEST_CASE("line intersections") {
  Field f = Field::rationals();
  ParamLine l1 = iline(f, {1, 0, 0, 0}, {0, 1, 0, 0});
  ParamLine l2 = iline(f, {0, 0, 1, 0}, {0, 0, 0, 1});
  CHECK(!line_intersection(l1, l2).has_value());

  ParamLine l3 = iline(f, {1, 0, 0, 0}, {0, 0, 1, 0});
  auto p = line_intersection(l1, l3);
  REQUIRE(p.has_value());
  CHECK(*p == ipt(f, {1, 0, 0, 0}));

  ParamLine l1b = iline(f, {1, 1, 0, 0}, {1, -1, 0, 0});
  CHECK_THROWS_AS(line_intersection(l1, l1b), PreconditionError);
}
