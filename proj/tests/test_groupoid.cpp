#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gpd/configs.hpp"
#include "gpd/groupoid.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

std::set<PglMap, PglMapLess> element_set(const GroupResult& g) {
  return {g.elements.begin(), g.elements.end()};
}

}  // namespace

TEST_CASE("generator enumeration counts") {
  GroupoidAnalysis quad = enumerate_generators(builtin(Builtin::Quadric4));
  CHECK(quad.generators.size() == 24);
  for (const auto& [pair, n] : quad.aux_counts) CHECK(n == 2);

  GroupoidAnalysis d4 = enumerate_generators(builtin(Builtin::D4));
  CHECK(d4.generators.size() == 480);
  for (const auto& [pair, n] : d4.aux_counts) CHECK(n == 2);

  GroupoidAnalysis klein = enumerate_generators(builtin(Builtin::Klein));
  CHECK(klein.generators.size() == 720);
  for (const auto& [pair, n] : klein.aux_counts) CHECK(n == 8);

  GroupoidAnalysis half = enumerate_generators(builtin(Builtin::PenroseHalf));
  CHECK(half.generators.size() == 60);
}

TEST_CASE("generators come in inverse pairs") {
  Configuration d4 = builtin(Builtin::D4);
  GroupoidAnalysis a = enumerate_generators(d4);
  std::set<std::tuple<int, int, int>> triples;
  for (const SimpleMorphism& g : a.generators) {
    triples.insert({g.src, g.aux, g.dst});
  }
  for (const SimpleMorphism& g : a.generators) {
    CHECK(triples.count({g.dst, g.aux, g.src}) == 1);
    PglMap reverse = projection_matrix(d4.lines[static_cast<std::size_t>(g.dst)],
                                       d4.lines[static_cast<std::size_t>(g.aux)],
                                       d4.lines[static_cast<std::size_t>(g.src)]);
    Morphism loop = compose(Morphism{g.dst, g.src, reverse}, g.morphism());
    CHECK(loop.map.is_identity());
    CHECK(loop.src == g.src);
  }
}

TEST_CASE("connectivity") {
  GroupoidAnalysis d4 = enumerate_generators(builtin(Builtin::D4));
  CHECK(connectivity(d4).size() == 1);

  // Two skew lines alone admit no auxiliary: two singleton components.
  Field f = Field::rationals();
  Configuration two;
  two.field = f;
  two.lines = {oracles::iline(f, {1, 0, 0, 0}, {0, 1, 0, 0}),
               oracles::iline(f, {0, 0, 1, 0}, {0, 0, 0, 1})};
  GroupoidAnalysis a = enumerate_generators(two);
  CHECK(a.generators.empty());
  auto comps = connectivity(a);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1});

  GroupoidAnalysis pen = enumerate_generators(builtin(Builtin::Penrose));
  CHECK(connectivity(pen).size() == 1);
}

TEST_CASE("vertex groups of the builtins") {
  Configuration quad = builtin(Builtin::Quadric4);
  GroupoidAnalysis qa = enumerate_generators(quad);
  for (int base = 0; base < 4; ++base) {
    GroupResult g = vertex_group(quad, qa, base, default_cap(quad.field));
    CHECK(g.order() == 1);
    CHECK(g.label.kind == GroupKind::Trivial);
  }

  Configuration d4 = builtin(Builtin::D4);
  GroupoidAnalysis da = enumerate_generators(d4);
  GroupResult g0 = vertex_group(d4, da, 0, default_cap(d4.field));
  CHECK(g0.order() == 6);
  CHECK(g0.label == GroupLabel{GroupKind::Dihedral, 6});
  CHECK(g0.histogram == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});
  for (int base = 1; base < 16; ++base) {
    GroupResult g = vertex_group(d4, da, base, default_cap(d4.field));
    CHECK(g.order() == g0.order());
    CHECK(g.label == g0.label);
  }

  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis ka = enumerate_generators(klein);
  GroupResult kg = vertex_group(klein, ka, 0, default_cap(klein.field));
  CHECK(kg.order() == 24);
  CHECK(kg.label == GroupLabel{GroupKind::S4, 24});

  CHECK_THROWS_AS(vertex_group(klein, ka, 99, default_cap(klein.field)),
                  PreconditionError);
}

TEST_CASE("vertex group does not depend on the spanning-tree tie-break") {
  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis a = enumerate_generators(klein);
  GroupResult asc = vertex_group(klein, a, 0, default_cap(klein.field),
                                 TreeOrder::AscendingIndex);
  GroupResult desc = vertex_group(klein, a, 0, default_cap(klein.field),
                                  TreeOrder::DescendingIndex);
  CHECK(element_set(asc) == element_set(desc));
}

TEST_CASE("isolated line yields the trivial vertex group") {
  Field f = Field::rationals();
  Configuration two;
  two.field = f;
  two.lines = {oracles::iline(f, {1, 0, 0, 0}, {0, 1, 0, 0}),
               oracles::iline(f, {0, 0, 1, 0}, {0, 0, 0, 1})};
  GroupoidAnalysis a = enumerate_generators(two);
  GroupResult g = vertex_group(two, a, 0, default_cap(f));
  CHECK(g.order() == 1);
  CHECK(g.label.kind == GroupKind::Trivial);
}

TEST_CASE("orbits") {
  Field f = Field::rationals();
  Configuration single;
  single.field = f;
  single.lines = {oracles::iline(f, {1, 0, 0, 0}, {0, 1, 0, 0})};
  GroupoidAnalysis sa = enumerate_generators(single);
  OrbitResult so = orbit(single, sa, 0, ProjPoint({f.one(), f.zero()}));
  CHECK(so.members.size() == 1);
  CHECK_FALSE(so.truncated);

  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis ka = enumerate_generators(klein);
  Field fi = klein.field;
  OrbitResult ko = orbit(klein, ka, 0, ProjPoint({fi.one(), fi.zero()}));
  CHECK(ko.members.size() == 60);
  CHECK_FALSE(ko.truncated);

  // Orbit members are closed under every simple morphism.
  std::set<std::pair<int, ProjPoint>,
           decltype([](const auto& x, const auto& y) {
             if (x.first != y.first) return x.first < y.first;
             return ProjPoint::cmp(x.second, y.second) < 0;
           })>
      members(ko.members.begin(), ko.members.end());
  for (const auto& [li, p] : ko.members) {
    for (const SimpleMorphism& g : ka.generators) {
      if (g.src != li) continue;
      CHECK(members.count({g.dst, g.map.apply(p)}) == 1);
    }
  }

  OrbitResult truncated = orbit(klein, ka, 0, ProjPoint({fi.one(), fi.zero()}), 5);
  CHECK(truncated.truncated);
  CHECK(truncated.members.size() == 5);

  CHECK_THROWS_AS(orbit(klein, ka, -1, ProjPoint({fi.one(), fi.zero()})),
                  PreconditionError);
}

TEST_CASE("marked invariance") {
  Configuration pen = builtin(Builtin::Penrose);
  GroupoidAnalysis pa = enumerate_generators(pen);
  InvarianceReport rep = marked_invariance(pen, pa);
  CHECK(rep.holds);
  CHECK(rep.checked == 720);

  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis ka = enumerate_generators(klein);
  CHECK(marked_invariance(klein, ka).holds);

  // Perturbing one Klein marked point to (2,1) breaks invariance with a
  // concrete counterexample.
  Field fi = klein.field;
  (*klein.marked)[0][0] = ProjPoint({fi.integer(2), fi.one()});
  InvarianceReport broken = marked_invariance(klein, ka);
  CHECK_FALSE(broken.holds);
  CHECK(broken.counterexample.has_value());
  CHECK(broken.offending_point.has_value());

  Configuration quad = builtin(Builtin::Quadric4);
  GroupoidAnalysis qa = enumerate_generators(quad);
  CHECK_THROWS_AS(marked_invariance(quad, qa), PreconditionError);
}

TEST_CASE("vertex group permutes the marked set of the base line") {
  for (Builtin b : {Builtin::Klein, Builtin::Penrose, Builtin::D4}) {
    Configuration c = builtin(b);
    GroupoidAnalysis a = enumerate_generators(c);
    GroupResult g = vertex_group(c, a, 0, default_cap(c.field));
    std::set<ProjPoint, ProjPointLess> marked((*c.marked)[0].begin(),
                                              (*c.marked)[0].end());
    for (const PglMap& m : g.elements) {
      for (const ProjPoint& p : marked) CHECK(marked.count(m.apply(p)) == 1);
    }
  }
}

TEST_CASE("configuration validation") {
  Field f = Field::rationals();
  Configuration dup;
  dup.field = f;
  dup.lines = {oracles::iline(f, {1, 0, 0, 0}, {0, 1, 0, 0}),
               oracles::iline(f, {1, 1, 0, 0}, {1, -1, 0, 0})};
  CHECK_THROWS_AS(dup.validate(), PreconditionError);
}
