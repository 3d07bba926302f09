#include "gpd/p4ext.hpp"

#include <algorithm>
#include <set>

#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"

namespace gpd {

Field fifth_cyclotomic_field() {
  return Field::from_min_poly(std::vector<long long>{1, 1, 1, 1, 1});
}

namespace {

std::vector<FieldElement> shift_coords(const std::vector<FieldElement>& p) {
  return {p[4], p[0], p[1], p[2], p[3]};
}

std::vector<FieldElement> scale_coords(const std::vector<FieldElement>& p,
                                       const std::vector<FieldElement>& powers) {
  std::vector<FieldElement> out;
  out.reserve(5);
  for (int i = 0; i < 5; ++i) out.push_back(powers[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)]);
  return out;
}

linalg::Matrix stack_lines(std::initializer_list<const ParamLine*> ls) {
  linalg::Matrix m;
  for (const ParamLine* l : ls) {
    m.push_back(l->basis0().coords());
    m.push_back(l->basis1().coords());
  }
  return m;
}

}  // namespace

std::vector<ParamLine> generate_l25() {
  Field f = fifth_cyclotomic_field();
  FieldElement t = f.generator();
  std::vector<FieldElement> powers{f.one(), t, t * t, t * t * t, t * t * t * t};

  std::vector<FieldElement> seed0{f.zero(), f.one(), f.zero(), f.zero(),
                                  f.integer(-1)};
  std::vector<FieldElement> seed1{f.zero(), f.zero(), f.one(), f.integer(-1),
                                  f.zero()};

  std::vector<ParamLine> lines;
  std::set<std::vector<FieldElement>,
           decltype([](const std::vector<FieldElement>& a,
                       const std::vector<FieldElement>& b) {
             for (std::size_t i = 0; i < a.size(); ++i) {
               int c = FieldElement::cmp(a[i], b[i]);
               if (c != 0) return c < 0;
             }
             return false;
           })>
      seen;
  for (int shift = 0; shift < 5; ++shift) {
    for (int scale = 0; scale < 5; ++scale) {
      std::vector<FieldElement> b0 = seed0, b1 = seed1;
      for (int s = 0; s < scale; ++s) {
        b0 = scale_coords(b0, powers);
        b1 = scale_coords(b1, powers);
      }
      for (int s = 0; s < shift; ++s) {
        b0 = shift_coords(b0);
        b1 = shift_coords(b1);
      }
      ParamLine line{ProjPoint(b0), ProjPoint(b1)};
      if (seen.insert(line.subspace_key()).second) {
        lines.push_back(std::move(line));
      }
    }
  }
  if (lines.size() != 25) {
    throw PreconditionError("orbit construction did not yield 25 lines");
  }
  return lines;
}

bool lines_disjoint4(const ParamLine& a, const ParamLine& b) {
  if (a.ambient_coords() != 5 || b.ambient_coords() != 5) {
    throw PreconditionError("disjointness test requires lines of P^4");
  }
  return linalg::rank(stack_lines({&a, &b})) == 4;
}

bool coplanar_triple(const ParamLine& u, const ParamLine& v,
                     const ParamLine& w) {
  return linalg::rank(stack_lines({&u, &v, &w})) <= 4;
}

PglMap projection4(const ParamLine& u, const ParamLine& v,
                   const ParamLine& w) {
  if (!lines_disjoint4(u, v)) {
    throw SkewnessError("auxiliary line meets the source line");
  }
  if (!lines_disjoint4(v, w)) {
    throw SkewnessError("auxiliary line meets the target line");
  }
  if (!coplanar_triple(u, v, w)) {
    throw PreconditionError("projection lines do not share a hyperplane");
  }
  Field f = u.basis0().field();

  // Five 4x4 minors of [p; v0; v1; x], cofactor signs, evaluated at x = w0
  // and x = w1; the j-th row of the 5x2 system for p is (alpha_j, beta_j).
  auto system_rows = [&](const ProjPoint& p) {
    std::vector<std::array<FieldElement, 2>> rows;
    rows.reserve(5);
    const std::vector<const ProjPoint*> pts{&p, &v.basis0(), &v.basis1()};
    for (int drop = 0; drop < 5; ++drop) {
      std::array<FieldElement, 2> row{f.zero(), f.zero()};
      for (int which = 0; which < 2; ++which) {
        const ProjPoint& x = which == 0 ? w.basis0() : w.basis1();
        linalg::Matrix m;
        for (const ProjPoint* q : pts) {
          linalg::Row r;
          for (int c = 0; c < 5; ++c) {
            if (c != drop) r.push_back((*q)[static_cast<std::size_t>(c)]);
          }
          m.push_back(std::move(r));
        }
        linalg::Row last;
        for (int c = 0; c < 5; ++c) {
          if (c != drop) last.push_back(x[static_cast<std::size_t>(c)]);
        }
        m.push_back(std::move(last));
        FieldElement d = linalg::determinant(std::move(m));
        row[static_cast<std::size_t>(which)] = (drop % 2) ? -d : d;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };

  auto rows0 = system_rows(u.basis0());
  auto rows1 = system_rows(u.basis1());
  for (const auto* rows : {&rows0, &rows1}) {
    linalg::Matrix m;
    for (const auto& r : *rows) m.push_back({r[0], r[1]});
    if (linalg::rank(std::move(m)) != 1) {
      throw PreconditionError(
          "projection kernel is not 1-dimensional (degenerate triple)");
    }
  }
  // A nonzero row j for one basis point is nonzero for the other; reading
  // both kernels from the same row keeps the column scales consistent.
  for (int j = 0; j < 5; ++j) {
    const auto& r0 = rows0[static_cast<std::size_t>(j)];
    if (r0[0].is_zero() && r0[1].is_zero()) continue;
    const auto& r1 = rows1[static_cast<std::size_t>(j)];
    return PglMap(r0[1], r1[1], -r0[0], -r1[0]);
  }
  throw PreconditionError("projection system vanished entirely");
}

IncidenceStats incidence_stats(const std::vector<ParamLine>& lines) {
  const int n = static_cast<int>(lines.size());
  IncidenceStats stats;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!lines_disjoint4(lines[static_cast<std::size_t>(i)],
                           lines[static_cast<std::size_t>(j)])) {
        continue;
      }
      // The span of a disjoint pair is a hyperplane; collect incident lines.
      linalg::Matrix span = stack_lines({&lines[static_cast<std::size_t>(i)],
                                         &lines[static_cast<std::size_t>(j)]});
      std::vector<int> incident;
      for (int k = 0; k < n; ++k) {
        linalg::Matrix m = span;
        m.push_back(lines[static_cast<std::size_t>(k)].basis0().coords());
        m.push_back(lines[static_cast<std::size_t>(k)].basis1().coords());
        if (linalg::rank(std::move(m)) == 4) incident.push_back(k);
      }
      if (seen.insert(incident).second) {
        stats.hyperplanes.push_back(std::move(incident));
      }
    }
  }
  std::sort(stats.hyperplanes.begin(), stats.hyperplanes.end());
  std::vector<int> per_line(static_cast<std::size_t>(n), 0);
  for (const auto& h : stats.hyperplanes) {
    ++stats.lines_per_hyperplane[static_cast<int>(h.size())];
    for (int li : h) ++per_line[static_cast<std::size_t>(li)];
  }
  for (int c : per_line) ++stats.hyperplanes_per_line[c];
  return stats;
}

IncidenceStats incidence_stats() { return incidence_stats(generate_l25()); }

bool is_parabolic(const PglMap& m) {
  if (m.is_identity()) return false;
  FieldElement tr = m.trace();
  Field f = m.field();
  return tr * tr == f.integer(4) * m.det();
}

namespace {

// Breadth-first search over composite morphisms from the base, one level per
// word length, deduplicating states by (line, canonical map). Stops at the
// first parabolic loop found.
ParabolicSearchResult parabolic_search(const Configuration& c,
                                       const GroupoidAnalysis& a, int base,
                                       int max_word_length) {
  std::map<int, std::vector<const SimpleMorphism*>> outgoing;
  for (const SimpleMorphism& g : a.generators) outgoing[g.src].push_back(&g);

  using State = std::pair<int, PglMap>;
  auto state_less = [](const State& x, const State& y) {
    if (x.first != y.first) return x.first < y.first;
    return PglMap::cmp(x.second, y.second) < 0;
  };
  std::set<State, decltype(state_less)> seen(state_less);
  std::vector<State> level{{base, PglMap::identity(c.field)}};
  seen.insert(level.front());

  ParabolicSearchResult result;
  constexpr std::size_t kStateCap = 2'000'000;
  for (int depth = 1; depth <= max_word_length; ++depth) {
    std::vector<State> next;
    for (const auto& [line, map] : level) {
      auto it = outgoing.find(line);
      if (it == outgoing.end()) continue;
      for (const SimpleMorphism* g : it->second) {
        State s{g->dst, g->map * map};
        if (!seen.insert(s).second) continue;
        ++result.states_explored;
        if (s.first == base && is_parabolic(s.second)) {
          result.element = s.second;
          result.word_length = depth;
          return result;
        }
        next.push_back(std::move(s));
        if (result.states_explored > kStateCap) return result;
      }
    }
    level = std::move(next);
  }
  return result;
}

}  // namespace

P4VertexReport vertex_group_p4(int base, std::size_t cap,
                               int max_word_length) {
  Configuration c;
  c.field = fifth_cyclotomic_field();
  c.lines = generate_l25();
  c.name = "p4_25";
  GroupoidAnalysis a = enumerate_generators(c);

  P4VertexReport report;
  report.group = vertex_group(c, a, base, cap);
  report.parabolic = parabolic_search(c, a, base, max_word_length);
  return report;
}

}  // namespace gpd
