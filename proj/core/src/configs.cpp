#include "gpd/configs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "gpd/p4ext.hpp"

namespace gpd {

namespace {

Field third_cyclotomic_field() {
  return Field::from_min_poly(std::vector<long long>{1, 1, 1});
}

Field gaussian_field() {
  return Field::from_min_poly(std::vector<long long>{1, 0, 1}, "i");
}

ProjPoint int_point(const Field& f, std::initializer_list<long long> coords) {
  std::vector<FieldElement> v;
  v.reserve(coords.size());
  for (long long c : coords) v.push_back(f.integer(c));
  return ProjPoint(std::move(v));
}

ParamLine int_line(const Field& f, std::initializer_list<long long> r0,
                   std::initializer_list<long long> r1) {
  return ParamLine(int_point(f, r0), int_point(f, r1));
}

Configuration quadric4_config() {
  Field f = Field::rationals();
  Configuration c;
  c.field = f;
  c.name = "quadric4";
  c.lines = {int_line(f, {1, 0, 0, 0}, {0, 1, 0, 0}),
             int_line(f, {0, 0, 1, 0}, {0, 0, 0, 1}),
             int_line(f, {1, 0, 1, 0}, {0, 1, 0, 1}),
             int_line(f, {-1, 0, 1, 0}, {0, -1, 0, 1})};
  return c;
}

// Marked points of the D4 are its triple of quadruple points per line,
// expressed as P^1 parameters and sorted canonically.
std::vector<std::vector<ProjPoint>> d4_marked(const Configuration& c) {
  std::vector<MultiPoint> pts = multi_points(c, 4);
  std::vector<std::vector<ProjPoint>> marked(c.lines.size());
  for (const MultiPoint& mp : pts) {
    for (int li : mp.lines) {
      marked[static_cast<std::size_t>(li)].push_back(
          parameter_of_point(c.lines[static_cast<std::size_t>(li)], mp.point));
    }
  }
  for (auto& pts_of_line : marked) {
    std::sort(pts_of_line.begin(), pts_of_line.end(), ProjPointLess{});
  }
  return marked;
}

Configuration d4_config() {
  Field f = Field::rationals();
  Configuration c;
  c.field = f;
  c.name = "d4";
  // Four blocks of four lines; every line in a block shares its first basis
  // row. The basis data is validated by the (12_4,16_3) incidence tests.
  const std::array<std::array<long long, 4>, 4> firsts{
      {{0, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}}};
  const std::array<std::array<long long, 4>, 4> seconds{
      {{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 2}}};
  for (const auto& a : firsts) {
    for (const auto& b : seconds) {
      c.lines.emplace_back(int_line(f, {a[0], a[1], a[2], a[3]},
                                    {b[0], b[1], b[2], b[3]}));
    }
  }
  c.marked = d4_marked(c);
  return c;
}

Configuration d4sub6_config() {
  Configuration d4 = d4_config();
  Configuration c;
  c.field = d4.field;
  c.name = "d4sub6";
  c.marked.emplace();
  for (int idx : {1, 4, 8, 10, 14, 15}) {
    c.lines.push_back(d4.lines[static_cast<std::size_t>(idx)]);
    c.marked->push_back((*d4.marked)[static_cast<std::size_t>(idx)]);
  }
  return c;
}

std::vector<ParamLine> penrose_lines(const Field& f) {
  FieldElement t = f.generator();
  FieldElement t2 = t * t;
  FieldElement one = f.one(), zero = f.zero();
  auto line = [&](std::initializer_list<FieldElement> r0,
                  std::initializer_list<FieldElement> r1) {
    return ParamLine(ProjPoint(std::vector<FieldElement>(r0)),
                     ProjPoint(std::vector<FieldElement>(r1)));
  };
  return {
      line({one, zero, -t2, -t2}, {one, zero, -t, -t}),
      line({zero, one, -t2, t2}, {zero, one, -t, t}),
      line({one, zero, -t2, -t}, {zero, one, -t, t2}),
      line({zero, one, -t2, t}, {one, zero, -t, -t2}),
      line({zero, one, -t, one}, {one, zero, -one, -t}),
      line({one, zero, -t, -one}, {zero, one, -one, t}),
      line({one, zero, -one, -t2}, {zero, one, -t2, one}),
      line({zero, one, -one, t2}, {one, zero, -t2, -one}),
      line({one, one, t, zero}, {one, one, t2, zero}),
      line({one, -one, zero, t}, {one, -one, zero, t2}),
  };
}

Configuration penrose_config() {
  Field f = third_cyclotomic_field();
  Configuration c;
  c.field = f;
  c.name = "penrose";
  c.lines = penrose_lines(f);
  PenroseParameterSets sets = penrose_parameter_sets();
  c.marked.emplace();
  for (int i = 0; i < 10; ++i) {
    c.marked->push_back(i < 8 ? sets.x_tilde : sets.y_tilde);
  }
  return c;
}

Configuration penrose_half_config() {
  Field f = third_cyclotomic_field();
  std::vector<ParamLine> all = penrose_lines(f);
  PenroseParameterSets sets = penrose_parameter_sets();
  Configuration c;
  c.field = f;
  c.name = "penrose_half";
  c.marked.emplace();
  for (int idx : {0, 2, 4, 6, 8}) {
    c.lines.push_back(all[static_cast<std::size_t>(idx)]);
    c.marked->push_back(idx == 8 ? sets.y : sets.x);
  }
  return c;
}

Configuration klein_config() {
  Field f = gaussian_field();
  FieldElement i = f.generator();
  FieldElement one = f.one(), zero = f.zero();
  auto line = [&](std::initializer_list<FieldElement> r0,
                  std::initializer_list<FieldElement> r1) {
    return ParamLine(ProjPoint(std::vector<FieldElement>(r0)),
                     ProjPoint(std::vector<FieldElement>(r1)));
  };
  Configuration c;
  c.field = f;
  c.name = "klein";
  c.lines = {
      line({zero, zero, one, zero}, {zero, zero, zero, one}),
      line({zero, one, zero, -i}, {one, zero, i, zero}),
      line({zero, one, one, zero}, {one, zero, zero, -one}),
      line({zero, one, i, zero}, {one, zero, zero, i}),
      line({zero, one, -one, zero}, {one, zero, zero, one}),
      line({zero, one, -i, zero}, {one, zero, zero, -i}),
      line({zero, one, zero, one}, {one, zero, one, zero}),
      line({one, zero, zero, zero}, {zero, one, zero, zero}),
      line({zero, one, zero, i}, {one, zero, -i, zero}),
      line({zero, one, zero, -one}, {one, zero, -one, zero}),
  };
  c.marked.emplace(10, klein_parameter_set());
  return c;
}

Configuration p4_config() {
  Configuration c;
  c.field = fifth_cyclotomic_field();
  c.lines = generate_l25();
  c.name = "p4_25";
  return c;
}

}  // namespace

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "quadric4") return Builtin::Quadric4;
  if (name == "d4") return Builtin::D4;
  if (name == "d4sub6") return Builtin::D4Sub6;
  if (name == "penrose") return Builtin::Penrose;
  if (name == "penrose_half") return Builtin::PenroseHalf;
  if (name == "klein") return Builtin::Klein;
  if (name == "p4_25") return Builtin::P4_25;
  return std::nullopt;
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Quadric4: return "quadric4";
    case Builtin::D4: return "d4";
    case Builtin::D4Sub6: return "d4sub6";
    case Builtin::Penrose: return "penrose";
    case Builtin::PenroseHalf: return "penrose_half";
    case Builtin::Klein: return "klein";
    case Builtin::P4_25: return "p4_25";
  }
  return "?";
}

std::vector<std::string> builtin_names() {
  return {"quadric4", "d4",    "d4sub6", "penrose",
          "penrose_half", "klein", "p4_25"};
}

Configuration builtin(Builtin b) {
  switch (b) {
    case Builtin::Quadric4: return quadric4_config();
    case Builtin::D4: return d4_config();
    case Builtin::D4Sub6: return d4sub6_config();
    case Builtin::Penrose: return penrose_config();
    case Builtin::PenroseHalf: return penrose_half_config();
    case Builtin::Klein: return klein_config();
    case Builtin::P4_25: return p4_config();
  }
  throw PreconditionError("unknown builtin configuration");
}

PenroseParameterSets penrose_parameter_sets() {
  Field f = third_cyclotomic_field();
  FieldElement t = f.generator();
  FieldElement t2 = t * t;
  FieldElement one = f.one(), zero = f.zero();
  auto p = [](FieldElement a, FieldElement b) {
    return ProjPoint({std::move(a), std::move(b)});
  };
  PenroseParameterSets s;
  s.x = {p(one, zero), p(zero, one), p(t, one), p(-t2, one)};
  s.y = {p(one, zero), p(zero, one), p(-one, one), p(t2, one)};
  FieldElement two_t_one = f.integer(2) * t + one;
  s.x_tilde = s.x;
  s.x_tilde.push_back(p(one, one));
  s.x_tilde.push_back(p(-one, one));
  s.x_tilde.push_back(p(two_t_one, one));
  s.x_tilde.push_back(p(-one, two_t_one));
  s.y_tilde = s.y;
  s.y_tilde.push_back(p(t, one));
  s.y_tilde.push_back(p(-t, one));
  s.y_tilde.push_back(p(one, t - one));
  s.y_tilde.push_back(p(f.integer(3), t - one));
  return s;
}

std::vector<ProjPoint> klein_parameter_set() {
  Field f = gaussian_field();
  FieldElement i = f.generator();
  FieldElement one = f.one(), zero = f.zero();
  return {ProjPoint({one, zero}),  ProjPoint({zero, one}),
          ProjPoint({one, one}),   ProjPoint({-one, one}),
          ProjPoint({i, one}),     ProjPoint({-i, one})};
}

std::vector<ProjPoint> generate_marked_points(const Configuration& c) {
  if (!c.marked) {
    throw PreconditionError("configuration has no marked points");
  }
  std::vector<ProjPoint> out;
  std::set<ProjPoint, ProjPointLess> seen;
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    for (const ProjPoint& param : (*c.marked)[i]) {
      ProjPoint ambient = point_on_line(c.lines[i], param);
      if (seen.insert(ambient).second) out.push_back(std::move(ambient));
    }
  }
  return out;
}

namespace {

std::vector<ProjPoint> penrose_family(bool quasi) {
  Field f = third_cyclotomic_field();
  std::vector<ParamLine> lines = penrose_lines(f);
  PenroseParameterSets sets = penrose_parameter_sets();
  Configuration c;
  c.field = f;
  c.lines = std::move(lines);
  c.marked.emplace();
  for (int i = 0; i < 10; ++i) {
    if (!quasi) {
      c.marked->push_back(i < 8 ? sets.x : sets.y);
    } else {
      std::vector<ProjPoint> qs(i < 8 ? sets.x_tilde.begin() + 4
                                      : sets.y_tilde.begin() + 4,
                                i < 8 ? sets.x_tilde.end()
                                      : sets.y_tilde.end());
      c.marked->push_back(std::move(qs));
    }
  }
  return generate_marked_points(c);
}

}  // namespace

std::vector<ProjPoint> penrose_points() { return penrose_family(false); }

std::vector<ProjPoint> quasi_penrose_points() { return penrose_family(true); }

std::vector<MultiPoint> multi_points(const Configuration& c,
                                     int multiplicity) {
  if (c.lines.size() < 2) {
    throw PreconditionError("multi_points needs at least two lines");
  }
  std::map<ProjPoint, std::set<int>, ProjPointLess> incidence;
  const int n = static_cast<int>(c.lines.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto pt = line_intersection(c.lines[static_cast<std::size_t>(i)],
                                  c.lines[static_cast<std::size_t>(j)]);
      if (!pt) continue;
      auto& ls = incidence[*pt];
      ls.insert(i);
      ls.insert(j);
    }
  }
  std::vector<MultiPoint> out;
  for (auto& [pt, ls] : incidence) {
    if (static_cast<int>(ls.size()) >= multiplicity) {
      out.push_back(MultiPoint{pt, std::vector<int>(ls.begin(), ls.end())});
    }
  }
  return out;
}

bool double_penrose_check() {
  Field f = third_cyclotomic_field();
  const std::array<std::array<long long, 4>, 4> a{
      {{0, 0, 1, 1}, {0, 0, 1, -1}, {-1, -1, 0, 0}, {-1, 1, 0, 0}}};
  std::set<ProjPoint, ProjPointLess> image;
  for (const ProjPoint& p : penrose_points()) {
    std::vector<FieldElement> q;
    q.reserve(4);
    for (int r = 0; r < 4; ++r) {
      FieldElement acc = f.zero();
      for (int col = 0; col < 4; ++col) {
        acc = acc + f.integer(a[static_cast<std::size_t>(r)]
                               [static_cast<std::size_t>(col)]) *
                        p[static_cast<std::size_t>(col)];
      }
      q.push_back(std::move(acc));
    }
    image.insert(ProjPoint(std::move(q)));
  }
  std::vector<ProjPoint> quasi = quasi_penrose_points();
  std::set<ProjPoint, ProjPointLess> target(quasi.begin(), quasi.end());
  return image == target;
}

}  // namespace gpd
