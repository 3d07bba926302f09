#include "gpd/d4_model.hpp"

#include <algorithm>
#include <map>

#include "gpd/configs.hpp"

namespace gpd::d4 {

std::string Label::str() const {
  static const char* letters = "ABC";
  return std::string(1, letters[static_cast<int>(letter)]) + "+(" +
         std::to_string(g.bits & 1) + "," + std::to_string((g.bits >> 1) & 1) +
         ")";
}

std::vector<LineTriple> all_triples() {
  std::vector<LineTriple> out;
  out.reserve(16);
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::uint8_t b = 0; b < 4; ++b) {
      out.push_back(LineTriple{Z2x2{a}, Z2x2{b}, Z2x2{a} + Z2x2{b}});
    }
  }
  return out;
}

Label combinatorial_pi(const LineTriple& dom, const LineTriple& aux,
                       const LineTriple& cod, const Label& p) {
  if (!aux.disjoint_from(dom)) {
    throw PreconditionError("auxiliary triple shares a label with the domain");
  }
  if (!aux.disjoint_from(cod)) {
    throw PreconditionError("auxiliary triple shares a label with the codomain");
  }
  if (!dom.contains(p)) {
    throw PreconditionError("label does not lie on the domain triple");
  }
  if (cod.contains(p)) return p;  // shared point is fixed

  std::optional<Label> image;
  constexpr std::array<Letter, 3> letters{Letter::A, Letter::B, Letter::C};
  for (Letter ql : letters) {
    if (ql == p.letter) continue;
    Letter rl = Letter::A;
    for (Letter cand : letters) {
      if (cand != p.letter && cand != ql) rl = cand;
    }
    Label q{ql, cod.part(ql)};
    Label r{rl, aux.part(rl)};
    if ((p.g + r.g + q.g).is_zero()) {
      if (image) {
        throw PreconditionError("collinearity rule is not unique");
      }
      image = q;
    }
  }
  if (!image) {
    throw PreconditionError("collinearity rule has no solution");
  }
  return *image;
}

std::size_t check_projection_rule() {
  std::vector<LineTriple> triples = all_triples();
  std::size_t checked = 0;
  for (const LineTriple& dom : triples) {
    for (const LineTriple& aux : triples) {
      if (!aux.disjoint_from(dom)) continue;
      for (const LineTriple& cod : triples) {
        if (!aux.disjoint_from(cod) || dom == cod) continue;
        for (Letter l : {Letter::A, Letter::B, Letter::C}) {
          Label p{l, dom.part(l)};
          if (cod.contains(p)) continue;
          combinatorial_pi(dom, aux, cod, p);  // throws unless unique
          ++checked;
        }
      }
    }
  }
  return checked;
}

namespace {

struct Incidence {
  std::vector<ProjPoint> points;                 // sorted canonically
  std::vector<std::vector<int>> points_of_line;  // 3 point indices per line
};

Incidence incidence_structure(const Configuration& c) {
  std::vector<MultiPoint> quads = multi_points(c, 4);
  if (quads.size() != 12 || c.lines.size() != 16) {
    throw PreconditionError(
        "configuration does not have the (12_4,16_3) incidence structure");
  }
  Incidence inc;
  inc.points_of_line.assign(16, {});
  for (std::size_t pi = 0; pi < quads.size(); ++pi) {
    if (quads[pi].lines.size() != 4) {
      throw PreconditionError("a quadruple point lies on != 4 lines");
    }
    inc.points.push_back(quads[pi].point);
    for (int li : quads[pi].lines) {
      inc.points_of_line[static_cast<std::size_t>(li)].push_back(
          static_cast<int>(pi));
    }
  }
  for (const auto& pts : inc.points_of_line) {
    if (pts.size() != 3) {
      throw PreconditionError("a line contains != 3 quadruple points");
    }
  }
  return inc;
}

struct Searcher {
  const Incidence& inc;
  std::vector<std::vector<int>> lines_of_point;  // 4 lines per point
  std::vector<std::optional<Label>> assignment;  // per point
  std::array<bool, 12> used{};                   // label index = letter*4+g

  explicit Searcher(const Incidence& incidence) : inc(incidence) {
    lines_of_point.assign(12, {});
    for (int li = 0; li < 16; ++li) {
      for (int pi : inc.points_of_line[static_cast<std::size_t>(li)]) {
        lines_of_point[static_cast<std::size_t>(pi)].push_back(li);
      }
    }
    assignment.assign(12, std::nullopt);
  }

  static int label_index(const Label& l) {
    return static_cast<int>(l.letter) * 4 + l.g.bits;
  }

  bool line_consistent(int li) const {
    std::array<int, 3> letter_count{0, 0, 0};
    std::uint8_t gsum = 0;
    int assigned = 0;
    for (int pi : inc.points_of_line[static_cast<std::size_t>(li)]) {
      const auto& lab = assignment[static_cast<std::size_t>(pi)];
      if (!lab) continue;
      ++assigned;
      ++letter_count[static_cast<std::size_t>(lab->letter)];
      gsum ^= lab->g.bits;
    }
    for (int cnt : letter_count) {
      if (cnt > 1) return false;
    }
    if (assigned == 3 && gsum != 0) return false;
    return true;
  }

  bool search(int pi) {
    if (pi == 12) return true;
    for (int letter = 0; letter < 3; ++letter) {
      for (std::uint8_t g = 0; g < 4; ++g) {
        Label lab{static_cast<Letter>(letter), Z2x2{g}};
        int idx = label_index(lab);
        if (used[static_cast<std::size_t>(idx)]) continue;
        assignment[static_cast<std::size_t>(pi)] = lab;
        used[static_cast<std::size_t>(idx)] = true;
        bool ok = true;
        for (int li : lines_of_point[static_cast<std::size_t>(pi)]) {
          if (!line_consistent(li)) {
            ok = false;
            break;
          }
        }
        if (ok && search(pi + 1)) return true;
        assignment[static_cast<std::size_t>(pi)] = std::nullopt;
        used[static_cast<std::size_t>(idx)] = false;
      }
    }
    return false;
  }
};

}  // namespace

Labeling find_labeling(const Configuration& c) {
  Incidence inc = incidence_structure(c);
  Searcher searcher(inc);
  if (!searcher.search(0)) {
    throw PreconditionError("no consistent labeling exists: not a D4");
  }
  Labeling out;
  out.points = inc.points;
  out.point_labels.reserve(12);
  for (const auto& lab : searcher.assignment) out.point_labels.push_back(*lab);
  out.line_to_triple.reserve(16);
  for (int li = 0; li < 16; ++li) {
    LineTriple t;
    for (int pi : inc.points_of_line[static_cast<std::size_t>(li)]) {
      const Label& lab = out.point_labels[static_cast<std::size_t>(pi)];
      switch (lab.letter) {
        case Letter::A: t.a = lab.g; break;
        case Letter::B: t.b = lab.g; break;
        case Letter::C: t.c = lab.g; break;
      }
    }
    if ((t.a + t.b + t.c).bits != 0) {
      throw PreconditionError("labeling violates the zero-sum invariant");
    }
    out.line_to_triple.push_back(t);
  }
  // 16 lines against 16 possible triples: the correspondence is a bijection.
  for (std::size_t i = 0; i < out.line_to_triple.size(); ++i) {
    for (std::size_t j = i + 1; j < out.line_to_triple.size(); ++j) {
      if (out.line_to_triple[i] == out.line_to_triple[j]) {
        throw PreconditionError("labeling maps two lines to one triple");
      }
    }
  }
  return out;
}

AgreementReport check_labeling_agreement(const Configuration& c,
                                         const GroupoidAnalysis& a,
                                         const Labeling& labeling) {
  // (line, canonical parameter) -> label of the underlying quadruple point.
  std::map<std::pair<int, ProjPoint>, Label,
           decltype([](const std::pair<int, ProjPoint>& x,
                       const std::pair<int, ProjPoint>& y) {
             if (x.first != y.first) return x.first < y.first;
             return ProjPoint::cmp(x.second, y.second) < 0;
           })>
      label_of;
  for (std::size_t pi = 0; pi < labeling.points.size(); ++pi) {
    for (int li = 0; li < static_cast<int>(c.lines.size()); ++li) {
      const ParamLine& line = c.lines[static_cast<std::size_t>(li)];
      // Try to express the point on this line; skip lines that miss it.
      try {
        ProjPoint param = parameter_of_point(line, labeling.points[pi]);
        label_of.emplace(std::make_pair(li, param),
                         labeling.point_labels[pi]);
      } catch (const PreconditionError&) {
      }
    }
  }

  AgreementReport report;
  for (const SimpleMorphism& g : a.generators) {
    const LineTriple& dom =
        labeling.line_to_triple[static_cast<std::size_t>(g.src)];
    const LineTriple& aux =
        labeling.line_to_triple[static_cast<std::size_t>(g.aux)];
    const LineTriple& cod =
        labeling.line_to_triple[static_cast<std::size_t>(g.dst)];
    for (const ProjPoint& param :
         (*c.marked)[static_cast<std::size_t>(g.src)]) {
      ++report.checked;
      auto it = label_of.find({g.src, param});
      if (it == label_of.end()) {
        report.ok = false;
        report.mismatch = "marked parameter without a label on line " +
                          std::to_string(g.src);
        return report;
      }
      Label expected = combinatorial_pi(dom, aux, cod, it->second);
      ProjPoint image = g.map.apply(param);
      auto img_it = label_of.find({g.dst, image});
      if (img_it == label_of.end() || !(img_it->second == expected)) {
        report.ok = false;
        report.mismatch = "morphism (" + std::to_string(g.src) + "," +
                          std::to_string(g.aux) + "," + std::to_string(g.dst) +
                          ") disagrees at " + it->second.str();
        return report;
      }
    }
  }
  return report;
}

}  // namespace gpd::d4
