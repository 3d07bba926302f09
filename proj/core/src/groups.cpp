#include "gpd/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gpd {

std::string GroupLabel::str() const {
  switch (kind) {
    case GroupKind::Trivial: return "Trivial";
    case GroupKind::Cyclic: return "C(" + std::to_string(order) + ")";
    case GroupKind::Dihedral: return "D(" + std::to_string(order) + ")";
    case GroupKind::A4: return "A4";
    case GroupKind::S4: return "S4";
    case GroupKind::A5: return "A5";
    case GroupKind::OtherFinite: return "OtherFinite";
    case GroupKind::Infinite: return "Infinite";
  }
  return "?";
}

std::size_t default_cap(const Field& f) {
  return std::max<std::size_t>(
      60, 2 * static_cast<std::size_t>(max_finite_order(f.degree())));
}

namespace {

GroupResult finalize(std::vector<PglMap> elements, std::size_t cap,
                     const Field& f) {
  GroupResult g;
  g.elements = std::move(elements);
  g.cap = cap;
  for (const PglMap& m : g.elements) {
    auto n = element_order(m, f);
    if (!n) {
      // Unreachable for a closed finite set; guards against misuse.
      throw PreconditionError("element of infinite order in a finite group");
    }
    ++g.histogram[*n];
  }
  g.label = classify(g, f);
  return g;
}

}  // namespace

GroupResult generate_closure(const std::vector<PglMap>& gens,
                             std::size_t cap) {
  if (gens.empty()) {
    throw PreconditionError("closure requires at least one generator");
  }
  Field f = gens.front().field();
  for (const PglMap& g : gens) {
    if (g.field() != f) {
      throw FieldMismatchError("generators over different fields");
    }
  }
  // Deterministic generator order: input order with duplicates dropped.
  std::vector<PglMap> unique_gens;
  std::set<PglMap, PglMapLess> gen_seen;
  for (const PglMap& g : gens) {
    if (gen_seen.insert(g).second) unique_gens.push_back(g);
  }

  std::vector<PglMap> elements{PglMap::identity(f)};
  std::set<PglMap, PglMapLess> seen(elements.begin(), elements.end());
  std::size_t next = 0;
  while (next < elements.size()) {
    PglMap x = elements[next++];
    for (const PglMap& g : unique_gens) {
      PglMap y = g * x;
      if (seen.insert(y).second) {
        elements.push_back(y);
        if (elements.size() > cap) {
          GroupResult out;
          out.cap = cap;
          out.infinite = true;
          out.label = GroupLabel{GroupKind::Infinite, 0};
          return out;
        }
      }
    }
  }
  return finalize(std::move(elements), cap, f);
}

GroupLabel classify(const GroupResult& g, const Field& f) {
  if (g.infinite) {
    throw PreconditionError("classify requires a finite group");
  }
  const auto& els = g.elements;
  const int n = static_cast<int>(els.size());
  if (n == 1) return GroupLabel{GroupKind::Trivial, 1};

  std::map<int, int> hist = g.histogram;
  if (hist.empty()) {
    for (const PglMap& m : els) ++hist[element_order(m, f).value()];
  }

  const bool abelian = [&] {
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        if (els[i] * els[j] != els[j] * els[i]) return false;
      }
    }
    return true;
  }();
  if (abelian && hist.count(n)) return GroupLabel{GroupKind::Cyclic, n};

  if (n % 2 == 0 && n >= 4) {
    const int k = n / 2;
    auto rot = std::find_if(els.begin(), els.end(), [&](const PglMap& m) {
      return element_order(m, f) == k;
    });
    if (rot != els.end()) {
      std::set<PglMap, PglMapLess> cyclic;
      PglMap acc = *rot;
      for (int i = 0; i < k; ++i) {
        cyclic.insert(acc);
        acc = acc * *rot;
      }
      int reflections = 0;
      for (const PglMap& m : els) {
        if (!cyclic.count(m) && element_order(m, f) == 2) ++reflections;
      }
      if (static_cast<int>(cyclic.size()) == k && reflections >= k) {
        return GroupLabel{GroupKind::Dihedral, n};
      }
    }
  }

  const std::map<int, int> a4{{1, 1}, {2, 3}, {3, 8}};
  const std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<int, int> a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (n == 12 && hist == a4) return GroupLabel{GroupKind::A4, 12};
  if (n == 24 && hist == s4) return GroupLabel{GroupKind::S4, 24};
  if (n == 60 && hist == a5) return GroupLabel{GroupKind::A5, 60};
  return GroupLabel{GroupKind::OtherFinite, n};
}

GroupResult stabilizer(const std::vector<ProjPoint>& points) {
  if (points.size() < 3) {
    throw PreconditionError("stabilizer requires at least 3 points");
  }
  for (const ProjPoint& p : points) {
    if (p.size() != 2) {
      throw PreconditionError("stabilizer points must lie in P^1");
    }
  }
  std::set<ProjPoint, ProjPointLess> point_set(points.begin(), points.end());
  if (point_set.size() != points.size()) {
    throw PreconditionError("stabilizer points must be pairwise distinct");
  }

  Field f = points.front().field();
  const std::array<ProjPoint, 3> src{points[0], points[1], points[2]};
  std::vector<PglMap> found;
  std::set<PglMap, PglMapLess> seen;
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        PglMap cand =
            mobius_from_triples(src, {points[i], points[j], points[k]});
        bool keeps = true;
        for (const ProjPoint& p : points) {
          if (!point_set.count(cand.apply(p))) {
            keeps = false;
            break;
          }
        }
        if (keeps && seen.insert(cand).second) found.push_back(cand);
      }
    }
  }
  GroupResult g;
  g.elements = std::move(found);
  g.cap = 0;
  for (const PglMap& mm : g.elements) ++g.histogram[element_order(mm, f).value()];
  g.label = classify(g, f);
  return g;
}

}  // namespace gpd
