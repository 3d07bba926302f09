#include "gpd/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpd/p4ext.hpp"

namespace gpd {

void Configuration::validate() const {
  if (lines.empty()) {
    throw PreconditionError("configuration has no lines");
  }
  const std::size_t width = lines.front().ambient_coords();
  for (const ParamLine& l : lines) {
    if (l.ambient_coords() != width) {
      throw PreconditionError("lines of mixed ambient dimension");
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].same_line(lines[j])) {
        throw PreconditionError("lines " + std::to_string(i) + " and " +
                                std::to_string(j) +
                                " span the same subspace");
      }
    }
  }
  if (marked) {
    if (marked->size() != lines.size()) {
      throw PreconditionError("marked sets must cover every line");
    }
    for (std::size_t i = 0; i < marked->size(); ++i) {
      std::set<ProjPoint, ProjPointLess> seen;
      for (const ProjPoint& p : (*marked)[i]) {
        if (p.size() != 2) {
          throw PreconditionError("marked points must be P^1 parameters");
        }
        if (!seen.insert(p).second) {
          throw PreconditionError("duplicate marked point on line " +
                                  std::to_string(i));
        }
      }
    }
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

std::vector<int> component_ids(int n,
                               const std::vector<SimpleMorphism>& gens) {
  UnionFind uf(n);
  for (const SimpleMorphism& g : gens) uf.unite(g.src, g.dst);
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::map<int, int> relabel;
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    auto [it, fresh] = relabel.try_emplace(root, static_cast<int>(relabel.size()));
    (void)fresh;
    ids[static_cast<std::size_t>(i)] = it->second;
  }
  return ids;
}

}  // namespace

GroupoidAnalysis enumerate_generators(const Configuration& c) {
  c.validate();
  const int n = static_cast<int>(c.lines.size());
  const bool in_p4 = c.ambient_dim() == 4;

  GroupoidAnalysis a;
  a.skew.assign(static_cast<std::size_t>(n),
                std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool apart = in_p4 ? lines_disjoint4(c.lines[static_cast<std::size_t>(i)],
                                           c.lines[static_cast<std::size_t>(j)])
                         : lines_skew(c.lines[static_cast<std::size_t>(i)],
                                      c.lines[static_cast<std::size_t>(j)]);
      a.skew[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = apart;
      a.skew[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = apart;
    }
  }

  // In P^4 a triple additionally needs a common hyperplane; for a disjoint
  // pair that hyperplane is its span, so membership bitmasks decide it.
  std::vector<std::vector<bool>> in_hyperplane;
  if (in_p4) {
    IncidenceStats stats = incidence_stats(c.lines);
    in_hyperplane.assign(stats.hyperplanes.size(),
                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t h = 0; h < stats.hyperplanes.size(); ++h) {
      for (int li : stats.hyperplanes[h]) {
        in_hyperplane[h][static_cast<std::size_t>(li)] = true;
      }
    }
  }
  auto share_hyperplane = [&](int i, int j, int k) {
    for (const auto& h : in_hyperplane) {
      if (h[static_cast<std::size_t>(i)] && h[static_cast<std::size_t>(j)] &&
          h[static_cast<std::size_t>(k)]) {
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      int count = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (!a.skew[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] ||
            !a.skew[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) {
          continue;
        }
        if (in_p4 && !share_hyperplane(i, j, k)) continue;
        const ParamLine& u = c.lines[static_cast<std::size_t>(i)];
        const ParamLine& v = c.lines[static_cast<std::size_t>(j)];
        const ParamLine& w = c.lines[static_cast<std::size_t>(k)];
        PglMap m = in_p4 ? projection4(u, v, w) : projection_matrix(u, v, w);
        a.generators.push_back(SimpleMorphism{i, j, k, m});
        ++count;
      }
      a.aux_counts[{i, k}] = count;
    }
  }
  a.component = component_ids(n, a.generators);
  return a;
}

std::vector<std::vector<int>> connectivity(const GroupoidAnalysis& a) {
  std::map<int, std::vector<int>> by_id;
  for (int i = 0; i < static_cast<int>(a.component.size()); ++i) {
    by_id[a.component[static_cast<std::size_t>(i)]].push_back(i);
  }
  std::vector<std::vector<int>> parts;
  parts.reserve(by_id.size());
  for (auto& [id, members] : by_id) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return parts;
}

GroupResult vertex_group(const Configuration& c, const GroupoidAnalysis& a,
                         int base, std::size_t cap, TreeOrder order) {
  const int n = static_cast<int>(c.lines.size());
  if (base < 0 || base >= n) {
    throw PreconditionError("base line index out of range");
  }

  // First simple morphism per directed edge, in (src,dst,aux) order.
  std::map<std::pair<int, int>, const SimpleMorphism*> first_edge;
  std::map<int, std::vector<int>> neighbors;
  for (const SimpleMorphism& g : a.generators) {
    if (first_edge.try_emplace({g.src, g.dst}, &g).second) {
      neighbors[g.src].push_back(g.dst);
    }
  }
  if (order == TreeOrder::DescendingIndex) {
    for (auto& [src, ns] : neighbors) std::sort(ns.rbegin(), ns.rend());
  }

  // Breadth-first spanning tree of the base's component; tau[i] realizes the
  // tree path base -> i.
  std::map<int, PglMap> tau;
  tau.emplace(base, PglMap::identity(c.field));
  std::vector<int> frontier{base};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      auto it = neighbors.find(v);
      if (it == neighbors.end()) continue;
      for (int w : it->second) {
        if (tau.count(w)) continue;
        tau.emplace(w, first_edge.at({v, w})->map * tau.at(v));
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }

  std::vector<PglMap> loop_gens;
  for (const SimpleMorphism& g : a.generators) {
    auto src_it = tau.find(g.src);
    auto dst_it = tau.find(g.dst);
    if (src_it == tau.end() || dst_it == tau.end()) continue;
    loop_gens.push_back(dst_it->second.inverse() * g.map * src_it->second);
  }
  if (loop_gens.empty()) {
    GroupResult g;
    g.elements = {PglMap::identity(c.field)};
    g.histogram[1] = 1;
    g.label = GroupLabel{GroupKind::Trivial, 1};
    g.cap = cap;
    return g;
  }
  return generate_closure(loop_gens, cap);
}

GroupResult vertex_group(const Configuration& c, int base) {
  GroupoidAnalysis a = enumerate_generators(c);
  return vertex_group(c, a, base, default_cap(c.field));
}

OrbitResult orbit(const Configuration& c, const GroupoidAnalysis& a, int line,
                  const ProjPoint& start, std::size_t cap) {
  if (line < 0 || line >= static_cast<int>(c.lines.size())) {
    throw PreconditionError("orbit start line index out of range");
  }
  if (start.size() != 2) {
    throw PreconditionError("orbit start must be a P^1 parameter");
  }
  std::map<int, std::vector<const SimpleMorphism*>> outgoing;
  for (const SimpleMorphism& g : a.generators) {
    outgoing[g.src].push_back(&g);
  }

  OrbitResult result;
  std::set<std::pair<int, ProjPoint>,
           decltype([](const std::pair<int, ProjPoint>& x,
                       const std::pair<int, ProjPoint>& y) {
             if (x.first != y.first) return x.first < y.first;
             return ProjPoint::cmp(x.second, y.second) < 0;
           })>
      seen;
  result.members.emplace_back(line, start);
  seen.insert(result.members.back());
  std::size_t next = 0;
  while (next < result.members.size()) {
    auto [li, p] = result.members[next++];
    auto it = outgoing.find(li);
    if (it == outgoing.end()) continue;
    for (const SimpleMorphism* g : it->second) {
      std::pair<int, ProjPoint> image{g->dst, g->map.apply(p)};
      if (seen.insert(image).second) {
        if (result.members.size() >= cap) {
          result.truncated = true;
          return result;
        }
        result.members.push_back(std::move(image));
      }
    }
  }
  return result;
}

InvarianceReport marked_invariance(const Configuration& c,
                                   const GroupoidAnalysis& a) {
  if (!c.marked) {
    throw PreconditionError("configuration has no marked points");
  }
  for (std::size_t i = 0; i < c.marked->size(); ++i) {
    if ((*c.marked)[i].empty()) {
      throw PreconditionError("line " + std::to_string(i) +
                              " has no marked points");
    }
  }
  std::vector<std::set<ProjPoint, ProjPointLess>> sets;
  sets.reserve(c.marked->size());
  for (const auto& pts : *c.marked) {
    sets.emplace_back(pts.begin(), pts.end());
  }
  InvarianceReport report;
  for (const SimpleMorphism& g : a.generators) {
    ++report.checked;
    std::set<ProjPoint, ProjPointLess> image;
    for (const ProjPoint& p : sets[static_cast<std::size_t>(g.src)]) {
      image.insert(g.map.apply(p));
    }
    if (image != sets[static_cast<std::size_t>(g.dst)]) {
      report.holds = false;
      report.counterexample = g;
      for (const ProjPoint& p : sets[static_cast<std::size_t>(g.src)]) {
        if (!sets[static_cast<std::size_t>(g.dst)].count(g.map.apply(p))) {
          report.offending_point = p;
          break;
        }
      }
      return report;
    }
  }
  return report;
}

}  // namespace gpd
