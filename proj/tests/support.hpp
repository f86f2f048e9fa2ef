// Helpers and brute-force oracles shared by the test programs. The oracles
// only use the adjacency of the complex and never call the library's
// distance, geodesic or disk routines.
#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cat3/complex.hpp"
#include "cat3/disks.hpp"
#include "cat3/io.hpp"
#include "cat3/paths.hpp"

namespace testing {

using namespace cat3;

inline SimplicialComplex complex_of(const std::string& simplices) {
  std::string text;
  std::istringstream in(simplices);
  for (std::string line; std::getline(in, line, ';');) text += "simplex " + line + "\n";
  return parse_complex(text).complex;
}

inline Path path_of(const SimplicialComplex& k, const std::string& names) {
  Path p;
  std::istringstream in(names);
  for (std::string n; in >> n;) p.push_back(k.vertex(n));
  return p;
}

inline std::string names_of(const SimplicialComplex& k, const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + k.name(p[i]);
  return s;
}

// All-pairs BFS over the adjacency matrix built from the maximal simplices,
// plus BFS over vertices and edge midpoints in half-edge steps.
struct Distances {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> d;
  std::map<std::pair<VertexId, VertexId>, std::size_t> mid;
  std::vector<std::vector<int>> half;

  explicit Distances(const SimplicialComplex& k) : n(k.vertex_count()) {
    adj.assign(n, std::vector<bool>(n, false));
    for (const Simplex& s : k.maximal_simplices())
      for (VertexId a : s.vertices())
        for (VertexId b : s.vertices())
          if (a != b) adj[a][b] = true;
    d.assign(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
      std::deque<std::size_t> q{s};
      d[s][s] = 0;
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
          if (adj[u][v] && d[s][v] < 0) {
            d[s][v] = d[s][u] + 1;
            q.push_back(v);
          }
        }
      }
    }
    std::vector<std::set<std::size_t>> g(n);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (adj[a][b]) {
          const std::size_t m = g.size();
          mid[{a, b}] = mid[{b, a}] = m;
          g.push_back({a, b});
          g[a].insert(m);
          g[b].insert(m);
        }
    for (const Simplex& s : k.maximal_simplices()) {
      const auto& vs = s.vertices();
      for (VertexId a : vs)
        for (VertexId b : vs)
          for (VertexId c : vs)
            if (a != b && b != c && a != c) {
              g[mid[{a, b}]].insert(mid[{b, c}]);
              g[mid[{b, c}]].insert(mid[{a, b}]);
            }
    }
    half.assign(g.size(), std::vector<int>(g.size(), -1));
    for (std::size_t s = 0; s < g.size(); ++s) {
      std::deque<std::size_t> q{s};
      half[s][s] = 0;
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v : g[u])
          if (half[s][v] < 0) {
            half[s][v] = half[s][u] + 1;
            q.push_back(v);
          }
      }
    }
  }

  // Every walk of exactly `len` edges from u to w, in lexicographic order.
  std::vector<Path> walks(VertexId u, VertexId w, int len) const {
    std::vector<Path> out;
    Path p{u};
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(p.size()) - 1 == len) {
        if (p.back() == w) out.push_back(p);
        return;
      }
      for (VertexId v = 0; v < n; ++v) {
        if (!adj[p.back()][v]) continue;
        if (d[v][w] > len - static_cast<int>(p.size())) continue;
        p.push_back(v);
        self(self);
        p.pop_back();
      }
    };
    rec(rec);
    return out;
  }

  std::vector<Path> geodesics(VertexId u, VertexId w) const { return walks(u, w, d[u][w]); }

  bool is_geodesic(const Path& p) const {
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!adj[p[i - 1]][p[i]]) return false;
    return d[p.front()][p.back()] == static_cast<int>(p.size()) - 1;
  }

  // Point t along the path as (a, b, s): s in [0,1) along edge a -> b.
  struct Pt {
    VertexId a, b;
    double s;
  };
  static Pt at(const Path& p, double t) {
    const double len = static_cast<double>(p.size() - 1);
    if (t <= 0) return {p.front(), p.front(), 0};
    if (t >= len) return {p.back(), p.back(), 0};
    const auto i = static_cast<std::size_t>(std::floor(t));
    return {p[i], p[i + 1], t - static_cast<double>(i)};
  }

  double point_distance(Pt x, Pt y) const {
    if (x.s == 0) x.b = x.a;
    if (y.s == 0) y.b = y.a;
    if (x.s > 0 && y.s > 0 && ((x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a))) {
      const double ys = x.a == y.a ? y.s : 1 - y.s;
      return std::abs(x.s - ys);
    }
    double best = std::numeric_limits<double>::infinity();
    const std::pair<VertexId, double> xe[2] = {{x.a, x.s}, {x.b, 1 - x.s}};
    const std::pair<VertexId, double> ye[2] = {{y.a, y.s}, {y.b, 1 - y.s}};
    for (const auto& [u, du] : xe)
      for (const auto& [v, dv] : ye) best = std::min(best, du + dv + d[u][v]);
    const std::size_t mx = x.s > 0 ? mid.at({x.a, x.b}) : x.a, my = y.s > 0 ? mid.at({y.a, y.b}) : y.a;
    const double ox = x.s > 0 ? std::abs(x.s - 0.5) : 0, oy = y.s > 0 ? std::abs(y.s - 0.5) : 0;
    return std::min(best, ox + oy + 0.5 * half[mx][my]);
  }

  double path_distance(const Path& a, const Path& b) const {
    const std::size_t steps = 2 * std::max(a.size(), b.size());
    double best = 0;
    for (std::size_t i = 0; i <= steps; ++i) {
      const double t = 0.5 * static_cast<double>(i);
      best = std::max(best, point_distance(at(a, t), at(b, t)));
    }
    return best;
  }
};

// Random nonsingular triangulated disk grown by gluing ears on boundary
// edges and closing boundary corners. Local ids double as labels.
inline DiskDiagram random_disk(std::mt19937& rng, int steps) {
  std::vector<DiskTriangle> tris{{0, 1, 2}};
  std::vector<DiskVertex> walk{0, 1, 2};
  std::set<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  int next = 3;
  auto has = [&](int a, int b) { return edges.contains({std::min(a, b), std::max(a, b)}); };
  for (int s = 0; s < steps; ++s) {
    const std::size_t m = walk.size();
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    const int x = walk[i], y = walk[(i + 1) % m], z = walk[(i + 2) % m];
    if (m >= 4 && !has(x, z) && std::bernoulli_distribution(0.4)(rng)) {
      tris.push_back({x, z, y});
      edges.insert({std::min(x, z), std::max(x, z)});
      walk.erase(walk.begin() + static_cast<std::ptrdiff_t>((i + 1) % m));
    } else {
      const int w = next++;
      tris.push_back({y, x, w});
      edges.insert({std::min(x, w), std::max(x, w)});
      edges.insert({std::min(y, w), std::max(y, w)});
      walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(i + 1), w);
    }
  }
  std::vector<VertexId> labels;
  for (int v = 0; v < next; ++v) labels.push_back(static_cast<VertexId>(v));
  return DiskDiagram(std::move(labels), std::move(tris), std::move(walk));
}

// Independent curvature sum: degrees counted from the triangle list.
inline int defect_sum(const DiskDiagram& d) {
  std::vector<std::set<int>> nbrs(d.vertex_count());
  for (const auto& t : d.triangles())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) nbrs[static_cast<std::size_t>(t[i])].insert(t[j]);
  const std::set<int> bd(d.boundary().begin(), d.boundary().end());
  int sum = 0;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    sum += bd.contains(static_cast<int>(v)) ? 4 - static_cast<int>(nbrs[v].size()) : 6 - static_cast<int>(nbrs[v].size());
  return sum;
}

}  // namespace testing
