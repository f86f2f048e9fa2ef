#include "cat3/disks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace cat3 {

namespace {

using Dir = std::pair<DiskVertex, DiskVertex>;

std::map<Dir, DiskVertex> third_vertex(const std::vector<DiskTriangle>& triangles) {
  std::map<Dir, DiskVertex> out;
  for (const auto& t : triangles) {
    out[{t[0], t[1]}] = t[2];
    out[{t[1], t[2]}] = t[0];
    out[{t[2], t[0]}] = t[1];
  }
  return out;
}

[[noreturn]] void not_a_disk(const std::string& why) { throw Error(Errc::NotADisk, why); }

}  // namespace

DiskDiagram::DiskDiagram(std::vector<VertexId> labels, std::vector<DiskTriangle> triangles,
                         std::vector<DiskVertex> boundary)
    : labels_(std::move(labels)), triangles_(std::move(triangles)), boundary_(std::move(boundary)) {}

int DiskDiagram::boundary_length() const noexcept {
  return boundary_.size() <= 1 ? 0 : static_cast<int>(boundary_.size());
}

std::vector<std::pair<DiskVertex, DiskVertex>> DiskDiagram::edges() const {
  std::set<std::pair<DiskVertex, DiskVertex>> out;
  auto add = [&](DiskVertex a, DiskVertex b) {
    if (a != b) out.insert(std::minmax(a, b));
  };
  for (const auto& t : triangles_) {
    add(t[0], t[1]);
    add(t[1], t[2]);
    add(t[2], t[0]);
  }
  for (std::size_t i = 0; boundary_.size() > 1 && i < boundary_.size(); ++i) {
    add(boundary_[i], boundary_[(i + 1) % boundary_.size()]);
  }
  return {out.begin(), out.end()};
}

int DiskDiagram::degree(DiskVertex v) const {
  int d = 0;
  for (const auto& [a, b] : edges())
    if (a == v || b == v) ++d;
  return d;
}

bool DiskDiagram::on_boundary(DiskVertex v) const {
  return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end();
}

std::vector<DiskVertex> DiskDiagram::interior_vertices() const {
  std::vector<DiskVertex> out;
  for (DiskVertex v = 0; v < static_cast<DiskVertex>(labels_.size()); ++v)
    if (!on_boundary(v)) out.push_back(v);
  return out;
}

std::vector<DiskVertex> DiskDiagram::rotation(DiskVertex v) const {
  // A clockwise triangle (v, a, b) puts b right after a around v.
  std::map<DiskVertex, DiskVertex> succ;
  std::set<DiskVertex> has_pred;
  for (const auto& t : triangles_) {
    for (int i = 0; i < 3; ++i) {
      if (t[i] != v) continue;
      succ[t[(i + 1) % 3]] = t[(i + 2) % 3];
      has_pred.insert(t[(i + 2) % 3]);
    }
  }
  std::vector<DiskVertex> out;
  std::set<DiskVertex> seen;
  auto chain_from = [&](DiskVertex start) {
    for (DiskVertex x = start; seen.insert(x).second;) {
      out.push_back(x);
      auto it = succ.find(x);
      if (it == succ.end()) break;
      x = it->second;
    }
  };
  // Chains start at the outgoing boundary edges, in walk order.
  const std::size_t m = boundary_.size();
  for (std::size_t i = 0; m > 1 && i < m; ++i) {
    if (boundary_[i] != v) continue;
    const DiskVertex next = boundary_[(i + 1) % m];
    if (!seen.contains(next)) chain_from(next);
  }
  for (const auto& [a, b] : succ)
    if (!has_pred.contains(a) && !seen.contains(a)) chain_from(a);
  for (const auto& [a, b] : succ)
    if (!seen.contains(a)) chain_from(a);
  return out;
}

Path DiskDiagram::boundary_path() const {
  Path out;
  for (DiskVertex v : boundary_) out.push_back(label(v));
  if (!boundary_.empty()) out.push_back(label(boundary_.front()));
  if (boundary_.size() == 1) out.pop_back();
  return out;
}

Path DiskDiagram::boundary_segment(std::size_t start, std::size_t length) const {
  Path out;
  const std::size_t m = boundary_.size();
  for (std::size_t i = 0; i <= length; ++i) out.push_back(label(boundary_[(start + i) % m]));
  return out;
}

DiskDiagram DiskDiagram::canonical() const {
  const std::size_t n = labels_.size();
  std::vector<int> to_new(n, -1);
  std::vector<DiskVertex> order;
  auto assign = [&](DiskVertex v) {
    if (to_new[static_cast<std::size_t>(v)] >= 0) return false;
    to_new[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
    order.push_back(v);
    return true;
  };
  for (DiskVertex v : boundary_) assign(v);
  const auto apex = third_vertex(triangles_);
  for (bool changed = true; changed && order.size() < n;) {
    changed = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        auto it = apex.find({order[i], order[j]});
        if (it != apex.end() && assign(it->second)) changed = true;
      }
    }
  }
  for (DiskVertex v = 0; v < static_cast<DiskVertex>(n); ++v) assign(v);

  std::vector<VertexId> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[static_cast<std::size_t>(to_new[v])] = labels_[v];
  std::vector<DiskTriangle> triangles;
  for (const auto& t : triangles_) {
    DiskTriangle r{to_new[static_cast<std::size_t>(t[0])], to_new[static_cast<std::size_t>(t[1])],
                   to_new[static_cast<std::size_t>(t[2])]};
    std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    triangles.push_back(r);
  }
  std::sort(triangles.begin(), triangles.end());
  std::vector<DiskVertex> boundary;
  for (DiskVertex v : boundary_) boundary.push_back(to_new[static_cast<std::size_t>(v)]);
  DiskDiagram out(std::move(labels), std::move(triangles), std::move(boundary));
  out.basepoints = basepoints;
  return out;
}

bool DiskDiagram::operator<(const DiskDiagram& other) const {
  return std::tie(boundary_, labels_, triangles_) < std::tie(other.boundary_, other.labels_, other.triangles_);
}

DiskValidation validate_disk(const DiskDiagram& d, const SimplicialComplex* k) {
  const auto n = static_cast<DiskVertex>(d.vertex_count());
  const auto& walk = d.boundary();
  const auto& tris = d.triangles();
  if (n == 0 || walk.empty()) not_a_disk("empty diagram");
  auto in_range = [&](DiskVertex v) { return v >= 0 && v < n; };
  for (DiskVertex v : walk)
    if (!in_range(v)) not_a_disk("boundary vertex out of range");

  std::map<Dir, int> directed;
  std::map<Dir, int> undirected;
  for (const auto& t : tris) {
    for (DiskVertex v : t)
      if (!in_range(v)) not_a_disk("triangle vertex out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) not_a_disk("degenerate triangle");
    for (int i = 0; i < 3; ++i) {
      const DiskVertex a = t[i], b = t[(i + 1) % 3];
      if (++directed[{a, b}] > 1) not_a_disk("inconsistent orientation");
      if (++undirected[std::minmax(a, b)] > 2) not_a_disk("edge in more than two triangles");
    }
  }

  std::map<DiskVertex, int> occurrences;
  for (DiskVertex v : walk) ++occurrences[v];
  std::map<Dir, int> walked;
  std::set<Dir> spurs;
  const std::size_t m = walk.size();
  if (m == 1) {
    if (!tris.empty() || n != 1) not_a_disk("single-vertex boundary around a nonempty disk");
  } else {
    if (m == 2 && !tris.empty()) not_a_disk("boundary too short");
    for (std::size_t i = 0; i < m; ++i) {
      const DiskVertex a = walk[i], b = walk[(i + 1) % m];
      if (a == b) not_a_disk("boundary walk repeats a vertex in place");
      const auto key = std::minmax(a, b);
      const int count = undirected.contains(key) ? undirected[key] : 0;
      if (count == 2) not_a_disk("boundary walk uses an interior edge");
      if (count == 1 && !directed.contains({a, b})) not_a_disk("boundary walk runs against the orientation");
      if (count == 0) spurs.insert(key);
      if (++walked[{a, b}] > 1) not_a_disk("boundary walk repeats a directed edge");
    }
    for (const auto& [e, count] : undirected) {
      if (count == 1 && !walked.contains(e) && !walked.contains({e.second, e.first})) {
        not_a_disk("boundary edge missing from the walk");
      }
    }
    for (const auto& e : spurs) {
      if (!walked.contains(e) || !walked.contains({e.second, e.first})) not_a_disk("spur edge walked only once");
    }
  }

  // Connectivity and Euler characteristic.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  const auto edge_list = d.edges();
  for (const auto& [a, b] : edge_list) parent[static_cast<std::size_t>(find(a))] = find(b);
  for (DiskVertex v = 1; v < n; ++v)
    if (find(v) != find(0)) not_a_disk("not connected");
  const long euler = static_cast<long>(n) - static_cast<long>(edge_list.size()) + static_cast<long>(tris.size());
  if (euler != 1) not_a_disk("Euler characteristic is " + std::to_string(euler) + ", not 1");

  // Vertex neighborhoods: a closed fan inside, open fans and spurs on the boundary.
  std::vector<std::map<DiskVertex, DiskVertex>> succ(static_cast<std::size_t>(n));
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) succ[static_cast<std::size_t>(t[i])][t[(i + 1) % 3]] = t[(i + 2) % 3];
  for (DiskVertex v = 0; v < n; ++v) {
    const auto& s = succ[static_cast<std::size_t>(v)];
    std::set<DiskVertex> targets;
    for (const auto& [a, b] : s) targets.insert(b);
    int chains = 0;
    for (const auto& [a, b] : s)
      if (!targets.contains(a)) ++chains;
    int spur_count = 0;
    for (const auto& e : spurs)
      if (e.first == v || e.second == v) ++spur_count;
    const int occ = occurrences.contains(v) ? occurrences[v] : 0;
    if (occ == 0) {
      if (s.empty() || chains != 0) not_a_disk("interior vertex without a closed fan");
      // One cycle through every neighbor.
      DiskVertex x = s.begin()->first;
      std::size_t steps = 0;
      do {
        x = s.at(x);
        ++steps;
      } while (x != s.begin()->first && steps <= s.size());
      if (steps != s.size()) not_a_disk("interior vertex fan is not a single cycle");
    } else if (m > 1 && chains + spur_count != occ) {
      not_a_disk("boundary vertex visited inconsistently");
    }
  }

  if (k) {
    for (const auto& t : tris) {
      const VertexId a = d.label(t[0]), b = d.label(t[1]), c = d.label(t[2]);
      if (a == b || b == c || a == c || !k->has_face(a, b, c)) {
        throw Error(Errc::LabelNotAFace, "triangle label {" + std::to_string(a) + "," + std::to_string(b) + "," +
                                             std::to_string(c) + "} is not a face");
      }
    }
    for (const auto& [a, b] : edge_list) {
      if (d.label(a) == d.label(b) || !k->has_edge(d.label(a), d.label(b))) {
        throw Error(Errc::LabelNotAFace, "edge label is not an edge");
      }
    }
  }

  DiskValidation out;
  for (const auto& [v, count] : occurrences)
    if (count > 1) out.cut_points.push_back(v);
  out.nonsingular = !tris.empty() && spurs.empty() && out.cut_points.empty();
  return out;
}

std::vector<SubDisk> nonsingular_pieces(const DiskDiagram& d) {
  const auto& tris = d.triangles();
  std::vector<int> parent(tris.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::map<Dir, int> owner;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto key = std::minmax(tris[i][j], tris[i][(j + 1) % 3]);
      auto [it, fresh] = owner.try_emplace(key, static_cast<int>(i));
      if (!fresh) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(it->second);
    }
  }
  const auto& walk = d.boundary();
  const std::size_t m = walk.size();
  std::map<int, std::vector<std::size_t>> group_walk;  // root -> walk positions
  std::vector<int> group_order;
  const auto apex = third_vertex(tris);
  for (std::size_t p = 0; m > 1 && p < m; ++p) {
    auto it = owner.find(std::minmax(walk[p], walk[(p + 1) % m]));
    if (it == owner.end()) continue;
    const int root = find(it->second);
    if (!group_walk.contains(root)) group_order.push_back(root);
    group_walk[root].push_back(p);
  }
  std::vector<SubDisk> out;
  for (int root : group_order) {
    SubDisk piece;
    std::map<DiskVertex, DiskVertex> local;
    auto intern = [&](DiskVertex v) {
      auto [it, fresh] = local.try_emplace(v, static_cast<DiskVertex>(piece.to_parent.size()));
      if (fresh) piece.to_parent.push_back(v);
      return it->second;
    };
    std::vector<DiskVertex> boundary;
    for (std::size_t p : group_walk[root]) boundary.push_back(intern(walk[p]));
    piece.walk_positions = group_walk[root];
    std::vector<DiskTriangle> members;
    std::set<DiskVertex> inner;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (find(static_cast<int>(i)) != root) continue;
      members.push_back(tris[i]);
      for (DiskVertex v : tris[i])
        if (!local.contains(v)) inner.insert(v);
    }
    for (DiskVertex v : inner) intern(v);
    std::vector<DiskTriangle> triangles;
    for (const auto& t : members) triangles.push_back({local[t[0]], local[t[1]], local[t[2]]});
    std::vector<VertexId> labels;
    for (DiskVertex v : piece.to_parent) labels.push_back(d.label(v));
    piece.disk = DiskDiagram(std::move(labels), std::move(triangles), std::move(boundary));
    out.push_back(std::move(piece));
  }
  return out;
}

Sign sign_of_degree(int degree) {
  if (degree < 4) return Sign::Positive;
  if (degree == 4) return Sign::Zero;
  return Sign::Negative;
}

namespace {

void require_nonsingular(const DiskDiagram& d) {
  if (!validate_disk(d).nonsingular) throw Error(Errc::SingularDisk, "disk is singular");
}

}  // namespace

SignClassification classify_boundary(const DiskDiagram& d) {
  require_nonsingular(d);
  SignClassification out;
  const auto& walk = d.boundary();
  for (std::size_t p = 0; p < walk.size(); ++p) {
    BoundarySign s;
    s.position = p;
    s.vertex = walk[p];
    s.degree = d.degree(walk[p]);
    s.sign = sign_of_degree(s.degree);
    const int defect = 4 - s.degree;
    s.positive_class = defect >= 1 && defect <= 3 ? defect : 0;
    out.boundary.push_back(s);
  }
  for (DiskVertex v : d.interior_vertices()) out.interior.emplace_back(v, d.degree(v));
  return out;
}

int gauss_bonnet_sum(const DiskDiagram& d) {
  SignClassification c = classify_boundary(d);
  int sum = 0;
  for (const auto& s : c.boundary) sum += 4 - s.degree;
  for (const auto& [v, deg] : c.interior) sum += 6 - deg;
  return sum;
}

bool is_cat0_disk(const DiskDiagram& d) {
  for (DiskVertex v : d.interior_vertices())
    if (d.degree(v) < 6) return false;
  return true;
}

}  // namespace cat3
