#include "cat3/complex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <queue>
#include <set>

namespace cat3 {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DisconnectedComplex: return "DisconnectedComplex";
    case Errc::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case Errc::EmptySimplex: return "EmptySimplex";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::SimplexNotInComplex: return "SimplexNotInComplex";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::EmptyOrDisconnectedResult: return "EmptyOrDisconnectedResult";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::DimensionTooHigh: return "DimensionTooHigh";
    case Errc::NotSimplicial: return "NotSimplicial";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::InvalidStep: return "InvalidStep";
    case Errc::GeodesicLimitExceeded: return "GeodesicLimitExceeded";
    case Errc::NotADisk: return "NotADisk";
    case Errc::LabelNotAFace: return "LabelNotAFace";
    case Errc::SingularDisk: return "SingularDisk";
    case Errc::NoDiskWithinBound: return "NoDiskWithinBound";
    case Errc::DiskLimitExceeded: return "DiskLimitExceeded";
    case Errc::NotClosed: return "NotClosed";
    case Errc::LabelMismatchOnGamma: return "LabelMismatchOnGamma";
    case Errc::UnresolvableVertex: return "UnresolvableVertex";
    case Errc::MoveMismatch: return "MoveMismatch";
    case Errc::TargetNotGeodesic: return "TargetNotGeodesic";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::NoMoveSequence: return "NoMoveSequence";
    case Errc::NotGeodesic: return "NotGeodesic";
    case Errc::TooManyCompanions: return "TooManyCompanions";
    case Errc::NonTermination: return "NonTermination";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::TooHighDimension: return "TooHighDimension";
    case Errc::BadParams: return "BadParams";
    case Errc::DeclaredCat0Contradiction: return "DeclaredCat0Contradiction";
  }
  return "Unknown";
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(Errc::EmptySimplex, "simplex with no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::DuplicateVertexInSimplex, "vertex " + std::to_string(*std::adjacent_find(vertices_.begin(), vertices_.end())) + " repeated");
  }
}

bool Simplex::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::vector<VertexId> simplex_union(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> out;
  std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                 std::back_inserter(out));
  return out;
}

namespace {

// Removes duplicates and simplices that are faces of others.
std::vector<Simplex> absorb_faces(std::vector<Simplex> input) {
  std::sort(input.begin(), input.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  input.erase(std::unique(input.begin(), input.end()), input.end());
  std::vector<Simplex> kept;
  for (const auto& s : input) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Simplex& m) { return s.is_face_of(m); });
    if (!absorbed) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::build(const std::vector<Simplex>& maximal, std::vector<std::string> names,
                                           BuildOptions options) {
  std::vector<VertexId> ids;
  for (const auto& s : maximal) ids.insert(ids.end(), s.vertices().begin(), s.vertices().end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::map<VertexId, VertexId> dense;
  for (VertexId i = 0; i < ids.size(); ++i) dense[ids[i]] = i;
  std::vector<std::string> dense_names;
  for (VertexId id : ids) {
    if (id < names.size()) {
      dense_names.push_back(names[id]);
    } else {
      dense_names.push_back(std::to_string(id));
    }
  }
  std::vector<Simplex> remapped;
  for (const auto& s : maximal) {
    std::vector<VertexId> vs;
    for (VertexId v : s.vertices()) vs.push_back(dense.at(v));
    remapped.emplace_back(std::move(vs));
  }
  return build_dense(ids.size(), remapped, std::move(dense_names), options);
}

SimplicialComplex SimplicialComplex::build_dense(std::size_t vertex_count, const std::vector<Simplex>& maximal,
                                                 std::vector<std::string> names, BuildOptions options) {
  if (maximal.empty() && !options.allow_empty) throw Error(Errc::EmptyComplex, "no simplices given");
  if (names.size() != vertex_count) throw Error(Errc::BadParams, "name table size does not match vertex count");

  SimplicialComplex k;
  k.names_ = std::move(names);
  k.maximal_ = absorb_faces(maximal);
  for (const auto& s : k.maximal_) {
    if (s.vertices().back() >= vertex_count) throw Error(Errc::UnknownVertex, "vertex id out of range");
    k.dimension_ = std::max(k.dimension_, s.dimension());
  }

  // Every vertex must occur in some simplex.
  std::vector<bool> used(vertex_count, false);
  for (const auto& s : k.maximal_)
    for (VertexId v : s.vertices()) used[v] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(Errc::BadParams, "vertex not contained in any simplex");
  }

  for (std::size_t idx = 0; idx < k.maximal_.size(); ++idx) {
    const auto& vs = k.maximal_[idx].vertices();
    const std::size_t n = vs.size();
    if (n >= 31) throw Error(Errc::TooHighDimension, "simplex too large to enumerate faces");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(vs[i]);
      k.face_index_[Simplex(std::move(face))].push_back(idx);
    }
  }

  const std::size_t v = vertex_count;
  k.adjacency_.assign(v, {});
  k.edge_matrix_.assign(v * v, 0);
  for (const auto& [face, cofaces] : k.face_index_) {
    if (face.size() != 2) continue;
    k.adjacency_[face[0]].push_back(face[1]);
    k.adjacency_[face[1]].push_back(face[0]);
    k.edge_matrix_[face[0] * v + face[1]] = 1;
    k.edge_matrix_[face[1] * v + face[0]] = 1;
  }
  for (auto& nb : k.adjacency_) std::sort(nb.begin(), nb.end());

  k.distances_.assign(v * v, -1);
  for (VertexId s = 0; s < v; ++s) {
    int* row = &k.distances_[s * v];
    std::deque<VertexId> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : k.adjacency_[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  k.connected_ = v > 0 && std::none_of(k.distances_.begin(), k.distances_.begin() + v, [](int d) { return d < 0; });
  if (options.require_connected && !k.connected_) {
    throw Error(Errc::DisconnectedComplex, "1-skeleton is not connected");
  }

  // Vertices and edge midpoints; every step is half an edge long.
  k.edge_ids_.assign(v * v, -1);
  std::vector<std::vector<std::size_t>> graph(v);
  for (VertexId a = 0; a < v; ++a) {
    for (VertexId b : k.adjacency_[a]) {
      if (b < a) continue;
      const std::size_t node = graph.size();
      k.edge_ids_[a * v + b] = k.edge_ids_[b * v + a] = static_cast<int>(node - v);
      graph.push_back({a, b});
      graph[a].push_back(node);
      graph[b].push_back(node);
    }
  }
  for (const auto& [face, cofaces] : k.face_index_) {
    if (face.size() != 3) continue;
    const std::size_t e[3] = {v + static_cast<std::size_t>(k.edge_ids_[face[0] * v + face[1]]),
                              v + static_cast<std::size_t>(k.edge_ids_[face[1] * v + face[2]]),
                              v + static_cast<std::size_t>(k.edge_ids_[face[0] * v + face[2]])};
    for (int i = 0; i < 3; ++i) {
      graph[e[i]].push_back(e[(i + 1) % 3]);
      graph[e[(i + 1) % 3]].push_back(e[i]);
    }
  }
  const std::size_t n = k.half_nodes_ = graph.size();
  k.half_steps_.assign(n * n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    int* row = &k.half_steps_[s * n];
    std::deque<std::size_t> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : graph[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return k;
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

VertexId SimplicialComplex::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(Errc::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

bool SimplicialComplex::has_edge(VertexId a, VertexId b) const {
  const std::size_t v = names_.size();
  return a < v && b < v && edge_matrix_[a * v + b] != 0;
}

bool SimplicialComplex::has_simplex(std::span<const VertexId> vertices) const {
  if (vertices.empty()) return false;
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.size() == 1) return sorted[0] < names_.size();
  if (sorted.size() == 2) return has_edge(sorted[0], sorted[1]);
  return face_index_.count(Simplex(std::move(sorted))) > 0;
}

bool SimplicialComplex::has_face(VertexId a, VertexId b, VertexId c) const {
  if (a == b || b == c || a == c) return false;
  if (!has_edge(a, b) || !has_edge(b, c) || !has_edge(a, c)) return false;
  const VertexId vs[3] = {a, b, c};
  return has_simplex(vs);
}

const std::vector<std::size_t>& SimplicialComplex::cofaces(const Simplex& face) const {
  auto it = face_index_.find(face);
  if (it == face_index_.end()) throw Error(Errc::SimplexNotInComplex, "simplex not in complex");
  return it->second;
}

std::vector<Simplex> SimplicialComplex::simplices(int dimension) const {
  std::vector<Simplex> out;
  for (const auto& [face, _] : face_index_)
    if (face.dimension() == dimension) out.push_back(face);
  return out;
}

std::size_t SimplicialComplex::count(int dimension) const {
  std::size_t n = 0;
  for (const auto& [face, _] : face_index_)
    if (face.dimension() == dimension) ++n;
  return n;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& [face, _] : face_index_) out.push_back(face);
  std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

int SimplicialComplex::distance(VertexId a, VertexId b) const {
  const std::size_t v = names_.size();
  if (a >= v || b >= v) throw Error(Errc::UnknownVertex, "vertex id out of range");
  return distances_[a * v + b];
}

int SimplicialComplex::half_steps(VertexId a1, VertexId a2, VertexId b1, VertexId b2) const {
  const std::size_t v = vertex_count(), n = half_nodes_;
  auto node = [&](VertexId x, VertexId y) -> std::size_t {
    if (x == y) return x;
    const int e = x < v && y < v ? edge_ids_[x * v + y] : -1;
    if (e < 0) throw Error(Errc::NotAnEdge, "points must lie on edges");
    return v + static_cast<std::size_t>(e);
  };
  return half_steps_[node(a1, a2) * n + node(b1, b2)];
}

int SimplicialComplex::diameter() const {
  return distances_.empty() ? 0 : *std::max_element(distances_.begin(), distances_.end());
}

std::vector<VertexId> SimplicialComplex::common_faces(VertexId a, VertexId b) const {
  std::vector<VertexId> out;
  if (!has_edge(a, b)) return out;
  for (VertexId c : adjacency_[a])
    if (c != b && has_face(a, b, c)) out.push_back(c);
  return out;
}

std::vector<Simplex> Subcomplex::parent_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : complex.maximal_simplices()) {
    std::vector<VertexId> vs;
    for (VertexId v : s.vertices()) vs.push_back(to_parent[v]);
    out.emplace_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Builds a subcomplex from simplices given in ambient ids.
Subcomplex make_subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& simplices) {
  std::vector<VertexId> verts;
  for (const auto& s : simplices) verts.insert(verts.end(), s.vertices().begin(), s.vertices().end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::map<VertexId, VertexId> local;
  std::vector<std::string> names;
  for (VertexId i = 0; i < verts.size(); ++i) {
    local[verts[i]] = i;
    names.push_back(k.name(verts[i]));
  }
  std::vector<Simplex> mapped;
  for (const auto& s : simplices) {
    std::vector<VertexId> vs;
    for (VertexId v : s.vertices()) vs.push_back(local.at(v));
    mapped.emplace_back(std::move(vs));
  }
  Subcomplex out;
  out.complex = SimplicialComplex::build_dense(verts.size(), mapped, std::move(names),
                                               BuildOptions{.require_connected = false, .allow_empty = true});
  out.to_parent = std::move(verts);
  return out;
}

}  // namespace

LocalStructure local_structure(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.has_simplex(sigma)) throw Error(Errc::SimplexNotInComplex, "simplex not in complex");
  std::vector<Simplex> star;
  std::vector<Simplex> link;
  for (std::size_t idx : k.cofaces(sigma)) {
    const Simplex& tau = k.maximal_simplices()[idx];
    star.push_back(tau);
    std::vector<VertexId> rest;
    std::set_difference(tau.vertices().begin(), tau.vertices().end(), sigma.vertices().begin(),
                        sigma.vertices().end(), std::back_inserter(rest));
    if (!rest.empty()) link.emplace_back(std::move(rest));
  }
  return LocalStructure{make_subcomplex(k, star), make_subcomplex(k, link)};
}

Subcomplex induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices) {
  std::vector<VertexId> w(vertices.begin(), vertices.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (VertexId v : w)
    if (!k.has_vertex(v)) throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(v) + " not in complex");
  std::vector<Simplex> pieces;
  for (const auto& m : k.maximal_simplices()) {
    std::vector<VertexId> part;
    std::set_intersection(m.vertices().begin(), m.vertices().end(), w.begin(), w.end(), std::back_inserter(part));
    if (!part.empty()) pieces.emplace_back(std::move(part));
  }
  // Vertices of W lie in some maximal simplex, so each appears in `pieces`.
  return make_subcomplex(k, pieces);
}

Subcomplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw Error(Errc::EmptyOrDisconnectedResult, "empty vertex set");
  Subcomplex sub = induced_subcomplex(k, vertices);
  if (sub.complex.empty() || !sub.complex.connected()) {
    throw Error(Errc::EmptyOrDisconnectedResult, "induced subcomplex is disconnected");
  }
  return sub;
}

double regular_dihedral_angle(int n) { return std::acos(1.0 / static_cast<double>(n)); }

int compare_with_tolerance(double a, double b, double tol) {
  if (std::abs(a - b) <= tol) return 0;
  return a < b ? -1 : 1;
}

double MetricGraph::total_length() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.length;
  return sum;
}

std::optional<MetricGraph::Cycle> MetricGraph::shortest_cycle() const {
  // For each edge: shortest path between its ends that avoids it.
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  const std::size_t n = vertices.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge index)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[index.at(edges[e].a)].push_back({index.at(edges[e].b), e});
    adj[index.at(edges[e].b)].push_back({index.at(edges[e].a), e});
  }
  std::optional<Cycle> best;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    const std::size_t src = index.at(edges[skip].a);
    const std::size_t dst = index.at(edges[skip].b);
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(n, n);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x]) continue;
      for (auto [y, e] : adj[x]) {
        if (e == skip) continue;
        double nd = d + edges[e].length;
        if (nd < dist[y] - 1e-15) {
          dist[y] = nd;
          parent[y] = x;
          pq.push({nd, y});
        }
      }
    }
    if (!std::isfinite(dist[dst])) continue;
    double len = dist[dst] + edges[skip].length;
    if (best && len >= best->length - 1e-15) continue;
    Cycle c;
    c.length = len;
    for (std::size_t x = dst; x != n; x = parent[x]) c.vertices.push_back(vertices[x]);
    std::reverse(c.vertices.begin(), c.vertices.end());
    c.edge_count = static_cast<int>(c.vertices.size());
    best = std::move(c);
  }
  return best;
}

MetricGraph codim2_metric_link(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.has_simplex(sigma)) throw Error(Errc::SimplexNotInComplex, "simplex not in complex");
  MetricGraph g;
  std::set<VertexId> verts;
  for (std::size_t idx : k.cofaces(sigma)) {
    const Simplex& tau = k.maximal_simplices()[idx];
    std::vector<VertexId> rest;
    std::set_difference(tau.vertices().begin(), tau.vertices().end(), sigma.vertices().begin(),
                        sigma.vertices().end(), std::back_inserter(rest));
    verts.insert(rest.begin(), rest.end());
  }
  // Only top simplices of dimension dim(sigma)+2 give metric edges; lower
  // cofaces leave isolated link vertices.
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t idx : k.cofaces(sigma)) {
    const Simplex& tau = k.maximal_simplices()[idx];
    if (tau.dimension() != sigma.dimension() + 2) continue;
    std::vector<VertexId> rest;
    std::set_difference(tau.vertices().begin(), tau.vertices().end(), sigma.vertices().begin(),
                        sigma.vertices().end(), std::back_inserter(rest));
    if (seen.insert({rest[0], rest[1]}).second) {
      g.edges.push_back({rest[0], rest[1], regular_dihedral_angle(tau.dimension())});
    }
  }
  g.vertices.assign(verts.begin(), verts.end());
  return g;
}

MetricGraph edge_metric_link(const SimplicialComplex& k, const Simplex& edge) {
  if (edge.size() != 2 || !k.has_simplex(edge)) throw Error(Errc::NotAnEdge, "not an edge of the complex");
  if (k.dimension() > 3) throw Error(Errc::DimensionTooHigh, "edge metric links need dimension <= 3");
  return codim2_metric_link(k, edge);
}

Automorphism Automorphism::identity(std::size_t vertex_count) {
  std::vector<VertexId> id(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) id[v] = v;
  return Automorphism(std::move(id));
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  std::vector<VertexId> out(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) out[v] = image_[inner.image_[v]];
  return Automorphism(std::move(out));
}

Automorphism Automorphism::inverse() const {
  std::vector<VertexId> out(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) out[image_[v]] = static_cast<VertexId>(v);
  return Automorphism(std::move(out));
}

std::vector<VertexId> Automorphism::apply(std::span<const VertexId> path) const {
  std::vector<VertexId> out;
  out.reserve(path.size());
  for (VertexId v : path) out.push_back(image_.at(v));
  return out;
}

Automorphism validate_automorphism(const SimplicialComplex& k, std::vector<VertexId> permutation) {
  const std::size_t n = k.vertex_count();
  if (permutation.size() != n) throw Error(Errc::InvalidPermutation, "permutation size differs from vertex count");
  std::vector<bool> hit(n, false);
  for (VertexId v : permutation) {
    if (v >= n || hit[v]) throw Error(Errc::InvalidPermutation, "not a bijection on the vertex set");
    hit[v] = true;
  }
  for (const auto& m : k.maximal_simplices()) {
    std::vector<VertexId> image;
    for (VertexId v : m.vertices()) image.push_back(permutation[v]);
    Simplex s(std::move(image));
    if (!std::binary_search(k.maximal_simplices().begin(), k.maximal_simplices().end(), s)) {
      std::string text;
      for (VertexId v : s.vertices()) text += (text.empty() ? "" : " ") + k.name(v);
      throw Error(Errc::NotSimplicial, "image {" + text + "} is not a maximal simplex");
    }
  }
  return Automorphism(std::move(permutation));
}

std::vector<Automorphism> automorphism_closure(const SimplicialComplex& k, std::span<const Automorphism> generators) {
  std::set<Automorphism> group{Automorphism::identity(k.vertex_count())};
  std::deque<Automorphism> frontier{Automorphism::identity(k.vertex_count())};
  while (!frontier.empty()) {
    Automorphism g = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators) {
      Automorphism h = s.compose(g);
      if (group.insert(h).second) frontier.push_back(h);
    }
  }
  return {group.begin(), group.end()};
}

}  // namespace cat3
