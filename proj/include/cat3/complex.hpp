#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cat3/error.hpp"

namespace cat3 {

using VertexId = std::uint32_t;

/// A simplex identified with its vertex set, stored strictly increasing.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input. Throws DuplicateVertexInSimplex / EmptySimplex.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct BuildOptions {
  bool require_connected = true;
  bool allow_empty = false;
};

/// Finite simplicial complex given by its maximal simplices. Vertex ids are
/// dense (0..V-1); every derived structure is computed at build and the
/// object is immutable afterwards.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Maximal simplices over ids that need not be dense; ids are renumbered
  /// in increasing order. Names default to the original id in decimal.
  static SimplicialComplex build(const std::vector<Simplex>& maximal, std::vector<std::string> names = {},
                                 BuildOptions options = {});

  /// Same as build() but the ids are already dense and `names` has one entry
  /// per vertex.
  static SimplicialComplex build_dense(std::size_t vertex_count, const std::vector<Simplex>& maximal,
                                       std::vector<std::string> names, BuildOptions options = {});

  std::size_t vertex_count() const noexcept { return names_.size(); }
  int dimension() const noexcept { return dimension_; }
  bool empty() const noexcept { return names_.empty(); }
  bool connected() const noexcept { return connected_; }

  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexId vertex(std::string_view name) const;

  bool has_vertex(VertexId v) const noexcept { return v < names_.size(); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_simplex(std::span<const VertexId> vertices) const;
  bool has_simplex(const Simplex& s) const { return has_simplex(s.vertices()); }
  bool has_face(VertexId a, VertexId b, VertexId c) const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

  /// Indices into maximal_simplices() of the maximal simplices containing `face`.
  const std::vector<std::size_t>& cofaces(const Simplex& face) const;

  /// All simplices of a given dimension, sorted.
  std::vector<Simplex> simplices(int dimension) const;
  std::size_t count(int dimension) const;
  /// Every simplex, sorted by dimension then lexicographically.
  std::vector<Simplex> all_simplices() const;

  /// Combinatorial (edge-count) distance in the 1-skeleton; -1 if unreachable.
  int distance(VertexId a, VertexId b) const;
  int diameter() const;
  /// Half-edge steps between two points, each a vertex (x == y) or the
  /// midpoint of the edge xy, in the graph joining each midpoint to the ends
  /// of its edge and to the midpoints of the other edges of its triangles.
  /// Throws NotAnEdge.
  int half_steps(VertexId a1, VertexId a2, VertexId b1, VertexId b2) const;

  /// Vertices with third vertex forming a triangle with the edge ab, ascending.
  std::vector<VertexId> common_faces(VertexId a, VertexId b) const;

  bool operator==(const SimplicialComplex& other) const { return maximal_ == other.maximal_ && names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<Simplex> maximal_;
  std::map<Simplex, std::vector<std::size_t>> face_index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> edge_matrix_;
  std::vector<int> distances_;
  std::vector<int> edge_ids_;    // a * V + b, -1 off the 1-skeleton
  std::size_t half_nodes_ = 0;
  std::vector<int> half_steps_;  // over vertices then edge midpoints
  int dimension_ = -1;
  bool connected_ = false;
};

std::vector<VertexId> simplex_union(const Simplex& a, const Simplex& b);

/// Closed star and combinatorial link of a simplex. Both carry local dense
/// ids; `to_parent` maps them back to the ambient complex.
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<VertexId> to_parent;

  std::vector<VertexId> parent_vertices() const { return to_parent; }
  /// Maximal simplices expressed in the ambient ids.
  std::vector<Simplex> parent_simplices() const;
};

struct LocalStructure {
  Subcomplex closed_star;
  Subcomplex link;
};

/// Throws SimplexNotInComplex.
LocalStructure local_structure(const SimplicialComplex& k, const Simplex& sigma);

/// The induced subcomplex on `vertices`, allowed to be empty or disconnected.
Subcomplex induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices);

/// The induced subcomplex on `vertices`; it must be nonempty and connected
/// (EmptyOrDisconnectedResult otherwise). Throws UnknownVertex.
Subcomplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices);

struct MetricEdge {
  VertexId a;
  VertexId b;
  double length;
};

/// Metric graph with positive edge lengths (radians).
struct MetricGraph {
  std::vector<VertexId> vertices;
  std::vector<MetricEdge> edges;

  struct Cycle {
    std::vector<VertexId> vertices;
    double length = 0.0;
    int edge_count = 0;
  };
  /// Shortest cycle, if the graph has one.
  std::optional<Cycle> shortest_cycle() const;
  double total_length() const;
};

/// Dihedral angle of the regular n-simplex at a codimension-2 face: arccos(1/n).
double regular_dihedral_angle(int n);

/// Three-way comparison of real quantities that treats |a-b| <= tol as equal.
/// Returns -1, 0 or 1.
int compare_with_tolerance(double a, double b, double tol = 1e-12);

/// Metric link of a codimension-2 simplex: one edge per top simplex
/// tau of dimension dim(sigma)+2 containing sigma, with length arccos(1/dim tau).
MetricGraph codim2_metric_link(const SimplicialComplex& k, const Simplex& sigma);

/// Metric link of an edge of a complex of dimension <= 3.
/// Throws NotAnEdge, DimensionTooHigh.
MetricGraph edge_metric_link(const SimplicialComplex& k, const Simplex& edge);

/// Simplicial automorphism of a complex.
class Automorphism {
 public:
  static Automorphism identity(std::size_t vertex_count);

  VertexId operator()(VertexId v) const { return image_[v]; }
  const std::vector<VertexId>& images() const noexcept { return image_; }
  std::size_t size() const noexcept { return image_.size(); }

  Automorphism compose(const Automorphism& inner) const;  // this ∘ inner
  Automorphism inverse() const;
  std::vector<VertexId> apply(std::span<const VertexId> path) const;

  auto operator<=>(const Automorphism&) const = default;

 private:
  friend Automorphism validate_automorphism(const SimplicialComplex&, std::vector<VertexId>);
  explicit Automorphism(std::vector<VertexId> image) : image_(std::move(image)) {}
  std::vector<VertexId> image_;
};

/// Throws InvalidPermutation (not a bijection) or NotSimplicial.
Automorphism validate_automorphism(const SimplicialComplex& k, std::vector<VertexId> permutation);

/// The group generated by `generators` (identity included), sorted.
std::vector<Automorphism> automorphism_closure(const SimplicialComplex& k,
                                               std::span<const Automorphism> generators);

}  // namespace cat3
