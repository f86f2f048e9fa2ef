#pragma once

#include <cstddef>
#include <vector>

#include "cat3/complex.hpp"

namespace cat3 {

/// Vertex sequence v_0..v_n in the 1-skeleton; the edges are implied.
using Path = std::vector<VertexId>;

inline int path_length(const Path& p) { return p.empty() ? 0 : static_cast<int>(p.size()) - 1; }

struct PathProperties {
  bool tight = false;
  bool closed = false;
  int length = 0;
};

bool is_valid_path(const SimplicialComplex& k, const Path& p);
/// Throws InvalidStep naming the first non-edge step.
void require_valid_path(const SimplicialComplex& k, const Path& p);
/// Throws InvalidStep.
PathProperties path_properties(const SimplicialComplex& k, const Path& p);

bool is_geodesic(const SimplicialComplex& k, const Path& p);

/// A point of a path's image: vertex `from` when offset == 0, otherwise the
/// point at `offset` in (0,1) along the edge from -> to.
struct PathPoint {
  VertexId from = 0;
  VertexId to = 0;
  double offset = 0.0;

  bool is_vertex() const { return offset == 0.0; }
};

/// Unit-speed parameterization clamped to the endpoints outside [0, length].
PathPoint evaluate(const Path& p, double t);

/// Distance between two points of the 1-skeleton. Two points on the same
/// edge are compared along it; otherwise the cheapest route through an
/// endpoint or the midpoint of each carrying edge, where midpoints of two
/// edges of a common triangle are 1/2 apart.
double point_distance(const SimplicialComplex& k, const PathPoint& a, const PathPoint& b);

/// Max over t of point_distance(alpha(t), beta(t)), taken on the half-integer grid.
double path_distance(const SimplicialComplex& k, const Path& alpha, const Path& beta);

/// BFS distance; throws UnknownVertex.
int combinatorial_distance(const SimplicialComplex& k, VertexId v, VertexId w);

/// All geodesics v -> w in lexicographic order. Throws GeodesicLimitExceeded
/// when more than `limit` exist.
std::vector<Path> enumerate_geodesics(const SimplicialComplex& k, VertexId v, VertexId w,
                                      std::size_t limit = 1'000'000);

/// Every valid path of exactly `length` edges from v to w, lexicographic.
std::vector<Path> enumerate_paths(const SimplicialComplex& k, VertexId v, VertexId w, int length);

}  // namespace cat3
