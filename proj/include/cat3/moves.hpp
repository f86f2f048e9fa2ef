#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cat3/complex.hpp"
#include "cat3/disks.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

enum class MoveKind { Trivial, Triangle, TriangleTriangle };

std::string_view move_kind_name(MoveKind kind);
/// Change in path length: -2, -1 or 0.
int length_delta(MoveKind kind);

/// A basic move replacing the segment centered at `position`.
///   trivial            [x,y,x] -> [x]
///   triangle           [x,y,z] -> [x,z]      face {x,y,z}
///   triangle_triangle  [x,y,z] -> [x,w,z]    faces {x,y,w}, {y,z,w}
struct Move {
  MoveKind kind = MoveKind::Trivial;
  std::size_t position = 0;  // index of the middle vertex y
  Path old_segment;
  Path new_segment;
  std::vector<Simplex> witness;

  bool operator==(const Move&) const = default;
};

/// Every basic move applicable to the path, by position then kind then w.
std::vector<Move> enumerate_moves(const SimplicialComplex& k, const Path& alpha);

/// Throws MoveMismatch when the old segment does not match at the position.
Path apply_move(const Path& alpha, const Move& m);

/// `kind@position: old -> new` with vertex names.
std::string format_move(const SimplicialComplex& k, const Move& m);

/// Tri-tri moves followed by one triangle move that shorten gamma by one,
/// driven by the triangles of `d` next to gamma. `gamma` must run along the
/// boundary of `d` in either direction.
std::optional<std::vector<Move>> find_chain_shortening(const DiskDiagram& d, const Path& gamma);

/// Same, with gamma given as the local disk vertices it visits.
std::optional<std::vector<Move>> find_chain_shortening(const DiskDiagram& d, const std::vector<DiskVertex>& gamma);

struct StraightenResult {
  Path path;
  std::vector<Move> moves;
};

/// Without a target: a geodesic reached from alpha by basic moves (greedy,
/// then breadth-first). With a target geodesic beta: a shortest move
/// sequence from alpha to beta. Throws TargetNotGeodesic, EndpointMismatch,
/// NoMoveSequence.
StraightenResult straighten(const SimplicialComplex& k, const Path& alpha, const std::optional<Path>& beta = std::nullopt);

/// A strictly shorter path with the same endpoints at path distance <= 1,
/// or none when alpha is a geodesic.
std::optional<Path> shorter_fellow(const SimplicialComplex& k, const Path& alpha);

/// Every path of length <= max_length from which `target` is reachable by
/// basic moves.
std::set<Path> reverse_reachable(const SimplicialComplex& k, const Path& target, int max_length);

}  // namespace cat3
