#pragma once

#include <vector>

#include "cat3/complex.hpp"
#include "cat3/disks.hpp"
#include "cat3/moves.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

struct MergeResult {
  DiskDiagram disk;
  /// Image of gamma after the moves.
  Path gamma;
  /// Tri-tri moves applied to gamma, in order.
  std::vector<Move> moves;
};

/// Glues d1 and d2 along the geodesic gamma (clockwise on d1, the other way
/// on d2; d2 is mirrored when needed) and removes interior vertices of
/// degree 4 and 5 on gamma one at a time, from the start of gamma, by
/// replacing their star with a fan from a link vertex. Throws
/// LabelMismatchOnGamma, UnresolvableVertex.
MergeResult merge_disks(const SimplicialComplex& k, const DiskDiagram& d1, const DiskDiagram& d2, const Path& gamma);

}  // namespace cat3
