#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cat3/complex.hpp"
#include "cat3/disks.hpp"
#include "cat3/moves.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

/// A minimal disk spanning gamma followed by the reverse of a companion
/// geodesic delta. Boundary positions 0..len(gamma) run along gamma.
struct WitnessDisk {
  Path delta;
  DiskDiagram disk;
};

struct WitnessOptions {
  std::size_t max_companions = 10'000;
};

/// Every minimal disk of gamma * delta^-1 over the geodesics delta != gamma
/// with the same endpoints. Throws NotGeodesic, TooManyCompanions.
std::vector<WitnessDisk> witness_disks(const SimplicialComplex& k, const Path& gamma, WitnessOptions options = {});

/// (v_{i-1}, v_i) with v_i positive and v_{i-1} zero on a nonsingular piece
/// of a witness disk.
struct BadPair {
  std::size_t index = 0;  // i
  Path delta;
  DiskDiagram disk;       // the whole witness disk
  SubDisk piece;          // the piece carrying both vertices
  int degree_prev = 0;    // deg of v_{i-1} on the piece (4)
  int degree = 0;         // deg of v_i on the piece (<= 3)
  /// Third vertex of the two triangles at v_i when degree == 3.
  std::optional<VertexId> apex;
};

/// Sorted by index. Throws NotGeodesic.
std::vector<BadPair> find_bad_pairs(const SimplicialComplex& k, const Path& gamma);

/// Bad pairs of gamma on one witness disk.
std::vector<BadPair> bad_pairs_on(const Path& gamma, const WitnessDisk& witness);

struct Resolution {
  Path path;
  std::vector<Move> moves;
};

/// Repeatedly applies a tri-tri move at the leftmost bad pair. Throws
/// NotGeodesic, NonTermination.
Resolution resolve_bad_pairs(const SimplicialComplex& k, const Path& gamma);

bool is_gs(const SimplicialComplex& k, const Path& gamma);

/// Caches witness disks and GS membership per complex. Not thread safe.
class GsOracle {
 public:
  explicit GsOracle(const SimplicialComplex& k);
  ~GsOracle();
  GsOracle(const GsOracle&) = delete;
  GsOracle& operator=(const GsOracle&) = delete;

  const SimplicialComplex& complex() const;
  const std::vector<WitnessDisk>& witnesses(const Path& gamma);
  std::vector<BadPair> bad_pairs(const Path& gamma);
  bool is_gs(const Path& gamma);
  Resolution resolve(const Path& gamma);
  /// The GS geodesics from u to w (brute force over all geodesics).
  std::vector<Path> gs_geodesics(VertexId u, VertexId w);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// A finite path system.
struct PathSystem {
  std::set<Path> members;
  bool contains(const Path& p) const { return members.contains(p); }
};

/// Every geodesic between vertices of `basepoints` (all vertices when empty).
PathSystem geodesic_system(const SimplicialComplex& k, const std::vector<VertexId>& basepoints = {});
/// The GS geodesics between vertices of `basepoints` (all vertices when empty).
PathSystem gs_system(GsOracle& oracle, const std::vector<VertexId>& basepoints = {});

struct FellowTravelResult {
  bool ok = true;
  double max_distance = 0.0;
  std::optional<std::pair<Path, Path>> worst;
};

/// Pairs whose starts and ends are both within l must stay within k.
FellowTravelResult check_fellow_travel(const SimplicialComplex& complex, const PathSystem& s, double k, int l);

struct InvarianceResult {
  bool ok = true;
  std::optional<Path> witness;
  std::optional<std::size_t> automorphism;  // index into the list
};

InvarianceResult check_g_invariance(const PathSystem& s, const std::vector<Automorphism>& autos);

}  // namespace cat3
