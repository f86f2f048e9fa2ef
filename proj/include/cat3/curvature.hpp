#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cat3/complex.hpp"

namespace cat3 {

struct FlagResult {
  bool flag = true;
  /// Smallest clique of the 1-skeleton that does not span a simplex.
  std::vector<VertexId> witness;
};

FlagResult is_flag(const SimplicialComplex& k);

/// A tight n-cycle (n in {3,4,5}) that is empty: its minimal spanning disk
/// needs an interior vertex. Cycles are reported in canonical rotation and
/// direction. Throws UnsupportedN.
std::optional<std::vector<VertexId>> find_empty_ngon(const SimplicialComplex& k, int n);

/// Every empty n-gon, canonicalized and deduplicated.
std::vector<std::vector<VertexId>> all_empty_ngons(const SimplicialComplex& k, int n);

/// True iff the cycle (listed without repeating the first vertex) has a
/// filling without interior vertices.
bool ngon_filled(const SimplicialComplex& k, const std::vector<VertexId>& cycle);

struct SystolicResult {
  bool systolic = true;
  /// Failing simplex (empty = the whole complex) in ambient ids.
  std::optional<std::vector<VertexId>> failing_simplex;
  /// Non-spanning clique or empty cycle inside the failing link, ambient ids.
  std::vector<VertexId> witness;
  std::string reason;
};

/// Flag and 6-large links of every simplex, the empty simplex included.
SystolicResult check_systolic(const SimplicialComplex& k);

struct EdgeLinkResult {
  bool ok = true;
  std::optional<Simplex> worst_edge;
  /// Shortest cycle in the worst edge link (ambient ids), if any cycle exists.
  std::vector<VertexId> worst_cycle;
  double worst_length = 0.0;  // radians; 0 if no cycle anywhere
};

/// Every edge link must have girth >= 2π. Throws DimensionTooHigh.
EdgeLinkResult check_edge_links(const SimplicialComplex& k);

struct CurvatureReport {
  FlagResult flag;
  std::map<int, std::optional<std::vector<VertexId>>> empty_ngons;  // n -> witness
  SystolicResult systolic;
  /// Absent when the complex has dimension > 3.
  std::optional<EdgeLinkResult> edge_links;
  bool passes = false;
};

/// The necessary battery for a CAT(0) simplicial complex of dimension <= 3.
/// Passing it does not certify CAT(0).
CurvatureReport certify_cat0_necessary(const SimplicialComplex& k);

}  // namespace cat3
