#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cat3/complex.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

/// Local vertex id of a disk diagram.
using DiskVertex = int;

/// A triangle of a disk, listed so that x -> y -> z runs clockwise.
using DiskTriangle = std::array<DiskVertex, 3>;

/// Planar triangulated disk (possibly singular) with a simplicial labeling
/// into a complex. The boundary is the closed walk around the outside read
/// clockwise; spur edges are walked twice and cut points more than once.
/// The triangles' orientation fixes the rotation system.
class DiskDiagram {
 public:
  DiskDiagram() = default;
  DiskDiagram(std::vector<VertexId> labels, std::vector<DiskTriangle> triangles, std::vector<DiskVertex> boundary);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<VertexId>& labels() const noexcept { return labels_; }
  VertexId label(DiskVertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<DiskTriangle>& triangles() const noexcept { return triangles_; }
  const std::vector<DiskVertex>& boundary() const noexcept { return boundary_; }

  int area() const noexcept { return static_cast<int>(triangles_.size()); }
  int boundary_length() const noexcept;

  /// Number of distinct edges at v (triangle edges and spur edges).
  int degree(DiskVertex v) const;
  std::vector<std::pair<DiskVertex, DiskVertex>> edges() const;
  bool on_boundary(DiskVertex v) const;
  std::vector<DiskVertex> interior_vertices() const;
  /// Neighbors of v in clockwise order. For boundary vertices the order runs
  /// from the outgoing boundary edge around the fan.
  std::vector<DiskVertex> rotation(DiskVertex v) const;

  /// The boundary labels as a closed path starting at boundary position 0.
  Path boundary_path() const;
  /// Labels along boundary positions [start, start+length], wrapping around.
  Path boundary_segment(std::size_t start, std::size_t length) const;

  /// Optional start and end boundary positions that make the disk doubly based.
  std::optional<std::pair<std::size_t, std::size_t>> basepoints;

  /// Relabels local ids canonically (boundary by first visit, interior by a
  /// deterministic sweep) so equal diagrams compare equal.
  DiskDiagram canonical() const;

  bool operator==(const DiskDiagram& other) const {
    return labels_ == other.labels_ && triangles_ == other.triangles_ && boundary_ == other.boundary_;
  }
  bool operator<(const DiskDiagram& other) const;

 private:
  std::vector<VertexId> labels_;
  std::vector<DiskTriangle> triangles_;
  std::vector<DiskVertex> boundary_;
};

struct DiskValidation {
  bool nonsingular = false;
  std::vector<DiskVertex> cut_points;
};

/// Checks the disk invariants; with `k` also checks the labeling is
/// simplicial. Throws NotADisk or LabelNotAFace.
DiskValidation validate_disk(const DiskDiagram& d, const SimplicialComplex* k = nullptr);

/// A nonsingular piece of a singular disk; `to_parent` maps local ids back.
struct SubDisk {
  DiskDiagram disk;
  std::vector<DiskVertex> to_parent;
  /// Parent boundary position of each boundary entry of the piece.
  std::vector<std::size_t> walk_positions;
};

/// Splits at cut points and drops spurs. Pieces are ordered by where their
/// boundary first appears on the parent's boundary walk.
std::vector<SubDisk> nonsingular_pieces(const DiskDiagram& d);

enum class Sign { Positive, Zero, Negative };

struct BoundarySign {
  std::size_t position = 0;  // index into the boundary walk
  DiskVertex vertex = 0;
  int degree = 0;
  Sign sign = Sign::Zero;
  /// k in {1,2,3} when 4 - degree = k, otherwise 0.
  int positive_class = 0;
};

struct SignClassification {
  std::vector<BoundarySign> boundary;
  std::vector<std::pair<DiskVertex, int>> interior;  // (vertex, degree)
};

Sign sign_of_degree(int degree);

/// Throws SingularDisk.
SignClassification classify_boundary(const DiskDiagram& d);
/// Sum of (4 - deg) on the boundary plus (6 - deg) inside. Throws SingularDisk.
int gauss_bonnet_sum(const DiskDiagram& d);
/// Every interior vertex has degree >= 6.
bool is_cat0_disk(const DiskDiagram& d);

struct SpanOptions {
  /// Defaults to the squared boundary length.
  std::optional<int> max_area;
  std::size_t max_disks = 200'000;
  /// Assert that every returned disk is CAT(0) (for declared-CAT(0) inputs
  /// of dimension <= 3).
  bool declared_cat0 = false;
};

/// Minimal combinatorial area of a disk spanning the closed path.
/// Throws NotClosed, NoDiskWithinBound.
int minimal_area(const SimplicialComplex& k, const Path& loop, std::optional<int> max_area = std::nullopt);

/// All minimal-area disks spanning the closed path, deduplicated up to
/// label-preserving isomorphism fixing the boundary, in canonical order.
/// Throws NotClosed, NoDiskWithinBound, DiskLimitExceeded.
std::vector<DiskDiagram> minimal_spanning_disks(const SimplicialComplex& k, const Path& loop, SpanOptions options = {});

/// Reusable search state: caches minimal areas of boundary words across
/// calls on the same complex. Not thread safe; use one per thread.
class DiskSearch {
 public:
  explicit DiskSearch(const SimplicialComplex& k);
  ~DiskSearch();
  DiskSearch(const DiskSearch&) = delete;
  DiskSearch& operator=(const DiskSearch&) = delete;

  int minimal_area(const Path& loop, std::optional<int> max_area = std::nullopt);
  std::vector<DiskDiagram> minimal_disks(const Path& loop, const SpanOptions& options = {});

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace cat3
