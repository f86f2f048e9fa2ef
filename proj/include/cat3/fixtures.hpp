#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cat3/complex.hpp"

namespace cat3 {

/// A generated complex with its author metadata.
struct Fixture {
  std::string name;  // e.g. "pentagon_join:4"
  SimplicialComplex complex;
  /// Known to model a CAT(0) simplicial complex of dimension <= 3.
  bool declared_cat0 = false;
  /// Generators of a group of simplicial automorphisms.
  std::vector<Automorphism> symmetries;
};

/// Generators:
///   pentagon_join:n  (n >= 3)  (n-2)-simplex x1..x{n-1} joined with the 5-cycle v0..v4
///   narwhal:n        (n >= 3)  pentagon_join:n plus the triangle {v2, v3, u}
///   hex_disk                   center o, ring v0..v5
///   stacked_tets:k   (k >= 1)  tetrahedra {p_i, .., p_{i+3}}, i < k
///   octahedron                 px nx py ny pz nz
///   strip:k          (k >= 1)  triangles {p_i, p_{i+1}, p_{i+2}}, i < k
///   tet_wheel:k      (k >= 3)  k tetrahedra {a, b, c_i, c_{i+1}} around the edge ab
///   resolve                    a triangulated lattice patch with a bad pair
/// Throws BadParams.
Fixture generate_fixture(std::string_view spec);
Fixture generate_fixture(std::string_view name, const std::vector<int>& params);

std::vector<std::string> fixture_names();

/// The bundled instances exercised by the exhaustive checks.
std::vector<std::string> bundled_fixtures();

}  // namespace cat3
