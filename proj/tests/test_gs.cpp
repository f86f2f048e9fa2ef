#include <doctest.h>

#include "cat3/fixtures.hpp"
#include "cat3/gs_geodesics.hpp"
#include "cat3/moves.hpp"
#include "support.hpp"

using namespace cat3;
using testing::complex_of;
using testing::path_of;

namespace {

std::vector<std::string> declared_fixtures() {
  std::vector<std::string> out;
  for (const auto& name : bundled_fixtures())
    if (generate_fixture(name).declared_cat0) out.push_back(name);
  return out;
}

// GS geodesics by filtering the oracle's geodesics through find_bad_pairs.
std::vector<Path> brute_gs(const SimplicialComplex& k, const testing::Distances& oracle, VertexId u, VertexId w) {
  std::vector<Path> out;
  for (const Path& g : oracle.geodesics(u, w))
    if (find_bad_pairs(k, g).empty()) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("bad pair on the resolve fixture") {
  const auto k = generate_fixture("resolve").complex;
  const Path gamma = path_of(k, "d1 d2 c2 c3 c4 b4 a4");
  REQUIRE(is_geodesic(k, gamma));
  const auto bad = find_bad_pairs(k, gamma);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad[0].index == 4);
  CHECK(bad[0].degree_prev == 4);
  CHECK(bad[0].degree == 3);
  REQUIRE(bad[0].apex.has_value());
  CHECK(k.name(*bad[0].apex) == "b3");
  CHECK_FALSE(is_gs(k, gamma));

  const auto r = resolve_bad_pairs(k, gamma);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0].kind == MoveKind::TriangleTriangle);
  CHECK(r.path == path_of(k, "d1 d2 c2 c3 b3 b4 a4"));
  CHECK(find_bad_pairs(k, r.path).empty());
  CHECK(is_gs(k, r.path));
}

TEST_CASE("short and unique geodesics have no bad pairs") {
  const auto k = generate_fixture("hex_disk").complex;
  CHECK(find_bad_pairs(k, path_of(k, "v0")).empty());
  CHECK(find_bad_pairs(k, path_of(k, "v0 o")).empty());
  const Path unique = path_of(k, "v0 o v3");
  CHECK(enumerate_geodesics(k, unique.front(), unique.back()).size() == 1);
  CHECK(witness_disks(k, unique).empty());
  CHECK(is_gs(k, unique));
  const auto r = resolve_bad_pairs(k, unique);
  CHECK(r.path == unique);
  CHECK(r.moves.empty());
}

TEST_CASE("non-geodesic input") {
  const auto k = generate_fixture("hex_disk").complex;
  const Path alpha = path_of(k, "v0 v1 v2 v3");
  CHECK_FALSE(is_gs(k, alpha));
  for (auto f : {+[](const SimplicialComplex& c, const Path& p) { (void)witness_disks(c, p); },
                 +[](const SimplicialComplex& c, const Path& p) { (void)find_bad_pairs(c, p); },
                 +[](const SimplicialComplex& c, const Path& p) { (void)resolve_bad_pairs(c, p); }}) {
    try {
      f(k, alpha);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotGeodesic);
    }
  }
}

TEST_CASE("octahedron witnesses pair each geodesic with the other three") {
  const auto k = generate_fixture("octahedron").complex;
  const auto geos = enumerate_geodesics(k, k.vertex("px"), k.vertex("nx"));
  REQUIRE(geos.size() == 4);
  for (const Path& g : geos) {
    std::set<Path> companions;
    for (const auto& w : witness_disks(k, g)) {
      companions.insert(w.delta);
      CHECK(w.disk.boundary_segment(0, 2) == g);
      Path loop = g;
      for (auto it = w.delta.rbegin() + 1; it != w.delta.rend(); ++it) loop.push_back(*it);
      CHECK(w.disk.area() == minimal_area(k, loop));
    }
    CHECK(companions.size() == 3);
    CHECK_FALSE(companions.contains(g));
  }
}

TEST_CASE("geodesic sides of witness disks") {
  for (const auto& name : declared_fixtures()) {
    const auto k = generate_fixture(name).complex;
    GsOracle gs(k);
    for (VertexId u = 0; u < k.vertex_count(); ++u)
      for (VertexId w = 0; w < k.vertex_count(); ++w)
        for (const Path& g : enumerate_geodesics(k, u, w)) {
          const auto n = g.size() - 1;
          for (const auto& wd : gs.witnesses(g))
            for (const SubDisk& piece : nonsingular_pieces(wd.disk)) {
              const auto& walk = piece.disk.boundary();
              const auto& pos = piece.walk_positions;
              const std::size_t m = walk.size();
              int defect = 0;
              for (std::size_t j = 0; j < m; ++j) {
                const std::size_t p = pos[j];
                if (p == 0 || p >= n) continue;
                if (pos[(j + m - 1) % m] != p - 1 || pos[(j + 1) % m] != p + 1) continue;
                const int deg = piece.disk.degree(walk[j]);
                CHECK_MESSAGE(deg >= 3, name);
                defect += 4 - deg;
              }
              CHECK_MESSAGE(defect <= 1, name);
            }
        }
  }
}

TEST_CASE("every pair in a declared fixture is joined by a GS geodesic") {
  for (const auto& name : declared_fixtures()) {
    const auto k = generate_fixture(name).complex;
    const testing::Distances oracle(k);
    GsOracle gs(k);
    for (VertexId u = 0; u < k.vertex_count(); ++u)
      for (VertexId w = 0; w < k.vertex_count(); ++w) {
        const auto brute = brute_gs(k, oracle, u, w);
        CHECK_MESSAGE(!brute.empty(), name);
        CHECK(gs.gs_geodesics(u, w) == brute);
        for (const Path& g : oracle.geodesics(u, w)) {
          const auto r = gs.resolve(g);
          CHECK(r.path.front() == u);
          CHECK(r.path.back() == w);
          CHECK(std::find(brute.begin(), brute.end(), r.path) != brute.end());
          const auto len = g.size() - 1;
          CHECK(r.moves.size() <= len * (len - 1) / 2);
          Path p = g;
          for (const Move& m : r.moves) {
            CHECK(m.kind == MoveKind::TriangleTriangle);
            p = apply_move(p, m);
            CHECK(oracle.is_geodesic(p));
          }
          CHECK(p == r.path);
        }
      }
  }
}

TEST_CASE("GS systems fellow travel") {
  SUBCASE("a single path") {
    const auto k = complex_of("a b c d");
    const PathSystem s{{path_of(k, "a b")}};
    const auto r = check_fellow_travel(k, s, 0, 1);
    CHECK(r.ok);
    CHECK(r.max_distance == 0);
  }
  SUBCASE("declared fixtures with (2,1)") {
    for (const auto& name : declared_fixtures()) {
      const auto k = generate_fixture(name).complex;
      GsOracle gs(k);
      const auto r = check_fellow_travel(k, gs_system(gs), 2, 1);
      CHECK_MESSAGE(r.ok, name);
      CHECK(r.max_distance <= 2);
    }
  }
  SUBCASE("worst pair is reported") {
    const auto k = generate_fixture("hex_disk").complex;
    const PathSystem s{{path_of(k, "v0 o v3"), path_of(k, "v0 v1 v2 v3")}};
    const auto r = check_fellow_travel(k, s, 0.5, 0);
    CHECK_FALSE(r.ok);
    CHECK(r.max_distance == doctest::Approx(1));
    REQUIRE(r.worst.has_value());
    const testing::Distances oracle(k);
    CHECK(oracle.path_distance(r.worst->first, r.worst->second) == doctest::Approx(1));
  }
  SUBCASE("all octahedron geodesics") {
    const auto k = generate_fixture("octahedron").complex;
    const auto r = check_fellow_travel(k, geodesic_system(k), 2, 0);
    const testing::Distances oracle(k);
    double brute = 0;
    const auto sys = geodesic_system(k);
    for (const Path& a : sys.members)
      for (const Path& b : sys.members)
        if (a.front() == b.front() && a.back() == b.back()) brute = std::max(brute, oracle.path_distance(a, b));
    CHECK(r.max_distance == doctest::Approx(brute));
    MESSAGE("octahedron geodesics (k, 0): max distance " << r.max_distance);
  }
}

TEST_CASE("G-invariance") {
  const auto f = generate_fixture("octahedron");
  GsOracle gs(f.complex);
  const auto sys = gs_system(gs);
  const std::size_t n = f.complex.vertex_count();
  CHECK(check_g_invariance(sys, {Automorphism::identity(n)}).ok);
  CHECK(check_g_invariance(sys, f.symmetries).ok);
  CHECK(check_g_invariance(geodesic_system(f.complex), automorphism_closure(f.complex, f.symmetries)).ok);

  PathSystem partial = sys;
  const Path removed = *partial.members.rbegin();
  partial.members.erase(removed);
  const auto r = check_g_invariance(partial, f.symmetries);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(partial.contains(*r.witness));
}

TEST_CASE("narwhal report") {
  for (const char* name : {"narwhal:3", "narwhal:4"}) {
    const auto k = generate_fixture(name).complex;
    GsOracle gs(k);
    const VertexId u = k.vertex("u");
    int pairs = 0, without = 0;
    for (VertexId w = 0; w < k.vertex_count(); ++w) {
      const auto geos = enumerate_geodesics(k, u, w);
      if (geos.size() < 2) continue;
      ++pairs;
      if (gs.gs_geodesics(u, w).empty()) ++without;
    }
    MESSAGE(std::string(name) << ": " << without << " of " << pairs << " targets from u with several geodesics have no GS geodesic");
    CHECK(pairs > 0);
  }
}
