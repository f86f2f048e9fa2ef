#include <doctest.h>

#include "cat3/disks.hpp"
#include "cat3/fixtures.hpp"
#include "cat3/moves.hpp"
#include "support.hpp"

using namespace cat3;
using testing::complex_of;
using testing::path_of;

namespace {

bool replays(const SimplicialComplex& k, Path p, const std::vector<Move>& moves, const Path& target) {
  for (const Move& m : moves) {
    const int before = path_length(p);
    p = apply_move(p, m);
    if (!is_valid_path(k, p) || path_length(p) != before + length_delta(m.kind)) return false;
  }
  return p == target;
}

}  // namespace

TEST_CASE("enumerate_moves") {
  SUBCASE("tetrahedron") {
    const auto k = complex_of("a b c d");
    const auto moves = enumerate_moves(k, path_of(k, "a b c"));
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].kind == MoveKind::Triangle);
    CHECK(moves[0].new_segment == path_of(k, "a c"));
    CHECK(moves[1].kind == MoveKind::TriangleTriangle);
    CHECK(moves[1].new_segment == path_of(k, "a d c"));
  }
  SUBCASE("backtrack") {
    const auto k = complex_of("a b");
    const auto moves = enumerate_moves(k, path_of(k, "a b a"));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].kind == MoveKind::Trivial);
  }
  SUBCASE("hexagonal disk") {
    const auto k = generate_fixture("hex_disk").complex;
    const auto moves = enumerate_moves(k, path_of(k, "v0 v1 v2"));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].kind == MoveKind::TriangleTriangle);
    CHECK(moves[0].new_segment == path_of(k, "v0 o v2"));
  }
}

TEST_CASE("apply_move") {
  const auto k = complex_of("a b c d");
  CHECK(apply_move(path_of(k, "a b a"), enumerate_moves(k, path_of(k, "a b a"))[0]) == path_of(k, "a"));
  const auto m = enumerate_moves(k, path_of(k, "a b c"))[0];
  CHECK(apply_move(path_of(k, "a b c"), m) == path_of(k, "a c"));
  try {
    apply_move(path_of(k, "a d c"), m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MoveMismatch);
  }
  const auto hex = generate_fixture("hex_disk").complex;
  const auto tt = enumerate_moves(hex, path_of(hex, "v0 v1 v2"))[0];
  CHECK(apply_move(path_of(hex, "v0 v1 v2"), tt) == path_of(hex, "v0 o v2"));
  CHECK(format_move(hex, tt) == "triangle_triangle@1: v0 v1 v2 -> v0 o v2");
}

TEST_CASE("moves preserve endpoints, validity and length deltas") {
  for (const char* name : {"hex_disk", "octahedron", "resolve"}) {
    const auto k = generate_fixture(name).complex;
    const testing::Distances oracle(k);
    for (VertexId u = 0; u < k.vertex_count(); ++u)
      for (VertexId w = 0; w < k.vertex_count(); w += 3)
        for (const Path& p : oracle.walks(u, w, 3))
          for (const Move& m : enumerate_moves(k, p)) {
            const Path q = apply_move(p, m);
            CHECK(q.front() == p.front());
            CHECK(q.back() == p.back());
            CHECK(is_valid_path(k, q));
            CHECK(path_length(q) - path_length(p) == length_delta(m.kind));
          }
  }
}

TEST_CASE("chain shortening") {
  SUBCASE("strip with two adjacent positive vertices") {
    const auto k = generate_fixture("strip:3").complex;
    const Path gamma = path_of(k, "p0 p1 p3 p4");
    Path loop = gamma;
    for (VertexId v : path_of(k, "p2 p0")) loop.push_back(v);
    const auto disks = minimal_spanning_disks(k, loop);
    REQUIRE(disks.size() == 1);
    const auto seq = find_chain_shortening(disks[0], gamma);
    REQUIRE(seq.has_value());
    REQUIRE(seq->size() == 2);
    CHECK((*seq)[0].kind == MoveKind::TriangleTriangle);
    CHECK((*seq)[1].kind == MoveKind::Triangle);
    CHECK(replays(k, gamma, *seq, path_of(k, "p0 p2 p4")));
  }
  SUBCASE("positives separated by a negative vertex") {
    // Degrees along gamma = [0,1,2,3,4]: 3, 5, 3 at the interior vertices.
    std::vector<DiskTriangle> t{{0, 1, 5}, {1, 2, 5}, {2, 6, 5}, {2, 7, 6}, {2, 3, 7}, {3, 4, 7}};
    const DiskDiagram d({0, 1, 2, 3, 4, 5, 6, 7}, t, {0, 1, 2, 3, 4, 7, 6, 5});
    REQUIRE(validate_disk(d).nonsingular);
    REQUIRE(d.degree(1) == 3);
    REQUIRE(d.degree(2) == 5);
    REQUIRE(d.degree(3) == 3);
    CHECK_FALSE(find_chain_shortening(d, std::vector<DiskVertex>{0, 1, 2, 3, 4}).has_value());
  }
  SUBCASE("all zero vertices") {
    std::vector<DiskTriangle> t{{0, 1, 4}, {1, 5, 4}, {1, 2, 5}, {2, 6, 5}, {2, 3, 6}};
    const DiskDiagram d({0, 1, 2, 3, 4, 5, 6}, t, {0, 1, 2, 3, 6, 5, 4});
    REQUIRE(validate_disk(d).nonsingular);
    REQUIRE(d.degree(1) == 4);
    REQUIRE(d.degree(2) == 4);
    CHECK_FALSE(find_chain_shortening(d, std::vector<DiskVertex>{0, 1, 2, 3}).has_value());
  }
}

TEST_CASE("straighten") {
  SUBCASE("backtrack") {
    const auto k = complex_of("a b");
    const auto r = straighten(k, path_of(k, "a b a"));
    CHECK(r.path == path_of(k, "a"));
    REQUIRE(r.moves.size() == 1);
    CHECK(r.moves[0].kind == MoveKind::Trivial);
  }
  SUBCASE("octahedron with target") {
    const auto k = generate_fixture("octahedron").complex;
    const auto r = straighten(k, path_of(k, "px py nx"), path_of(k, "px pz nx"));
    CHECK(r.path == path_of(k, "px pz nx"));
    REQUIRE(r.moves.size() == 1);
    CHECK(r.moves[0].kind == MoveKind::TriangleTriangle);
    CHECK(r.moves[0].position == 1);
  }
  SUBCASE("hexagonal disk") {
    const auto k = generate_fixture("hex_disk").complex;
    const Path alpha = path_of(k, "v0 v1 v2 v3"), beta = path_of(k, "v0 o v3");
    const auto r = straighten(k, alpha, beta);
    CHECK(r.path == beta);
    CHECK(replays(k, alpha, r.moves, beta));
    const auto free = straighten(k, alpha);
    CHECK(is_geodesic(k, free.path));
    CHECK(replays(k, alpha, free.moves, free.path));
  }
  SUBCASE("errors") {
    const auto k = generate_fixture("hex_disk").complex;
    auto code = [&](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::BadParams;
    };
    CHECK(code([&] { straighten(k, path_of(k, "v0 o v3"), path_of(k, "v0 v1 v2 v3")); }) == Errc::TargetNotGeodesic);
    CHECK(code([&] { straighten(k, path_of(k, "v0 o v3"), path_of(k, "v0 o v2")); }) == Errc::EndpointMismatch);
  }
}

TEST_CASE("straighten reaches a geodesic from every short path") {
  for (const char* name : {"hex_disk", "octahedron", "strip:3", "stacked_tets:2"}) {
    const auto k = generate_fixture(name).complex;
    const testing::Distances oracle(k);
    for (VertexId u = 0; u < k.vertex_count(); ++u)
      for (VertexId w = 0; w < k.vertex_count(); ++w)
        for (int len = 0; len <= 4; ++len)
          for (const Path& p : oracle.walks(u, w, len)) {
            const auto r = straighten(k, p);
            CHECK(oracle.is_geodesic(r.path));
            CHECK(replays(k, p, r.moves, r.path));
          }
  }
}

TEST_CASE("shorter_fellow") {
  const auto hex = generate_fixture("hex_disk").complex;
  CHECK_FALSE(shorter_fellow(hex, path_of(hex, "v0 o v3")).has_value());
  const auto k = complex_of("a b");
  const auto back = shorter_fellow(k, path_of(k, "a b a"));
  REQUIRE(back.has_value());
  CHECK(*back == path_of(k, "a"));
  const Path alpha = path_of(hex, "v0 v1 v2 v3");
  const auto s = shorter_fellow(hex, alpha);
  REQUIRE(s.has_value());
  CHECK(path_length(*s) == 2);
  const testing::Distances oracle(hex);
  CHECK(oracle.path_distance(alpha, *s) <= 1.0);
  // Brute force: some shorter path with the same endpoints stays within 1.
  bool any = false;
  for (int len = 0; len < 3; ++len)
    for (const Path& q : oracle.walks(alpha.front(), alpha.back(), len)) any = any || oracle.path_distance(alpha, q) <= 1;
  CHECK(any);
}

TEST_CASE("reverse_reachable") {
  const auto k = complex_of("a b c d");
  const auto set = reverse_reachable(k, path_of(k, "a b"), 3);
  CHECK(set.contains(path_of(k, "a b")));
  CHECK(set.contains(path_of(k, "a c b")));
  CHECK(set.contains(path_of(k, "a b a b")));
  for (const Path& p : set) CHECK(path_length(p) <= 3);
}
