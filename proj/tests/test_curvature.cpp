#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cat3/curvature.hpp"
#include "cat3/fixtures.hpp"
#include "support.hpp"

using namespace cat3;
using testing::complex_of;

TEST_CASE("flag") {
  CHECK(is_flag(complex_of("a b c d")).flag);
  const auto hollow = complex_of("a b;b c;c a");
  const auto r = is_flag(hollow);
  CHECK_FALSE(r.flag);
  CHECK(r.witness == std::vector<VertexId>{0, 1, 2});
  CHECK(is_flag(generate_fixture("octahedron").complex).flag);
}

TEST_CASE("empty n-gons") {
  CHECK_FALSE(find_empty_ngon(complex_of("a b c d"), 3).has_value());
  const auto hollow = complex_of("a b;b c;c a");
  const auto w = find_empty_ngon(hollow, 3);
  REQUIRE(w.has_value());
  CHECK(testing::names_of(hollow, *w) == "a b c");

  const auto p4 = generate_fixture("pentagon_join:4").complex;
  const auto pent = find_empty_ngon(p4, 5);
  REQUIRE(pent.has_value());
  CHECK(testing::names_of(p4, *pent) == "v0 v1 v2 v3 v4");

  try {
    find_empty_ngon(hollow, 6);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedN);
  }
}

TEST_CASE("square with a filled diagonal is not empty") {
  const auto k = complex_of("a b c;a c d");
  CHECK_FALSE(find_empty_ngon(k, 4).has_value());
  const auto bare = complex_of("a b;b c;c d;d a");
  CHECK(find_empty_ngon(bare, 4).has_value());
}

TEST_CASE("systolic") {
  CHECK(check_systolic(complex_of("a b c d")).systolic);
  const auto r = check_systolic(generate_fixture("pentagon_join:3").complex);
  CHECK_FALSE(r.systolic);
  CHECK(r.witness.size() == 5);
}

TEST_CASE("edge links") {
  const double theta = std::acos(1.0 / 3.0);
  SUBCASE("three tetrahedra around an edge") {
    const auto r = check_edge_links(generate_fixture("tet_wheel:3").complex);
    CHECK_FALSE(r.ok);
    CHECK(std::abs(r.worst_length - 3 * theta) < 1e-12);
    CHECK(r.worst_length == doctest::Approx(3.69289).epsilon(1e-5));
  }
  SUBCASE("single tetrahedron") { CHECK(check_edge_links(complex_of("a b c d")).ok); }
  SUBCASE("six tetrahedra around an edge") {
    const auto r = check_edge_links(generate_fixture("tet_wheel:6").complex);
    CHECK(r.ok);
    CHECK(std::abs(r.worst_length - 6 * theta) < 1e-12);
    CHECK(r.worst_length >= 2 * std::numbers::pi);
  }
}

TEST_CASE("certify") {
  CHECK(certify_cat0_necessary(complex_of("a b c d")).passes);
  CHECK_FALSE(certify_cat0_necessary(generate_fixture("pentagon_join:4").complex).passes);
  CHECK_FALSE(certify_cat0_necessary(complex_of("a b;b c;c a")).passes);
  for (const auto& name : bundled_fixtures()) {
    const auto f = generate_fixture(name);
    const auto r = certify_cat0_necessary(f.complex);
    if (f.declared_cat0) CHECK_MESSAGE(r.passes, name);
    if (r.systolic.systolic) {
      CHECK(r.flag.flag);
      for (int n : {3, 4, 5}) CHECK_FALSE(find_empty_ngon(f.complex, n).has_value());
    }
  }
}

TEST_CASE("full subcomplexes of complexes without empty n-gons have none") {
  std::mt19937 rng(7);
  for (const auto& name : bundled_fixtures()) {
    const auto f = generate_fixture(name);
    bool clean = true;
    for (int n : {3, 4, 5}) clean = clean && !find_empty_ngon(f.complex, n);
    if (!clean) continue;
    const auto nv = f.complex.vertex_count();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<VertexId> w;
      for (VertexId v = 0; v < nv; ++v)
        if (std::bernoulli_distribution(0.6)(rng)) w.push_back(v);
      const auto sub = induced_subcomplex(f.complex, w);
      if (sub.complex.empty()) continue;
      for (int n : {3, 4, 5}) CHECK_FALSE(find_empty_ngon(sub.complex, n).has_value());
    }
  }
}
