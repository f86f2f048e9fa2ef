#include <doctest.h>

#include <random>

#include "cat3/automata.hpp"
#include "cat3/fixtures.hpp"
#include "support.hpp"

using namespace cat3;
using testing::complex_of;
using testing::path_of;

namespace {

Dfa random_dfa(std::mt19937& rng, int alphabet) {
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  Dfa m(alphabet);
  for (int s = 0; s < n; ++s) m.add_state(std::bernoulli_distribution(0.4)(rng));
  m.set_start(std::uniform_int_distribution<int>(0, n - 1)(rng));
  for (int s = 0; s < n; ++s)
    for (Letter l = 0; l < alphabet; ++l)
      if (std::bernoulli_distribution(0.85)(rng)) m.set_transition(s, l, std::uniform_int_distribution<int>(0, n - 1)(rng));
  return m;
}

std::vector<Word> all_words(int alphabet, int max_length) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_length) continue;
    for (Letter l = 0; l < alphabet; ++l) {
      Word w = out[i];
      w.push_back(l);
      out.push_back(w);
    }
  }
  return out;
}

// Direct simulation without the library's accepts().
bool run(const Dfa& m, const Word& w) {
  int s = m.start();
  for (Letter l : w) {
    s = m.next(s, l);
    if (s == Dfa::kNone) return false;
  }
  return m.accepting(s);
}

bool contains_subpath(const Path& p, const Path& beta) {
  if (beta.size() > p.size()) return false;
  for (std::size_t i = 0; i + beta.size() <= p.size(); ++i)
    if (std::equal(beta.begin(), beta.end(), p.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  return false;
}

std::vector<Path> all_walks(const testing::Distances& oracle, int max_length) {
  std::vector<Path> out;
  for (VertexId v = 0; v < oracle.n; ++v) out.push_back({v});
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) - 1 == max_length) continue;
    for (VertexId v = 0; v < oracle.n; ++v) {
      if (!oracle.adj[out[i].back()][v]) continue;
      Path p = out[i];
      p.push_back(v);
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Path> brute_gs_set(const SimplicialComplex& k, const std::vector<VertexId>& basepoints = {}) {
  const testing::Distances oracle(k);
  std::vector<VertexId> bases = basepoints;
  if (bases.empty())
    for (VertexId v = 0; v < k.vertex_count(); ++v) bases.push_back(v);
  std::vector<Path> out;
  for (VertexId u : bases)
    for (VertexId w : bases)
      for (const Path& g : oracle.geodesics(u, w))
        if (find_bad_pairs(k, g).empty()) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("trivial machines") {
  Dfa all(3);
  all.set_start(all.add_state(true));
  for (Letter l = 0; l < 3; ++l) all.set_transition(0, l, 0);
  Dfa none(3);
  none.set_start(none.add_state(false));
  for (const Word& w : all_words(3, 4)) {
    CHECK(all.accepts(w));
    CHECK_FALSE(none.accepts(w));
  }
  CHECK(none.empty_language());
  CHECK_FALSE(all.empty_language());
  CHECK(combine(all, none, BoolOp::Union).same_language(all));
  CHECK(combine(all, all.complement(), BoolOp::Intersection).empty_language());
}

TEST_CASE("boolean operations against brute-force languages") {
  std::mt19937 rng(2024);
  const auto words = all_words(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const Dfa a = random_dfa(rng, 2), b = random_dfa(rng, 2);
    const Dfa u = combine(a, b, BoolOp::Union), i = combine(a, b, BoolOp::Intersection),
              d = combine(a, b, BoolOp::Difference), ca = a.complement(), cb = b.complement();
    const Dfa demorgan = combine(ca, cb, BoolOp::Union).complement();
    const Dfa ma = a.minimize();
    for (const Word& w : words) {
      const bool x = run(a, w), y = run(b, w);
      CHECK(run(u, w) == (x || y));
      CHECK(run(i, w) == (x && y));
      CHECK(run(d, w) == (x && !y));
      CHECK(run(ca, w) == !x);
      CHECK(run(demorgan, w) == (x && y));
      CHECK(run(ma, w) == x);
      CHECK(a.accepts(w) == x);
    }
    CHECK(ma.state_count() <= a.complete().state_count());
    CHECK(ma == ma.minimize());
    CHECK(demorgan.same_language(i));
    CHECK(demorgan.minimize() == i.minimize());
  }
}

TEST_CASE("alphabet mismatch") {
  try {
    combine(Dfa(2), Dfa(3), BoolOp::Union);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AlphabetMismatch);
  }
}

TEST_CASE("path alphabet") {
  const auto k = complex_of("a b c;b c d");
  const PathAlphabet alpha(k);
  CHECK(alpha.size() == 4 + 10);
  const Path p = path_of(k, "a b d c");
  const Word w = alpha.word(p);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == alpha.vertex_letter(k.vertex("a")));
  CHECK(alpha.is_edge_letter(w[1]));
  CHECK(alpha.edge(w[2]) == std::pair{k.vertex("b"), k.vertex("d")});
  CHECK(alpha.path(w) == p);
  CHECK(alpha.edge_letter(k.vertex("a"), k.vertex("d")) == Dfa::kNone);
  CHECK_FALSE(alpha.path({w[1]}).has_value());
  CHECK_FALSE(alpha.path({w[0], w[2]}).has_value());
}

TEST_CASE("forbidden subpaths") {
  SUBCASE("identity only") {
    const auto k = generate_fixture("hex_disk").complex;
    const Path beta = path_of(k, "v0 v1 v2 v3");
    const PathAlphabet alpha(k);
    const Dfa m = forbidden_subpath_fsa(k, beta, {});
    CHECK(accepts(m, alpha, path_of(k, "o v0 v1 v2 v3 o")));
    CHECK(accepts(m, alpha, beta));
    CHECK_FALSE(accepts(m, alpha, path_of(k, "v3 v2 v1 v0")));
    CHECK_FALSE(accepts(m, alpha, path_of(k, "v0")));
    CHECK_FALSE(accepts(m, alpha, path_of(k, "v0 v1 v2 o v3")));
    const testing::Distances oracle(k);
    for (const Path& p : all_walks(oracle, 5)) CHECK(accepts(m, alpha, p) == contains_subpath(p, beta));
  }
  SUBCASE("octahedron rotations") {
    const auto f = generate_fixture("octahedron");
    const auto& k = f.complex;
    const Path beta = path_of(k, "px py nx pz");
    const PathAlphabet alpha(k);
    const Dfa m = forbidden_subpath_fsa(k, beta, f.symmetries);
    const auto group = automorphism_closure(k, f.symmetries);
    const Path rotated = f.symmetries[0].apply(beta);
    CHECK(accepts(m, alpha, rotated));
    const testing::Distances oracle(k);
    for (const Path& p : all_walks(oracle, 4)) {
      bool hit = false;
      for (const auto& g : group) hit = hit || contains_subpath(p, g.apply(beta));
      CHECK(accepts(m, alpha, p) == hit);
    }
  }
  SUBCASE("several patterns") {
    const auto k = generate_fixture("strip:3").complex;
    const std::vector<Path> patterns{path_of(k, "p0 p1"), path_of(k, "p2 p3 p4")};
    const Dfa m = forbidden_subpaths_fsa(k, patterns, {});
    const PathAlphabet alpha(k);
    const testing::Distances oracle(k);
    for (const Path& p : all_walks(oracle, 4))
      CHECK(accepts(m, alpha, p) == (contains_subpath(p, patterns[0]) || contains_subpath(p, patterns[1])));
  }
}

TEST_CASE("geodesic machine") {
  SUBCASE("tetrahedron") {
    const auto k = complex_of("a b c d");
    const PathAlphabet alpha(k);
    const auto got = accepted_paths(geodesic_fsa(k), alpha, 4);
    CHECK(got.size() == 16);
    const testing::Distances oracle(k);
    std::vector<Path> want;
    for (VertexId u = 0; u < 4; ++u)
      for (VertexId w = 0; w < 4; ++w)
        for (const Path& g : oracle.geodesics(u, w)) want.push_back(g);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  SUBCASE("hexagonal disk") {
    const auto k = generate_fixture("hex_disk").complex;
    const PathAlphabet alpha(k);
    const Dfa m = geodesic_fsa(k);
    CHECK(accepts(m, alpha, path_of(k, "v0 o v3")));
    CHECK_FALSE(accepts(m, alpha, path_of(k, "v0 v1 v2 v3")));
    CHECK_FALSE(accepts(m, alpha, path_of(k, "v0 v1 v0")));
  }
  SUBCASE("prefix closed and exact on fixtures") {
    for (const auto& name : bundled_fixtures()) {
      const auto k = generate_fixture(name).complex;
      const PathAlphabet alpha(k);
      const Dfa m = geodesic_fsa(k);
      const testing::Distances oracle(k);
      for (const Path& p : all_walks(oracle, std::min(k.diameter() + 1, 4))) {
        CHECK(accepts(m, alpha, p) == oracle.is_geodesic(p));
        if (accepts(m, alpha, p))
          for (std::size_t n = 1; n < p.size(); ++n) CHECK(accepts(m, alpha, Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n))));
      }
    }
  }
}

TEST_CASE("GS machine equals the brute-force GS set") {
  for (const auto& name : bundled_fixtures()) {
    const auto f = generate_fixture(name);
    const auto& k = f.complex;
    GsOracle gs(k);
    const PathAlphabet alpha(k);
    const Dfa m = gs_fsa(gs);
    const auto brute = brute_gs_set(k);
    CHECK_MESSAGE(accepted_paths(m, alpha, static_cast<std::size_t>(k.diameter())) == brute, name);
    const Dfa geo = geodesic_fsa(k);
    const bool clean = accepted_paths(geo, alpha, static_cast<std::size_t>(k.diameter())).size() == brute.size();
    CHECK(m.same_language(geo) == clean);
    if (!f.symmetries.empty()) CHECK(gs_fsa(gs, {}, f.symmetries).same_language(m));
  }
}

TEST_CASE("GS machine with basepoints") {
  const auto k = generate_fixture("resolve").complex;
  GsOracle gs(k);
  const std::vector<VertexId> bases{k.vertex("d1"), k.vertex("a4"), k.vertex("c3")};
  const PathAlphabet alpha(k);
  const Dfa m = gs_fsa(gs, bases);
  const auto got = accepted_paths(m, alpha, static_cast<std::size_t>(k.diameter()));
  CHECK(got == brute_gs_set(k, bases));
  CHECK_FALSE(accepts(m, alpha, path_of(k, "d1 d2")));
  CHECK_FALSE(accepts(m, alpha, path_of(k, "d1 d2 c2 c3 c4 b4 a4")));
  CHECK(accepts(m, alpha, path_of(k, "d1 d2 c2 c3 b3 b4 a4")));
}

TEST_CASE("minimal non-GS subpaths") {
  const auto k = generate_fixture("resolve").complex;
  GsOracle gs(k);
  const auto s = minimal_non_gs_subpaths(gs);
  CHECK_FALSE(s.empty());
  for (const Path& p : s) {
    CHECK_FALSE(gs.is_gs(p));
    CHECK(gs.is_gs(Path(p.begin() + 1, p.end())));
    CHECK(gs.is_gs(Path(p.begin(), p.end() - 1)));
  }
}
