#include "cat3/gs_geodesics.hpp"

#include <algorithm>

namespace cat3 {

namespace {

void require_geodesic(const SimplicialComplex& k, const Path& gamma) {
  require_valid_path(k, gamma);
  if (!is_geodesic(k, gamma)) throw Error(Errc::NotGeodesic, "path is not a geodesic");
}

std::vector<WitnessDisk> compute_witnesses(const SimplicialComplex& k, DiskSearch& search, const Path& gamma,
                                           const WitnessOptions& options) {
  require_geodesic(k, gamma);
  const std::vector<Path> companions = enumerate_geodesics(k, gamma.front(), gamma.back());
  if (companions.size() > options.max_companions + 1) {
    throw Error(Errc::TooManyCompanions, std::to_string(companions.size()) + " companion geodesics");
  }
  std::vector<WitnessDisk> out;
  for (const Path& delta : companions) {
    if (delta == gamma) continue;
    Path loop = gamma;
    loop.insert(loop.end(), delta.rbegin() + 1, delta.rend());
    for (DiskDiagram& d : search.minimal_disks(loop)) out.push_back(WitnessDisk{delta, std::move(d)});
  }
  return out;
}

}  // namespace

std::vector<WitnessDisk> witness_disks(const SimplicialComplex& k, const Path& gamma, WitnessOptions options) {
  DiskSearch search(k);
  return compute_witnesses(k, search, gamma, options);
}

std::vector<BadPair> bad_pairs_on(const Path& gamma, const WitnessDisk& witness) {
  std::vector<BadPair> out;
  const std::size_t n = gamma.size() - 1;
  std::vector<SubDisk> pieces = nonsingular_pieces(witness.disk);
  for (SubDisk& piece : pieces) {
    const auto& wp = piece.walk_positions;
    const auto& walk = piece.disk.boundary();
    // Maximal runs of the piece boundary that follow gamma edge by edge.
    for (std::size_t j = 0; j < wp.size();) {
      if (wp[j] >= n) {
        ++j;
        continue;
      }
      std::size_t r = j;
      while (r + 1 < wp.size() && wp[r + 1] == wp[r] + 1 && wp[r + 1] < n) ++r;
      const std::size_t s = wp[j];
      const std::size_t e = wp[r] + 1;
      auto local = [&](std::size_t index) { return walk[(j + index - s) % walk.size()]; };
      for (std::size_t i = s + 1; i < e; ++i) {
        const int deg = piece.disk.degree(local(i));
        const int prev = piece.disk.degree(local(i - 1));
        if (deg > 3 || prev != 4) continue;
        BadPair bad;
        bad.index = i;
        bad.delta = witness.delta;
        bad.disk = witness.disk;
        bad.piece = piece;
        bad.degree_prev = prev;
        bad.degree = deg;
        if (deg == 3) {
          std::vector<DiskVertex> around;
          for (const auto& t : piece.disk.triangles()) {
            if (std::find(t.begin(), t.end(), local(i)) == t.end()) continue;
            for (DiskVertex v : t)
              if (v != local(i) && v != local(i - 1) && v != local(i + 1)) around.push_back(v);
          }
          if (around.size() == 2 && around[0] == around[1]) bad.apex = piece.disk.label(around[0]);
        }
        out.push_back(std::move(bad));
      }
      j = r + 1;
    }
  }
  return out;
}

struct GsOracle::Impl {
  const SimplicialComplex& k;
  DiskSearch search;
  std::map<Path, std::vector<WitnessDisk>> witnesses;
  std::map<Path, bool> gs;

  explicit Impl(const SimplicialComplex& complex) : k(complex), search(complex) {}
};

GsOracle::GsOracle(const SimplicialComplex& k) : impl_(std::make_unique<Impl>(k)) {}
GsOracle::~GsOracle() = default;

const SimplicialComplex& GsOracle::complex() const { return impl_->k; }

const std::vector<WitnessDisk>& GsOracle::witnesses(const Path& gamma) {
  auto it = impl_->witnesses.find(gamma);
  if (it == impl_->witnesses.end()) {
    it = impl_->witnesses.emplace(gamma, compute_witnesses(impl_->k, impl_->search, gamma, {})).first;
  }
  return it->second;
}

std::vector<BadPair> GsOracle::bad_pairs(const Path& gamma) {
  std::vector<BadPair> out;
  for (const WitnessDisk& w : witnesses(gamma)) {
    for (BadPair& b : bad_pairs_on(gamma, w)) out.push_back(std::move(b));
  }
  std::stable_sort(out.begin(), out.end(), [](const BadPair& a, const BadPair& b) { return a.index < b.index; });
  return out;
}

bool GsOracle::is_gs(const Path& gamma) {
  if (!is_valid_path(impl_->k, gamma) || !is_geodesic(impl_->k, gamma)) return false;
  auto it = impl_->gs.find(gamma);
  if (it != impl_->gs.end()) return it->second;
  bool clean = true;
  for (const WitnessDisk& w : witnesses(gamma)) {
    if (!bad_pairs_on(gamma, w).empty()) {
      clean = false;
      break;
    }
  }
  impl_->gs.emplace(gamma, clean);
  return clean;
}

Resolution GsOracle::resolve(const Path& gamma) {
  require_geodesic(impl_->k, gamma);
  const std::size_t bound = enumerate_geodesics(impl_->k, gamma.front(), gamma.back()).size();
  Resolution r{gamma, {}};
  std::set<Path> seen{gamma};
  for (;;) {
    std::vector<BadPair> bad = bad_pairs(r.path);
    if (bad.empty()) return r;
    const BadPair& b = bad.front();
    if (!b.apex) throw Error(Errc::NonTermination, "bad pair at " + std::to_string(b.index) + " admits no tri-tri move");
    const std::size_t i = b.index;
    const VertexId x = r.path[i - 1], y = r.path[i], z = r.path[i + 1], w = *b.apex;
    Move m{MoveKind::TriangleTriangle, i, {x, y, z}, {x, w, z}, {Simplex{x, y, w}, Simplex{y, z, w}}};
    r.path = apply_move(r.path, m);
    r.moves.push_back(std::move(m));
    if (!seen.insert(r.path).second || seen.size() > bound) {
      throw Error(Errc::NonTermination, "bad-pair resolution revisited a geodesic");
    }
  }
}

std::vector<Path> GsOracle::gs_geodesics(VertexId u, VertexId w) {
  std::vector<Path> out;
  for (Path& g : enumerate_geodesics(impl_->k, u, w))
    if (is_gs(g)) out.push_back(std::move(g));
  return out;
}

std::vector<BadPair> find_bad_pairs(const SimplicialComplex& k, const Path& gamma) {
  GsOracle oracle(k);
  return oracle.bad_pairs(gamma);
}

Resolution resolve_bad_pairs(const SimplicialComplex& k, const Path& gamma) {
  GsOracle oracle(k);
  return oracle.resolve(gamma);
}

bool is_gs(const SimplicialComplex& k, const Path& gamma) {
  GsOracle oracle(k);
  return oracle.is_gs(gamma);
}

namespace {

std::vector<VertexId> all_or(const SimplicialComplex& k, const std::vector<VertexId>& basepoints) {
  if (!basepoints.empty()) return basepoints;
  std::vector<VertexId> out(k.vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

}  // namespace

PathSystem geodesic_system(const SimplicialComplex& k, const std::vector<VertexId>& basepoints) {
  PathSystem s;
  const auto points = all_or(k, basepoints);
  for (VertexId u : points)
    for (VertexId w : points)
      for (Path& g : enumerate_geodesics(k, u, w)) s.members.insert(std::move(g));
  return s;
}

PathSystem gs_system(GsOracle& oracle, const std::vector<VertexId>& basepoints) {
  PathSystem s;
  const auto points = all_or(oracle.complex(), basepoints);
  for (VertexId u : points)
    for (VertexId w : points)
      for (Path& g : oracle.gs_geodesics(u, w)) s.members.insert(std::move(g));
  return s;
}

FellowTravelResult check_fellow_travel(const SimplicialComplex& complex, const PathSystem& s, double k, int l) {
  FellowTravelResult result;
  std::map<std::pair<VertexId, VertexId>, std::vector<const Path*>> by_ends;
  for (const Path& p : s.members) by_ends[{p.front(), p.back()}].push_back(&p);
  for (const Path& a : s.members) {
    for (const auto& [ends, bucket] : by_ends) {
      if (complex.distance(a.front(), ends.first) > l || complex.distance(a.back(), ends.second) > l) continue;
      for (const Path* b : bucket) {
        if (*b < a) continue;
        const double d = path_distance(complex, a, *b);
        if (!result.worst || d > result.max_distance) {
          result.max_distance = d;
          result.worst = std::make_pair(a, *b);
        }
      }
    }
  }
  result.ok = result.max_distance <= k;
  return result;
}

InvarianceResult check_g_invariance(const PathSystem& s, const std::vector<Automorphism>& autos) {
  InvarianceResult result;
  for (const Path& p : s.members) {
    for (std::size_t g = 0; g < autos.size(); ++g) {
      if (s.contains(autos[g].apply(p))) continue;
      result.ok = false;
      result.witness = p;
      result.automorphism = g;
      return result;
    }
  }
  return result;
}

}  // namespace cat3
