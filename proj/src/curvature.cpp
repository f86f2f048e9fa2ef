#include "cat3/curvature.hpp"

#include <algorithm>
#include <numbers>

namespace cat3 {

FlagResult is_flag(const SimplicialComplex& k) {
  // Grow cliques one vertex at a time from simplices; the first extension
  // that fails to be a simplex is a minimal non-spanning clique.
  std::vector<Simplex> level = k.simplices(0);
  for (int size = 2; !level.empty(); ++size) {
    std::vector<Simplex> next;
    for (const auto& s : level) {
      const VertexId top = s.vertices().back();
      for (VertexId w : k.neighbors(s.vertices().front())) {
        if (w <= top) continue;
        bool clique = std::all_of(s.vertices().begin(), s.vertices().end(), [&](VertexId u) { return k.has_edge(u, w); });
        if (!clique) continue;
        std::vector<VertexId> grown = s.vertices();
        grown.push_back(w);
        if (!k.has_simplex(grown)) return FlagResult{false, grown};
        next.emplace_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return FlagResult{};
}

bool ngon_filled(const SimplicialComplex& k, const std::vector<VertexId>& c) {
  const std::size_t n = c.size();
  auto at = [&](std::size_t i) { return c[i % n]; };
  if (n == 3) return k.has_face(c[0], c[1], c[2]);
  if (n == 4) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (k.has_face(at(i), at(i + 1), at(i + 2)) && k.has_face(at(i), at(i + 2), at(i + 3))) return true;
    }
    return false;
  }
  if (n == 5) {
    // Fan triangulations from each vertex: two non-crossing diagonals.
    for (std::size_t i = 0; i < 5; ++i) {
      if (k.has_face(at(i), at(i + 1), at(i + 2)) && k.has_face(at(i), at(i + 2), at(i + 3)) &&
          k.has_face(at(i), at(i + 3), at(i + 4))) {
        return true;
      }
    }
    return false;
  }
  throw Error(Errc::UnsupportedN, "only n in {3,4,5} is supported");
}

namespace {

// Simple cycles of length n listed once: smallest vertex first, and second
// vertex smaller than the last. That is the least rotation/reflection.
template <typename Visit>
bool for_each_cycle(const SimplicialComplex& k, int n, Visit&& visit) {
  std::vector<VertexId> cycle;
  std::vector<bool> used(k.vertex_count(), false);
  auto dfs = [&](auto&& self) -> bool {
    const VertexId at = cycle.back();
    if (static_cast<int>(cycle.size()) == n) {
      if (cycle[1] < cycle.back() && k.has_edge(at, cycle.front())) return visit(cycle);
      return false;
    }
    for (VertexId next : k.neighbors(at)) {
      if (next <= cycle.front() || used[next]) continue;
      used[next] = true;
      cycle.push_back(next);
      bool stop = self(self);
      cycle.pop_back();
      used[next] = false;
      if (stop) return true;
    }
    return false;
  };
  for (VertexId s = 0; s < k.vertex_count(); ++s) {
    cycle.assign(1, s);
    used[s] = true;
    bool stop = dfs(dfs);
    used[s] = false;
    if (stop) return true;
  }
  return false;
}

void check_n(int n) {
  if (n < 3 || n > 5) throw Error(Errc::UnsupportedN, "empty n-gon search supports n in {3,4,5}, got " + std::to_string(n));
}

}  // namespace

std::optional<std::vector<VertexId>> find_empty_ngon(const SimplicialComplex& k, int n) {
  check_n(n);
  std::optional<std::vector<VertexId>> found;
  for_each_cycle(k, n, [&](const std::vector<VertexId>& c) {
    if (ngon_filled(k, c)) return false;
    found = c;
    return true;
  });
  return found;
}

std::vector<std::vector<VertexId>> all_empty_ngons(const SimplicialComplex& k, int n) {
  check_n(n);
  std::vector<std::vector<VertexId>> out;
  for_each_cycle(k, n, [&](const std::vector<VertexId>& c) {
    if (!ngon_filled(k, c)) out.push_back(c);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Flag plus no empty 3-, 4-, 5-gons; fills `witness`/`reason` on failure.
bool six_large(const SimplicialComplex& k, std::vector<VertexId>& witness, std::string& reason) {
  if (k.empty()) return true;
  FlagResult flag = is_flag(k);
  if (!flag.flag) {
    witness = flag.witness;
    reason = "not flag";
    return false;
  }
  for (int n = 3; n <= 5; ++n) {
    if (auto c = find_empty_ngon(k, n)) {
      witness = *c;
      reason = "empty " + std::to_string(n) + "-gon";
      return false;
    }
  }
  return true;
}

}  // namespace

SystolicResult check_systolic(const SimplicialComplex& k) {
  SystolicResult result;
  std::vector<VertexId> witness;
  std::string reason;
  if (!six_large(k, witness, reason)) {
    result.systolic = false;
    result.failing_simplex = std::vector<VertexId>{};
    result.witness = witness;
    result.reason = reason;
    return result;
  }
  for (const Simplex& sigma : k.all_simplices()) {
    LocalStructure local = local_structure(k, sigma);
    const Subcomplex& link = local.link;
    if (six_large(link.complex, witness, reason)) continue;
    result.systolic = false;
    result.failing_simplex = sigma.vertices();
    for (VertexId v : witness) result.witness.push_back(link.to_parent[v]);
    result.reason = "link " + reason;
    return result;
  }
  return result;
}

EdgeLinkResult check_edge_links(const SimplicialComplex& k) {
  if (k.dimension() > 3) throw Error(Errc::DimensionTooHigh, "edge-link check needs dimension <= 3");
  EdgeLinkResult result;
  const double two_pi = 2.0 * std::numbers::pi;
  for (const Simplex& e : k.simplices(1)) {
    MetricGraph g = edge_metric_link(k, e);
    auto cycle = g.shortest_cycle();
    if (!cycle) continue;
    const bool worse = !result.worst_edge || result.worst_length == 0.0 || cycle->length < result.worst_length;
    if (worse) {
      result.worst_edge = e;
      result.worst_cycle = cycle->vertices;
      result.worst_length = cycle->length;
    }
    if (compare_with_tolerance(cycle->length, two_pi) < 0) result.ok = false;
  }
  return result;
}

CurvatureReport certify_cat0_necessary(const SimplicialComplex& k) {
  CurvatureReport report;
  report.flag = is_flag(k);
  bool ngons_ok = true;
  for (int n = 3; n <= 5; ++n) {
    report.empty_ngons[n] = find_empty_ngon(k, n);
    if (report.empty_ngons[n]) ngons_ok = false;
  }
  report.systolic = check_systolic(k);
  if (k.dimension() <= 3) report.edge_links = check_edge_links(k);
  report.passes = report.flag.flag && ngons_ok && report.systolic.systolic && report.edge_links && report.edge_links->ok;
  return report;
}

}  // namespace cat3
