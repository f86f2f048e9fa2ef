#include "cat3/paths.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cat3 {

bool is_valid_path(const SimplicialComplex& k, const Path& p) {
  if (p.empty()) return false;
  for (VertexId v : p)
    if (!k.has_vertex(v)) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!k.has_edge(p[i - 1], p[i])) return false;
  return true;
}

void require_valid_path(const SimplicialComplex& k, const Path& p) {
  if (p.empty()) throw Error(Errc::InvalidStep, "empty vertex sequence");
  for (VertexId v : p)
    if (!k.has_vertex(v)) throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(v) + " not in complex");
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!k.has_edge(p[i - 1], p[i])) {
      throw Error(Errc::InvalidStep,
                  "step " + std::to_string(i) + " (" + k.name(p[i - 1]) + " -> " + k.name(p[i]) + ") is not an edge");
    }
  }
}

PathProperties path_properties(const SimplicialComplex& k, const Path& p) {
  require_valid_path(k, p);
  PathProperties props;
  props.length = path_length(p);
  props.closed = p.front() == p.back();
  std::set<std::pair<VertexId, VertexId>> edges;
  props.tight = true;
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto e = std::minmax(p[i - 1], p[i]);
    if (!edges.insert({e.first, e.second}).second) props.tight = false;
  }
  return props;
}

bool is_geodesic(const SimplicialComplex& k, const Path& p) {
  return is_valid_path(k, p) && path_length(p) == k.distance(p.front(), p.back());
}

PathPoint evaluate(const Path& p, double t) {
  const int n = path_length(p);
  if (t <= 0.0) return {p.front(), p.front(), 0.0};
  if (t >= n) return {p.back(), p.back(), 0.0};
  const double whole = std::floor(t);
  const auto i = static_cast<std::size_t>(whole);
  const double frac = t - whole;
  if (frac == 0.0) return {p[i], p[i], 0.0};
  return {p[i], p[i + 1], frac};
}

double point_distance(const SimplicialComplex& k, const PathPoint& a, const PathPoint& b) {
  if (a.is_vertex() && b.is_vertex()) return k.distance(a.from, b.from);
  if (!a.is_vertex() && !b.is_vertex()) {
    if (a.from == b.from && a.to == b.to) return std::abs(a.offset - b.offset);
    if (a.from == b.to && a.to == b.from) return std::abs(a.offset - (1.0 - b.offset));
  }
  if (!a.is_vertex() && b.is_vertex() && (b.from == a.from || b.from == a.to)) {
    return b.from == a.from ? a.offset : 1.0 - a.offset;
  }
  if (a.is_vertex() && !b.is_vertex() && (a.from == b.from || a.from == b.to)) {
    return a.from == b.from ? b.offset : 1.0 - b.offset;
  }
  struct End {
    VertexId v;
    double cost;
  };
  auto ends = [](const PathPoint& p) {
    std::vector<End> out{{p.from, p.offset}};
    if (!p.is_vertex()) out.push_back({p.to, 1.0 - p.offset});
    return out;
  };
  double best = std::numeric_limits<double>::infinity();
  for (const End& x : ends(a))
    for (const End& y : ends(b)) best = std::min(best, x.cost + k.distance(x.v, y.v) + y.cost);
  // Through the midpoints of the carrying edges.
  auto to_mid = [](const PathPoint& p) { return p.is_vertex() ? 0.0 : std::abs(p.offset - 0.5); };
  const VertexId a2 = a.is_vertex() ? a.from : a.to, b2 = b.is_vertex() ? b.from : b.to;
  return std::min(best, to_mid(a) + 0.5 * k.half_steps(a.from, a2, b.from, b2) + to_mid(b));
}

double path_distance(const SimplicialComplex& k, const Path& alpha, const Path& beta) {
  const int steps = 2 * std::max(path_length(alpha), path_length(beta));
  double worst = 0.0;
  for (int s = 0; s <= steps; ++s) {
    const double t = 0.5 * s;
    worst = std::max(worst, point_distance(k, evaluate(alpha, t), evaluate(beta, t)));
  }
  return worst;
}

int combinatorial_distance(const SimplicialComplex& k, VertexId v, VertexId w) {
  if (!k.has_vertex(v) || !k.has_vertex(w)) throw Error(Errc::UnknownVertex, "vertex id not in complex");
  return k.distance(v, w);
}

namespace {

void extend_geodesics(const SimplicialComplex& k, VertexId w, Path& current, std::vector<Path>& out,
                      std::size_t limit) {
  const VertexId at = current.back();
  if (at == w) {
    if (out.size() >= limit) {
      throw Error(Errc::GeodesicLimitExceeded, "more than " + std::to_string(limit) + " geodesics");
    }
    out.push_back(current);
    return;
  }
  const int remaining = k.distance(at, w);
  for (VertexId next : k.neighbors(at)) {
    if (k.distance(next, w) != remaining - 1) continue;
    current.push_back(next);
    extend_geodesics(k, w, current, out, limit);
    current.pop_back();
  }
}

void extend_paths(const SimplicialComplex& k, VertexId w, int remaining, Path& current, std::vector<Path>& out) {
  const VertexId at = current.back();
  if (remaining == 0) {
    if (at == w) out.push_back(current);
    return;
  }
  for (VertexId next : k.neighbors(at)) {
    if (k.distance(next, w) > remaining - 1) continue;
    current.push_back(next);
    extend_paths(k, w, remaining - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_geodesics(const SimplicialComplex& k, VertexId v, VertexId w, std::size_t limit) {
  combinatorial_distance(k, v, w);
  std::vector<Path> out;
  Path current{v};
  extend_geodesics(k, w, current, out, limit);
  return out;
}

std::vector<Path> enumerate_paths(const SimplicialComplex& k, VertexId v, VertexId w, int length) {
  combinatorial_distance(k, v, w);
  std::vector<Path> out;
  Path current{v};
  if (length >= 0) extend_paths(k, w, length, current, out);
  return out;
}

}  // namespace cat3
