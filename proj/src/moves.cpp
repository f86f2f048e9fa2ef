#include "cat3/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cat3 {

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::Trivial:
      return "trivial";
    case MoveKind::Triangle:
      return "triangle";
    case MoveKind::TriangleTriangle:
      return "triangle_triangle";
  }
  return "?";
}

int length_delta(MoveKind kind) {
  switch (kind) {
    case MoveKind::Trivial:
      return -2;
    case MoveKind::Triangle:
      return -1;
    case MoveKind::TriangleTriangle:
      return 0;
  }
  return 0;
}

std::vector<Move> enumerate_moves(const SimplicialComplex& k, const Path& alpha) {
  std::vector<Move> out;
  for (std::size_t i = 1; i + 1 < alpha.size(); ++i) {
    const VertexId x = alpha[i - 1], y = alpha[i], z = alpha[i + 1];
    if (x == z) {
      out.push_back(Move{MoveKind::Trivial, i, {x, y, x}, {x}, {Simplex{x, y}}});
      continue;
    }
    if (k.has_face(x, y, z)) out.push_back(Move{MoveKind::Triangle, i, {x, y, z}, {x, z}, {Simplex{x, y, z}}});
    for (VertexId w : k.common_faces(x, y)) {
      if (w == z || !k.has_face(y, z, w)) continue;
      out.push_back(Move{MoveKind::TriangleTriangle, i, {x, y, z}, {x, w, z}, {Simplex{x, y, w}, Simplex{y, z, w}}});
    }
  }
  return out;
}

Path apply_move(const Path& alpha, const Move& m) {
  const std::size_t i = m.position;
  if (i == 0 || i + 1 >= alpha.size() || m.old_segment.size() != 3 ||
      !std::equal(m.old_segment.begin(), m.old_segment.end(), alpha.begin() + static_cast<std::ptrdiff_t>(i - 1))) {
    throw Error(Errc::MoveMismatch, "move " + std::string(move_kind_name(m.kind)) + "@" + std::to_string(i) +
                                        " does not match the path");
  }
  Path out(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.insert(out.end(), m.new_segment.begin(), m.new_segment.end());
  out.insert(out.end(), alpha.begin() + static_cast<std::ptrdiff_t>(i + 2), alpha.end());
  return out;
}

namespace {

std::string names(const SimplicialComplex& k, const Path& p) {
  std::string out;
  for (VertexId v : p) {
    if (!out.empty()) out += ' ';
    out += k.name(v);
  }
  return out;
}

}  // namespace

std::string format_move(const SimplicialComplex& k, const Move& m) {
  return std::string(move_kind_name(m.kind)) + "@" + std::to_string(m.position) + ": " + names(k, m.old_segment) +
         " -> " + names(k, m.new_segment);
}

std::optional<std::vector<Move>> find_chain_shortening(const DiskDiagram& d, const std::vector<DiskVertex>& gamma) {
  if (gamma.size() < 3) return std::nullopt;
  for (std::size_t start = 1; start + 1 < gamma.size(); ++start) {
    std::vector<DiskTriangle> tris = d.triangles();
    std::vector<DiskVertex> g = gamma;
    std::vector<Move> moves;
    for (std::size_t i = start; i + 1 < g.size();) {
      std::vector<std::size_t> at;
      for (std::size_t t = 0; t < tris.size(); ++t)
        if (std::find(tris[t].begin(), tris[t].end(), g[i]) != tris[t].end()) at.push_back(t);
      auto has = [&](std::size_t t, DiskVertex v) { return std::find(tris[t].begin(), tris[t].end(), v) != tris[t].end(); };
      const VertexId x = d.label(g[i - 1]), y = d.label(g[i]), z = d.label(g[i + 1]);
      if (at.size() == 1 && has(at[0], g[i - 1]) && has(at[0], g[i + 1])) {
        moves.push_back(Move{MoveKind::Triangle, i, {x, y, z}, {x, z}, {Simplex{x, y, z}}});
        return moves;
      }
      if (at.size() != 2) break;
      std::size_t left = has(at[0], g[i - 1]) ? at[0] : at[1];
      std::size_t right = left == at[0] ? at[1] : at[0];
      if (!has(left, g[i - 1]) || !has(right, g[i + 1])) break;
      DiskVertex w = -1;
      for (DiskVertex v : tris[left])
        if (v != g[i] && v != g[i - 1] && has(right, v)) w = v;
      if (w < 0 || d.label(w) == x || d.label(w) == z || x == z) break;
      const VertexId wl = d.label(w);
      moves.push_back(Move{MoveKind::TriangleTriangle, i, {x, y, z}, {x, wl, z}, {Simplex{x, y, wl}, Simplex{y, z, wl}}});
      g[i] = w;
      tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(std::max(left, right)));
      tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(std::min(left, right)));
      ++i;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Move>> find_chain_shortening(const DiskDiagram& d, const Path& gamma) {
  const auto& walk = d.boundary();
  const std::size_t m = walk.size();
  const std::size_t n = gamma.size();
  if (n == 0 || n > m + 1) return std::nullopt;
  for (std::size_t p = 0; p < m; ++p) {
    for (int dir : {1, -1}) {
      std::vector<DiskVertex> ids;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t at = dir > 0 ? (p + i) % m : (p + m * n - i) % m;
        if (d.label(walk[at]) != gamma[i]) break;
        ids.push_back(walk[at]);
      }
      if (ids.size() == n) return find_chain_shortening(d, ids);
    }
  }
  return std::nullopt;
}

namespace {

// Breadth-first search in the move graph; moves never lengthen a path, so
// the search space is finite.
std::optional<StraightenResult> move_bfs(const SimplicialComplex& k, const Path& from, const Path* target) {
  auto done = [&](const Path& p) { return target ? p == *target : is_geodesic(k, p); };
  std::map<Path, std::pair<Path, Move>> parent;
  std::deque<Path> queue{from};
  parent.emplace(from, std::pair<Path, Move>{});
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    if (done(p)) {
      StraightenResult r;
      r.path = p;
      for (Path at = p; at != from;) {
        const auto& [prev, move] = parent.at(at);
        r.moves.push_back(move);
        at = prev;
      }
      std::reverse(r.moves.begin(), r.moves.end());
      return r;
    }
    for (const Move& m : enumerate_moves(k, p)) {
      Path q = apply_move(p, m);
      if (parent.contains(q)) continue;
      parent.emplace(q, std::pair<Path, Move>{p, m});
      queue.push_back(std::move(q));
    }
  }
  return std::nullopt;
}

}  // namespace

StraightenResult straighten(const SimplicialComplex& k, const Path& alpha, const std::optional<Path>& beta) {
  require_valid_path(k, alpha);
  if (beta) {
    require_valid_path(k, *beta);
    if (beta->front() != alpha.front() || beta->back() != alpha.back()) {
      throw Error(Errc::EndpointMismatch, "target has different endpoints");
    }
    if (!is_geodesic(k, *beta)) throw Error(Errc::TargetNotGeodesic, "target is not a geodesic");
    auto r = move_bfs(k, alpha, &*beta);
    if (!r) throw Error(Errc::NoMoveSequence, "target not reachable by basic moves");
    return *r;
  }

  StraightenResult result{alpha, {}};
  std::set<Path> visited{alpha};
  DiskSearch search(k);
  auto take = [&](const Move& m) {
    result.path = apply_move(result.path, m);
    result.moves.push_back(m);
    visited.insert(result.path);
  };
  while (!is_geodesic(k, result.path)) {
    const std::vector<Move> moves = enumerate_moves(k, result.path);
    auto first_of = [&](MoveKind kind) {
      return std::find_if(moves.begin(), moves.end(), [&](const Move& m) { return m.kind == kind; });
    };
    if (auto it = first_of(MoveKind::Trivial); it != moves.end()) {
      take(*it);
      continue;
    }
    if (auto it = first_of(MoveKind::Triangle); it != moves.end()) {
      take(*it);
      continue;
    }
    // Chain shortening along a minimal disk between the path and a geodesic.
    const Path& p = result.path;
    const Path delta = enumerate_geodesics(k, p.front(), p.back()).front();
    Path loop = p;
    loop.insert(loop.end(), delta.rbegin() + 1, delta.rend());
    const std::vector<DiskDiagram> disks = search.minimal_disks(loop);
    const auto& walk = disks.front().boundary();
    std::vector<DiskVertex> ids;
    for (std::size_t i = 0; i < p.size(); ++i) ids.push_back(walk[i % walk.size()]);
    if (auto chain = find_chain_shortening(disks.front(), ids)) {
      for (const Move& m : *chain) take(m);
      continue;
    }
    bool moved = false;
    for (const Move& m : moves) {
      if (m.kind != MoveKind::TriangleTriangle || visited.contains(apply_move(p, m))) continue;
      take(m);
      moved = true;
      break;
    }
    if (moved) continue;
    auto rest = move_bfs(k, result.path, nullptr);
    if (!rest) throw Error(Errc::NoMoveSequence, "no geodesic reachable by basic moves");
    for (const Move& m : rest->moves) take(m);
  }
  return result;
}

std::optional<Path> shorter_fellow(const SimplicialComplex& k, const Path& alpha) {
  require_valid_path(k, alpha);
  const int len = path_length(alpha);
  const VertexId start = alpha.front(), end = alpha.back();
  const int d = k.distance(start, end);
  if (len == d) return std::nullopt;
  Path beta{start};
  auto close = [&](double t, const PathPoint& b) { return point_distance(k, evaluate(alpha, t), b) <= 1.0; };
  for (int m = len - 1; m >= d; --m) {
    auto dfs = [&](auto&& self) -> bool {
      const int t = path_length(beta);
      const VertexId at = beta.back();
      if (t == m) {
        if (at != end) return false;
        for (int s = 2 * m + 1; s <= 2 * len; ++s)
          if (!close(0.5 * s, PathPoint{end, end, 0.0})) return false;
        return true;
      }
      for (VertexId next : k.neighbors(at)) {
        if (k.distance(next, end) > m - t - 1) continue;
        if (!close(t + 0.5, PathPoint{at, next, 0.5}) || !close(t + 1.0, PathPoint{next, next, 0.0})) continue;
        beta.push_back(next);
        if (self(self)) return true;
        beta.pop_back();
      }
      return false;
    };
    if (close(0.0, PathPoint{start, start, 0.0}) && dfs(dfs)) return beta;
    beta.assign(1, start);
  }
  return std::nullopt;
}

std::set<Path> reverse_reachable(const SimplicialComplex& k, const Path& target, int max_length) {
  std::set<Path> seen{target};
  std::deque<Path> queue{target};
  auto push = [&](Path q) {
    if (path_length(q) > max_length || seen.contains(q)) return;
    seen.insert(q);
    queue.push_back(std::move(q));
  };
  while (!queue.empty()) {
    const Path p = std::move(queue.front());
    queue.pop_front();
    const int len = path_length(p);
    if (len + 2 <= max_length) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (VertexId y : k.neighbors(p[i])) {
          Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i + 1));
          q.push_back(y);
          q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
          push(std::move(q));
        }
      }
    }
    if (len + 1 <= max_length) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (VertexId y : k.common_faces(p[i], p[i + 1])) {
          Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i + 1));
          q.push_back(y);
          q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(i + 1), p.end());
          push(std::move(q));
        }
      }
    }
    for (const Move& m : enumerate_moves(k, p))
      if (m.kind == MoveKind::TriangleTriangle) push(apply_move(p, m));
  }
  return seen;
}

}  // namespace cat3
