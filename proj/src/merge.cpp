#include "cat3/merge.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace cat3 {

namespace {

std::optional<std::size_t> locate(const DiskDiagram& d, const Path& p) {
  const std::size_t m = d.boundary().size();
  if (m < p.size() - 1 || m < 2) return std::nullopt;
  for (std::size_t start = 0; start < m; ++start)
    if (d.boundary_segment(start, p.size() - 1) == p) return start;
  return std::nullopt;
}

DiskDiagram mirror(const DiskDiagram& d) {
  std::vector<DiskTriangle> tris;
  for (const auto& t : d.triangles()) tris.push_back({t[0], t[2], t[1]});
  std::vector<DiskVertex> walk(d.boundary().rbegin(), d.boundary().rend());
  return DiskDiagram(d.labels(), std::move(tris), std::move(walk));
}

[[noreturn]] void unresolvable(const std::string& why) { throw Error(Errc::UnresolvableVertex, why); }

}  // namespace

MergeResult merge_disks(const SimplicialComplex& k, const DiskDiagram& d1, const DiskDiagram& d2_in, const Path& gamma) {
  require_valid_path(k, gamma);
  if (gamma.size() < 2) throw Error(Errc::LabelMismatchOnGamma, "gamma needs at least one edge");
  const Path reversed(gamma.rbegin(), gamma.rend());
  const auto p = locate(d1, gamma);
  if (!p) throw Error(Errc::LabelMismatchOnGamma, "gamma does not run clockwise along the first disk");
  DiskDiagram d2 = d2_in;
  auto q = locate(d2, reversed);
  if (!q) {
    d2 = mirror(d2_in);
    q = locate(d2, reversed);
  }
  if (!q) throw Error(Errc::LabelMismatchOnGamma, "gamma does not run along the second disk");

  const std::size_t n = gamma.size() - 1;
  const std::size_t m1 = d1.boundary().size(), m2 = d2.boundary().size();
  std::vector<VertexId> labels = d1.labels();
  std::vector<DiskVertex> gamma_ids;
  for (std::size_t i = 0; i <= n; ++i) gamma_ids.push_back(d1.boundary()[(*p + i) % m1]);
  std::vector<DiskVertex> from2(d2.vertex_count(), -1);
  for (std::size_t i = 0; i <= n; ++i) {
    from2[static_cast<std::size_t>(d2.boundary()[(*q + i) % m2])] = gamma_ids[n - i];
  }
  for (std::size_t v = 0; v < from2.size(); ++v) {
    if (from2[v] >= 0) continue;
    from2[v] = static_cast<DiskVertex>(labels.size());
    labels.push_back(d2.labels()[v]);
  }
  std::vector<DiskTriangle> tris = d1.triangles();
  for (const auto& t : d2.triangles()) {
    tris.push_back({from2[static_cast<std::size_t>(t[0])], from2[static_cast<std::size_t>(t[1])],
                    from2[static_cast<std::size_t>(t[2])]});
  }
  std::vector<DiskVertex> walk;
  for (std::size_t i = n; i < m1; ++i) walk.push_back(d1.boundary()[(*p + i) % m1]);
  for (std::size_t i = n; i < m2; ++i) walk.push_back(from2[static_cast<std::size_t>(d2.boundary()[(*q + i) % m2])]);

  // Side tags for the link vertices: the first disk's vertices come first.
  std::set<DiskVertex> first_side;
  for (const auto& t : d1.triangles())
    for (DiskVertex v : t) first_side.insert(v);

  MergeResult result;
  for (bool changed = true; changed;) {
    changed = false;
    DiskDiagram current(labels, tris, walk);
    for (std::size_t i = 1; i < n && !changed; ++i) {
      const DiskVertex v = gamma_ids[i];
      if (current.on_boundary(v)) continue;
      const int deg = current.degree(v);
      if (deg >= 6) continue;
      if (deg < 4) unresolvable("interior vertex of degree " + std::to_string(deg) + " on gamma");
      const std::vector<DiskVertex> ring = current.rotation(v);
      const DiskVertex before = gamma_ids[i - 1], after = gamma_ids[i + 1];
      std::vector<DiskVertex> candidates;
      for (int pass = 0; pass < 2; ++pass)
        for (DiskVertex c : ring)
          if (c != before && c != after && first_side.contains(c) == (pass == 0)) candidates.push_back(c);
      const std::size_t d = ring.size();
      for (DiskVertex c : candidates) {
        const std::size_t a = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), c) - ring.begin());
        std::vector<DiskTriangle> fan;
        bool present = true;
        for (std::size_t j = 1; j + 1 < d; ++j) {
          const DiskVertex x = ring[(a + j) % d], y = ring[(a + j + 1) % d];
          if (!k.has_face(labels[static_cast<std::size_t>(c)], labels[static_cast<std::size_t>(x)],
                          labels[static_cast<std::size_t>(y)])) {
            present = false;
            break;
          }
          fan.push_back({c, x, y});
        }
        const VertexId lx = labels[static_cast<std::size_t>(before)], ly = labels[static_cast<std::size_t>(v)],
                       lz = labels[static_cast<std::size_t>(after)], lw = labels[static_cast<std::size_t>(c)];
        if (!present || !k.has_face(lx, ly, lw) || !k.has_face(ly, lz, lw)) continue;
        std::erase_if(tris, [&](const DiskTriangle& t) { return std::find(t.begin(), t.end(), v) != t.end(); });
        tris.insert(tris.end(), fan.begin(), fan.end());
        Move m{MoveKind::TriangleTriangle, i, {lx, ly, lz}, {lx, lw, lz}, {Simplex{lx, ly, lw}, Simplex{ly, lz, lw}}};
        result.moves.push_back(std::move(m));
        gamma_ids[i] = c;
        changed = true;
        break;
      }
      if (!changed) unresolvable("no filling of the link of a degree-" + std::to_string(deg) + " vertex on gamma");
    }
  }

  // Drop removed vertices and renumber.
  std::vector<DiskVertex> dense(labels.size(), -1);
  std::vector<VertexId> kept;
  auto id = [&](DiskVertex v) {
    auto& slot = dense[static_cast<std::size_t>(v)];
    if (slot < 0) {
      slot = static_cast<DiskVertex>(kept.size());
      kept.push_back(labels[static_cast<std::size_t>(v)]);
    }
    return slot;
  };
  std::vector<DiskVertex> new_walk;
  for (DiskVertex v : walk) new_walk.push_back(id(v));
  std::vector<DiskTriangle> new_tris;
  for (const auto& t : tris) new_tris.push_back({id(t[0]), id(t[1]), id(t[2])});
  result.disk = DiskDiagram(std::move(kept), std::move(new_tris), std::move(new_walk));
  validate_disk(result.disk, &k);
  for (DiskVertex v : gamma_ids) result.gamma.push_back(labels[static_cast<std::size_t>(v)]);
  return result;
}

}  // namespace cat3
