// Minimal spanning disks by boundary reduction.
//
// A region is a clockwise boundary word of (disk vertex id, label) entries.
// The first edge w0 -> w1 of the first pending region is resolved in every
// possible way: it is a spur, or it lies in exactly one triangle whose apex
// is w2 (corner), w_{L-1} (corner), some other w_q (pinch, splitting the
// region in two) or a fresh interior vertex. Every disk has a shelling, so
// these steps reach all of them, and each disk arises from exactly one
// sequence of choices.
#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cat3/disks.hpp"

namespace cat3 {

namespace {

struct Entry {
  int id;
  VertexId label;
};
using Word = std::vector<Entry>;

constexpr int kFresh = -1;

struct Option {
  int cost = 0;
  std::vector<Word> words;
  std::array<int, 3> triangle{};  // clockwise ids; kFresh marks the new apex
  bool has_triangle = false;
  VertexId fresh_label = 0;
  std::vector<std::pair<int, int>> merges;
};

Word slice(const Word& w, std::size_t from, std::size_t to) {  // [from, to)
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

struct LabelsHash {
  std::size_t operator()(const std::vector<VertexId>& v) const noexcept {
    std::size_t h = v.size();
    for (VertexId x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<VertexId> labels_of(const Word& w) {
  std::vector<VertexId> out;
  out.reserve(w.size());
  for (const Entry& e : w) out.push_back(e.label);
  return out;
}

// Least rotation of the word or its reverse; mirror images have equal area.
std::vector<VertexId> canonical_key(std::vector<VertexId> w) {
  std::vector<VertexId> best = w;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      if (w < best) best = w;
    }
    std::reverse(w.begin(), w.end());
  }
  return best;
}

// Area of a region has the parity of its length; distinct labels force at
// least L - 2 triangles.
int lower_bound_area(const std::vector<VertexId>& w) {
  const int len = static_cast<int>(w.size());
  if (len <= 2) return 0;
  std::vector<VertexId> s = w;
  std::sort(s.begin(), s.end());
  const bool distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
  return distinct ? len - 2 : len % 2;
}

}  // namespace

struct DiskSearch::Impl {
  const SimplicialComplex& k;
  std::vector<std::vector<VertexId>> apexes;  // x * V + y -> common face vertices

  struct Memo {
    int exact = -1;
    int lower = 0;
  };
  std::unordered_map<std::vector<VertexId>, Memo, LabelsHash> memo;

  explicit Impl(const SimplicialComplex& complex) : k(complex) {
    const std::size_t n = k.vertex_count();
    apexes.resize(n * n);
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y : k.neighbors(x)) apexes[x * n + y] = k.common_faces(x, y);
  }

  const std::vector<VertexId>& common(VertexId x, VertexId y) const { return apexes[x * k.vertex_count() + y]; }

  void options(const Word& w, std::vector<Option>& out) const {
    out.clear();
    const std::size_t len = w.size();
    if (len == 2) {
      out.push_back(Option{});
      return;
    }
    const VertexId x = w[0].label;
    const VertexId y = w[1].label;
    // Spur: the edge is walked back at positions r -> r+1 (r = len-1 wraps
    // around to w0).
    for (std::size_t r = 1; r < len; ++r) {
      if (w[r].label != y || w[(r + 1) % len].label != x) continue;
      Option o;
      if (r >= 2) o.words.push_back(slice(w, 1, r));
      if (r + 2 <= len) o.words.push_back(slice(w, r + 1, len));
      o.merges = {{w[1].id, w[r].id}, {w[0].id, w[(r + 1) % len].id}};
      out.push_back(std::move(o));
    }
    const auto& faces = common(x, y);
    auto has_apex = [&](VertexId z) { return std::binary_search(faces.begin(), faces.end(), z); };
    auto fill = [&](std::array<int, 3> tri, std::vector<Word> words) {
      Option o;
      o.cost = 1;
      o.has_triangle = true;
      o.triangle = tri;
      o.words = std::move(words);
      out.push_back(std::move(o));
    };
    if (has_apex(w[2].label)) {
      Word rest{w[0]};
      rest.insert(rest.end(), w.begin() + 2, w.end());
      fill({w[0].id, w[1].id, w[2].id}, {std::move(rest)});
    }
    if (len >= 4 && has_apex(w[len - 1].label)) {
      fill({w[len - 1].id, w[0].id, w[1].id}, {slice(w, 1, len)});
    }
    for (std::size_t q = 3; q + 2 <= len; ++q) {
      if (!has_apex(w[q].label)) continue;
      Word b = slice(w, q, len);
      b.push_back(w[0]);
      fill({w[0].id, w[1].id, w[q].id}, {slice(w, 1, q + 1), std::move(b)});
    }
    for (VertexId z : faces) {
      Word grown{w[0], Entry{kFresh, z}};
      grown.insert(grown.end(), w.begin() + 1, w.end());
      fill({w[0].id, w[1].id, kFresh}, {std::move(grown)});
      out.back().fresh_label = z;
    }
  }

  // Exact minimal area if it is at most `cap`, otherwise some value > cap.
  int min_area(const Word& w, int cap) {
    if (w.size() <= 2) return 0;
    const std::vector<VertexId> labels = labels_of(w);
    const int lb = lower_bound_area(labels);
    if (lb > cap) return cap + 1;
    Memo& entry = memo[canonical_key(labels)];
    if (entry.exact >= 0) return entry.exact;
    int b = std::max(lb, entry.lower);
    if ((b - lb) % 2 != 0) ++b;
    for (; b <= cap; b += 2) {
      if (bounded(w, b)) {
        Memo& done = memo[canonical_key(labels)];
        done.exact = b;
        return b;
      }
      Memo& failed = memo[canonical_key(labels)];
      failed.lower = std::max(failed.lower, b + 2);
    }
    return cap + 1;
  }

  // Is there a filling of area at most b?
  bool bounded(const Word& w, int b) {
    std::vector<Option> opts;
    options(w, opts);
    for (const Option& o : opts) {
      if (o.cost > b) continue;
      std::vector<int> lbs;
      int lb_sum = 0;
      for (const Word& sub : o.words) {
        lbs.push_back(lower_bound_area(labels_of(sub)));
        lb_sum += lbs.back();
      }
      int rem = b - o.cost;
      if (lb_sum > rem) continue;
      bool ok = true;
      for (std::size_t i = 0; i < o.words.size() && ok; ++i) {
        lb_sum -= lbs[i];
        const int cap_i = rem - lb_sum;
        const int a = min_area(o.words[i], cap_i);
        if (a > cap_i) ok = false;
        rem -= a;
      }
      if (ok) return true;
    }
    return false;
  }

  struct Partial {
    std::vector<VertexId> labels;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> parent;
  };

  static int find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }

  void enumerate(std::vector<Word> pending, int budget, const Partial& state, std::size_t boundary_size,
                 std::set<DiskDiagram>& found, std::size_t max_disks) {
    while (!pending.empty() && pending.front().size() <= 1) pending.erase(pending.begin());
    if (pending.empty()) {
      if (budget == 0) {
        found.insert(finish(state, boundary_size));
        if (found.size() > max_disks) {
          throw Error(Errc::DiskLimitExceeded, "more than " + std::to_string(max_disks) + " minimal disks");
        }
      }
      return;
    }
    const Word w = pending.front();
    const std::vector<Word> rest(pending.begin() + 1, pending.end());
    int rest_area = 0;
    for (const Word& r : rest) rest_area += min_area(r, budget);
    if (rest_area > budget) return;
    std::vector<Option> opts;
    options(w, opts);
    for (const Option& o : opts) {
      int need = o.cost + rest_area;
      for (const Word& sub : o.words) {
        if (need > budget) break;
        need += min_area(sub, budget - need);
      }
      if (need != budget) continue;
      Partial next = state;
      std::vector<Word> words = o.words;
      if (o.has_triangle) {
        std::array<int, 3> tri = o.triangle;
        for (int& v : tri) {
          if (v != kFresh) continue;
          v = static_cast<int>(next.labels.size());
          next.labels.push_back(o.fresh_label);
          next.parent.push_back(v);
          for (Word& sub : words)
            for (Entry& e : sub)
              if (e.id == kFresh) e.id = v;
        }
        next.triangles.push_back(tri);
      }
      for (auto [a, b] : o.merges) {
        const int ra = find(next.parent, a), rb = find(next.parent, b);
        if (ra != rb) next.parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
      words.insert(words.end(), rest.begin(), rest.end());
      enumerate(std::move(words), budget - o.cost, next, boundary_size, found, max_disks);
    }
  }

  DiskDiagram finish(const Partial& state, std::size_t boundary_size) const {
    std::vector<int> parent = state.parent;
    std::vector<int> dense(parent.size(), -1);
    std::vector<VertexId> labels;
    auto id = [&](int v) {
      const int r = find(parent, v);
      if (dense[static_cast<std::size_t>(r)] < 0) {
        dense[static_cast<std::size_t>(r)] = static_cast<int>(labels.size());
        labels.push_back(state.labels[static_cast<std::size_t>(r)]);
      }
      return dense[static_cast<std::size_t>(r)];
    };
    std::vector<DiskVertex> boundary;
    for (std::size_t i = 0; i < boundary_size; ++i) boundary.push_back(id(static_cast<int>(i)));
    std::vector<DiskTriangle> triangles;
    for (const auto& t : state.triangles) triangles.push_back({id(t[0]), id(t[1]), id(t[2])});
    return DiskDiagram(std::move(labels), std::move(triangles), std::move(boundary)).canonical();
  }
};

namespace {

Word initial_word(const SimplicialComplex& k, const Path& loop) {
  require_valid_path(k, loop);
  if (loop.front() != loop.back()) throw Error(Errc::NotClosed, "path is not closed");
  Word w;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) w.push_back(Entry{static_cast<int>(i), loop[i]});
  if (w.empty()) w.push_back(Entry{0, loop.front()});
  return w;
}

int default_bound(const Path& loop, std::optional<int> max_area) {
  const int len = path_length(loop);
  return max_area.value_or(len * len);
}

}  // namespace

DiskSearch::DiskSearch(const SimplicialComplex& k) : impl_(new Impl(k)) {}
DiskSearch::~DiskSearch() { delete impl_; }

int DiskSearch::minimal_area(const Path& loop, std::optional<int> max_area) {
  const Word w = initial_word(impl_->k, loop);
  const int bound = default_bound(loop, max_area);
  const int a = impl_->min_area(w, bound);
  if (a > bound) throw Error(Errc::NoDiskWithinBound, "no spanning disk of area <= " + std::to_string(bound));
  return a;
}

std::vector<DiskDiagram> DiskSearch::minimal_disks(const Path& loop, const SpanOptions& options) {
  const Word w = initial_word(impl_->k, loop);
  const int area = minimal_area(loop, default_bound(loop, options.max_area));
  Impl::Partial start;
  for (const Entry& e : w) {
    start.labels.push_back(e.label);
    start.parent.push_back(e.id);
  }
  std::set<DiskDiagram> found;
  impl_->enumerate({w}, area, start, w.size(), found, options.max_disks);
  std::vector<DiskDiagram> out(found.begin(), found.end());
  for (const DiskDiagram& d : out) {
    validate_disk(d, &impl_->k);
    if (options.declared_cat0 && impl_->k.dimension() <= 3 && !is_cat0_disk(d)) {
      throw Error(Errc::DeclaredCat0Contradiction, "minimal disk with an interior vertex of degree < 6");
    }
  }
  return out;
}

int minimal_area(const SimplicialComplex& k, const Path& loop, std::optional<int> max_area) {
  DiskSearch search(k);
  return search.minimal_area(loop, max_area);
}

std::vector<DiskDiagram> minimal_spanning_disks(const SimplicialComplex& k, const Path& loop, SpanOptions options) {
  DiskSearch search(k);
  return search.minimal_disks(loop, options);
}

}  // namespace cat3
