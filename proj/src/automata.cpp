#include "cat3/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cat3 {

Dfa::Dfa(int alphabet_size) : alphabet_(alphabet_size) {}

int Dfa::next(int state, Letter letter) const {
  if (letter < 0 || letter >= alphabet_) return kNone;
  return delta_[static_cast<std::size_t>(state) * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(letter)];
}

int Dfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  delta_.resize(delta_.size() + static_cast<std::size_t>(alphabet_), kNone);
  return state_count() - 1;
}

void Dfa::set_transition(int from, Letter letter, int to) {
  delta_.at(static_cast<std::size_t>(from) * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(letter)) = to;
}

bool Dfa::accepts(std::span<const Letter> word) const {
  if (state_count() == 0) return false;
  int s = start_;
  for (Letter l : word) {
    s = next(s, l);
    if (s == kNone) return false;
  }
  return accepting(s);
}

bool Dfa::empty_language() const {
  if (state_count() == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(state_count()), false);
  std::deque<int> queue{start_};
  seen[static_cast<std::size_t>(start_)] = true;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    if (accepting(s)) return false;
    for (Letter l = 0; l < alphabet_; ++l) {
      const int t = next(s, l);
      if (t != kNone && !seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        queue.push_back(t);
      }
    }
  }
  return true;
}

Dfa Dfa::complete() const {
  Dfa out = *this;
  if (out.state_count() == 0) {
    out.add_state(false);
    out.start_ = 0;
  }
  int sink = kNone;
  const int n = out.state_count();
  for (int s = 0; s < n; ++s) {
    for (Letter l = 0; l < alphabet_; ++l) {
      if (out.next(s, l) != kNone) continue;
      if (sink == kNone) {
        sink = out.add_state(false);
        for (Letter m = 0; m < alphabet_; ++m) out.set_transition(sink, m, sink);
      }
      out.set_transition(s, l, sink);
    }
  }
  return out;
}

Dfa Dfa::complement() const {
  Dfa out = complete();
  for (int s = 0; s < out.state_count(); ++s) out.set_accepting(s, !out.accepting(s));
  return out;
}

Dfa Dfa::minimize() const {
  const Dfa full = complete();
  // Reachable states in breadth-first order.
  std::vector<int> order;
  std::vector<int> index(static_cast<std::size_t>(full.state_count()), -1);
  order.push_back(full.start_);
  index[static_cast<std::size_t>(full.start_)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter l = 0; l < alphabet_; ++l) {
      const int t = full.next(order[i], l);
      if (index[static_cast<std::size_t>(t)] < 0) {
        index[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  // Moore refinement.
  const std::size_t n = order.size();
  std::vector<int> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = full.accepting(order[i]) ? 1 : 0;
  for (std::size_t classes = 0;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next_cls(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> sig{cls[i]};
      for (Letter l = 0; l < alphabet_; ++l)
        sig.push_back(cls[static_cast<std::size_t>(index[static_cast<std::size_t>(full.next(order[i], l))])]);
      next_cls[i] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    cls = std::move(next_cls);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  // Quotient, renumbered breadth-first from the start class.
  std::map<int, int> renum;
  std::map<int, std::size_t> any_member;
  for (std::size_t i = 0; i < n; ++i) any_member.try_emplace(cls[i], i);
  Dfa out(alphabet_);
  std::deque<int> queue{cls[0]};
  renum[cls[0]] = out.add_state(full.accepting(order[0]));
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const std::size_t i = any_member[c];
    for (Letter l = 0; l < alphabet_; ++l) {
      const std::size_t j = static_cast<std::size_t>(index[static_cast<std::size_t>(full.next(order[i], l))]);
      auto [it, fresh] = renum.try_emplace(cls[j], 0);
      if (fresh) {
        it->second = out.add_state(full.accepting(order[j]));
        queue.push_back(cls[j]);
      }
      out.set_transition(renum[c], l, it->second);
    }
  }
  out.start_ = 0;
  return out;
}

bool Dfa::same_language(const Dfa& other) const {
  if (alphabet_ != other.alphabet_) throw Error(Errc::AlphabetMismatch, "alphabets differ");
  return minimize() == other.minimize();
}

std::string Dfa::to_text() const {
  std::ostringstream out;
  out << "start " << start_ << "\naccept";
  for (int s = 0; s < state_count(); ++s)
    if (accepting(s)) out << ' ' << s;
  out << '\n';
  for (int s = 0; s < state_count(); ++s)
    for (Letter l = 0; l < alphabet_; ++l)
      if (next(s, l) != kNone) out << s << ' ' << l << ' ' << next(s, l) << '\n';
  return out.str();
}

std::string Dfa::to_dot(const std::vector<std::string>& letter_names) const {
  std::ostringstream out;
  out << "digraph fsa {\n  rankdir=LR;\n  init [shape=point];\n  init -> s" << start_ << ";\n";
  for (int s = 0; s < state_count(); ++s)
    out << "  s" << s << " [shape=" << (accepting(s) ? "doublecircle" : "circle") << "];\n";
  for (int s = 0; s < state_count(); ++s) {
    for (Letter l = 0; l < alphabet_; ++l) {
      if (next(s, l) == kNone) continue;
      out << "  s" << s << " -> s" << next(s, l) << " [label=\"";
      if (static_cast<std::size_t>(l) < letter_names.size()) out << letter_names[static_cast<std::size_t>(l)];
      else out << l;
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Dfa combine(const Dfa& a_in, const Dfa& b_in, BoolOp op) {
  if (a_in.alphabet_size() != b_in.alphabet_size()) throw Error(Errc::AlphabetMismatch, "alphabets differ");
  const Dfa a = a_in.complete(), b = b_in.complete();
  const int sigma = a.alphabet_size();
  Dfa out(sigma);
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto state = [&](int x, int y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      const bool fa = a.accepting(x), fb = b.accepting(y);
      const bool acc = op == BoolOp::Union ? (fa || fb) : op == BoolOp::Intersection ? (fa && fb) : (fa && !fb);
      it->second = out.add_state(acc);
      queue.emplace_back(x, y);
    }
    return it->second;
  };
  out.set_start(state(a.start(), b.start()));
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    const int from = ids[{x, y}];
    for (Letter l = 0; l < sigma; ++l) {
      const int to = state(a.next(x, l), b.next(y, l));
      out.set_transition(from, l, to);
    }
  }
  return out;
}

PathAlphabet::PathAlphabet(const SimplicialComplex& k) : vertices_(k.vertex_count()) {
  edge_index_.assign(vertices_ * vertices_, Dfa::kNone);
  for (VertexId v = 0; v < vertices_; ++v) names_.push_back("@" + k.name(v));
  for (VertexId a = 0; a < vertices_; ++a) {
    for (VertexId b : k.neighbors(a)) {
      edge_index_[a * vertices_ + b] = static_cast<int>(vertices_ + edges_.size());
      edges_.emplace_back(a, b);
      names_.push_back(k.name(a) + ">" + k.name(b));
    }
  }
}

Letter PathAlphabet::edge_letter(VertexId a, VertexId b) const {
  if (a >= vertices_ || b >= vertices_) return Dfa::kNone;
  return edge_index_[a * vertices_ + b];
}

std::pair<VertexId, VertexId> PathAlphabet::edge(Letter l) const {
  return edges_.at(static_cast<std::size_t>(l) - vertices_);
}

Word PathAlphabet::word(const Path& p) const {
  Word w;
  if (p.empty()) return w;
  w.push_back(vertex_letter(p.front()));
  for (std::size_t i = 1; i < p.size(); ++i) w.push_back(edge_letter(p[i - 1], p[i]));
  return w;
}

std::optional<Path> PathAlphabet::path(const Word& w) const {
  if (w.empty() || w.front() < 0 || is_edge_letter(w.front())) return std::nullopt;
  Path p{static_cast<VertexId>(w.front())};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!is_edge_letter(w[i]) || w[i] >= size()) return std::nullopt;
    const auto [a, b] = edge(w[i]);
    if (a != p.back()) return std::nullopt;
    p.push_back(b);
  }
  return p;
}

bool accepts(const Dfa& m, const PathAlphabet& alphabet, const Path& p) {
  const Word w = alphabet.word(p);
  if (std::find(w.begin(), w.end(), Dfa::kNone) != w.end()) return false;
  return m.accepts(w);
}

Dfa forbidden_subpaths_fsa(const SimplicialComplex& k, const std::vector<Path>& patterns,
                           const std::vector<Automorphism>& autos) {
  const PathAlphabet alphabet(k);
  const int sigma = alphabet.size();
  std::vector<Automorphism> group = automorphism_closure(k, autos);
  std::set<Path> images;
  for (const Path& beta : patterns) {
    require_valid_path(k, beta);
    if (beta.size() < 2) throw Error(Errc::BadParams, "forbidden subpath needs at least one edge");
    for (const Automorphism& g : group) images.insert(g.apply(beta));
  }

  // Aho-Corasick trie over edge letters.
  std::vector<std::map<Letter, int>> trie(1);
  std::vector<bool> terminal(1, false);
  for (const Path& p : images) {
    int node = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      const Letter l = alphabet.edge_letter(p[i - 1], p[i]);
      auto it = trie[static_cast<std::size_t>(node)].find(l);
      if (it == trie[static_cast<std::size_t>(node)].end()) {
        trie.emplace_back();
        terminal.push_back(false);
        it = trie[static_cast<std::size_t>(node)].emplace(l, static_cast<int>(trie.size()) - 1).first;
      }
      node = it->second;
    }
    terminal[static_cast<std::size_t>(node)] = true;
  }
  const std::size_t nodes = trie.size();
  std::vector<int> fail(nodes, 0);
  std::vector<std::vector<int>> go(nodes, std::vector<int>(static_cast<std::size_t>(sigma), 0));
  std::deque<int> queue;
  for (Letter l = 0; l < sigma; ++l) {
    if (!alphabet.is_edge_letter(l)) continue;
    auto it = trie[0].find(l);
    if (it != trie[0].end()) {
      go[0][static_cast<std::size_t>(l)] = it->second;
      queue.push_back(it->second);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    terminal[static_cast<std::size_t>(u)] = terminal[static_cast<std::size_t>(u)] || terminal[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])];
    for (Letter l = 0; l < sigma; ++l) {
      if (!alphabet.is_edge_letter(l)) continue;
      auto it = trie[static_cast<std::size_t>(u)].find(l);
      const int via_fail = go[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])][static_cast<std::size_t>(l)];
      if (it != trie[static_cast<std::size_t>(u)].end()) {
        fail[static_cast<std::size_t>(it->second)] = via_fail;
        go[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)] = it->second;
        queue.push_back(it->second);
      } else {
        go[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)] = via_fail;
      }
    }
  }

  Dfa m(sigma);
  const int start = m.add_state(false);
  const int match = m.add_state(true);
  std::vector<int> state(nodes);
  for (std::size_t u = 0; u < nodes; ++u) state[u] = terminal[u] ? match : m.add_state(false);
  for (Letter l = 0; l < sigma; ++l) {
    m.set_transition(match, l, match);
    if (!alphabet.is_edge_letter(l)) m.set_transition(start, l, state[0]);
  }
  for (std::size_t u = 0; u < nodes; ++u) {
    if (terminal[u]) continue;
    for (Letter l = 0; l < sigma; ++l)
      if (alphabet.is_edge_letter(l)) m.set_transition(state[u], l, state[static_cast<std::size_t>(go[u][static_cast<std::size_t>(l)])]);
  }
  m.set_start(start);
  return m;
}

Dfa forbidden_subpath_fsa(const SimplicialComplex& k, const Path& beta, const std::vector<Automorphism>& autos) {
  return forbidden_subpaths_fsa(k, {beta}, autos);
}

namespace {

std::vector<VertexId> all_or(const SimplicialComplex& k, const std::vector<VertexId>& basepoints) {
  if (!basepoints.empty()) return basepoints;
  std::vector<VertexId> out(k.vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

}  // namespace

Dfa geodesic_fsa(const SimplicialComplex& k, const std::vector<VertexId>& basepoints) {
  const PathAlphabet alphabet(k);
  Dfa trie(alphabet.size());
  trie.set_start(trie.add_state(false));
  const auto points = all_or(k, basepoints);
  for (VertexId u : points) {
    for (VertexId w : points) {
      for (const Path& g : enumerate_geodesics(k, u, w)) {
        int s = trie.start();
        for (Letter l : alphabet.word(g)) {
          int t = trie.next(s, l);
          if (t == Dfa::kNone) {
            t = trie.add_state(false);
            trie.set_transition(s, l, t);
          }
          s = t;
        }
        trie.set_accepting(s, true);
      }
    }
  }
  return trie.minimize();
}

std::vector<Path> minimal_non_gs_subpaths(GsOracle& oracle) {
  const SimplicialComplex& k = oracle.complex();
  std::vector<Path> out;
  for (VertexId u = 0; u < k.vertex_count(); ++u) {
    for (VertexId w = 0; w < k.vertex_count(); ++w) {
      if (k.distance(u, w) < 2) continue;
      for (const Path& g : enumerate_geodesics(k, u, w)) {
        if (oracle.is_gs(g)) continue;
        const Path head(g.begin(), g.end() - 1), tail(g.begin() + 1, g.end());
        if (oracle.is_gs(head) && oracle.is_gs(tail)) out.push_back(g);
      }
    }
  }
  return out;
}

Dfa gs_fsa(GsOracle& oracle, const std::vector<VertexId>& basepoints, const std::vector<Automorphism>& autos) {
  const SimplicialComplex& k = oracle.complex();
  const Dfa geodesics = geodesic_fsa(k, basepoints);
  const std::vector<Path> forbidden = minimal_non_gs_subpaths(oracle);
  if (forbidden.empty()) return geodesics;
  return combine(geodesics, forbidden_subpaths_fsa(k, forbidden, autos), BoolOp::Difference).minimize();
}

std::vector<Path> accepted_paths(const Dfa& m, const PathAlphabet& alphabet, std::size_t max_length) {
  std::vector<Path> out;
  if (m.state_count() == 0) return out;
  // States that can still reach an accepting state.
  const int n = m.state_count();
  std::vector<bool> live(static_cast<std::size_t>(n), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (live[static_cast<std::size_t>(s)]) continue;
      bool ok = m.accepting(s);
      for (Letter l = 0; l < m.alphabet_size() && !ok; ++l) {
        const int t = m.next(s, l);
        ok = t != Dfa::kNone && live[static_cast<std::size_t>(t)];
      }
      if (ok) live[static_cast<std::size_t>(s)] = changed = true;
    }
  }
  Word w;
  auto dfs = [&](auto&& self, int s) -> void {
    if (m.accepting(s)) {
      if (auto p = alphabet.path(w)) out.push_back(*p);
    }
    if (w.size() > max_length) return;
    for (Letter l = 0; l < m.alphabet_size(); ++l) {
      const int t = m.next(s, l);
      if (t == Dfa::kNone || !live[static_cast<std::size_t>(t)]) continue;
      w.push_back(l);
      self(self, t);
      w.pop_back();
    }
  };
  dfs(dfs, m.start());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cat3
