#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cat3/complex.hpp"
#include "cat3/gs_geodesics.hpp"
#include "cat3/paths.hpp"

namespace cat3 {

using Letter = int;
using Word = std::vector<Letter>;

/// Deterministic automaton over letters 0..alphabet_size-1. Missing
/// transitions reject.
class Dfa {
 public:
  static constexpr int kNone = -1;

  explicit Dfa(int alphabet_size = 0);

  int alphabet_size() const noexcept { return alphabet_; }
  int state_count() const noexcept { return static_cast<int>(accepting_.size()); }
  int start() const noexcept { return start_; }
  bool accepting(int state) const { return accepting_.at(static_cast<std::size_t>(state)); }
  /// kNone when undefined.
  int next(int state, Letter letter) const;

  int add_state(bool accepting = false);
  void set_start(int state) { start_ = state; }
  void set_accepting(int state, bool accepting) { accepting_.at(static_cast<std::size_t>(state)) = accepting; }
  void set_transition(int from, Letter letter, int to);

  bool accepts(std::span<const Letter> word) const;
  bool empty_language() const;

  /// Total transition function via an added rejecting sink.
  Dfa complete() const;
  Dfa complement() const;
  /// The minimal complete automaton, states numbered in breadth-first order
  /// from the start by letter. Equal languages give identical results.
  Dfa minimize() const;
  bool same_language(const Dfa& other) const;

  /// `start s`, `accept s..`, then one `state letter state` line per transition.
  std::string to_text() const;
  /// Graphviz text; `letter_name` renders letters.
  std::string to_dot(const std::vector<std::string>& letter_names = {}) const;

  bool operator==(const Dfa&) const = default;

 private:
  int alphabet_;
  int start_ = 0;
  std::vector<bool> accepting_;
  std::vector<int> delta_;  // state * alphabet + letter
};

enum class BoolOp { Union, Intersection, Difference };

/// Product construction. Throws AlphabetMismatch.
Dfa combine(const Dfa& a, const Dfa& b, BoolOp op);

/// Letters for paths in a complex: one letter per vertex (the start of a
/// path) followed by one letter per directed edge. The word of
/// [v0, .., vn] is v0 then the edges v0->v1, .., v(n-1)->vn.
class PathAlphabet {
 public:
  explicit PathAlphabet(const SimplicialComplex& k);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  Letter vertex_letter(VertexId v) const { return static_cast<Letter>(v); }
  /// kNone when ab is not an edge.
  Letter edge_letter(VertexId a, VertexId b) const;
  bool is_edge_letter(Letter l) const { return l >= static_cast<Letter>(vertices_); }
  std::pair<VertexId, VertexId> edge(Letter l) const;

  Word word(const Path& p) const;
  /// Inverse of word(); nullopt when the word does not spell a path.
  std::optional<Path> path(const Word& w) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::size_t vertices_ = 0;
  std::vector<int> edge_index_;  // a * V + b
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::string> names_;
};

bool accepts(const Dfa& m, const PathAlphabet& alphabet, const Path& p);

/// Accepts the paths containing g(beta) as a consecutive subpath for some g
/// in the group generated by `autos`.
Dfa forbidden_subpath_fsa(const SimplicialComplex& k, const Path& beta, const std::vector<Automorphism>& autos);

/// Same for a set of patterns, in one machine.
Dfa forbidden_subpaths_fsa(const SimplicialComplex& k, const std::vector<Path>& patterns,
                           const std::vector<Automorphism>& autos);

/// Accepts exactly the geodesics between basepoints (all vertices when empty).
Dfa geodesic_fsa(const SimplicialComplex& k, const std::vector<VertexId>& basepoints = {});

/// Non-GS geodesics all of whose proper subpaths are GS.
std::vector<Path> minimal_non_gs_subpaths(GsOracle& oracle);

/// geodesic_fsa minus the machines for minimal_non_gs_subpaths.
Dfa gs_fsa(GsOracle& oracle, const std::vector<VertexId>& basepoints = {},
           const std::vector<Automorphism>& autos = {});

/// Every accepted word (finite languages only), as paths, sorted.
std::vector<Path> accepted_paths(const Dfa& m, const PathAlphabet& alphabet, std::size_t max_length);

}  // namespace cat3
