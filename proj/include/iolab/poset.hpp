#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iolab/errors.hpp"

namespace iolab {

// Dense binary relation view shared by posets (strict order matrix) and
// graphs (symmetric adjacency). Module machinery works on this.
struct Rel {
  int n = 0;
  std::vector<char> m;  // n*n, row-major

  bool operator()(int i, int j) const { return m[static_cast<size_t>(i) * n + j] != 0; }
  char& at(int i, int j) { return m[static_cast<size_t>(i) * n + j]; }
  bool at(int i, int j) const { return m[static_cast<size_t>(i) * n + j] != 0; }
};

class SimpleGraph;

// Finite strict partial order on vertices 0..n-1, stored as the full
// transitive closure.
class Poset {
 public:
  // Builds the transitive closure of the given pairs; rejects cycles.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                          std::vector<std::string> names = {});
  // The matrix must already be an irreflexive antisymmetric transitive
  // relation; invariants are asserted.
  static Poset from_matrix(int n, std::vector<char> lt,
                           std::vector<std::string> names = {});

  int size() const { return n_; }
  bool less(int i, int j) const { return lt_[static_cast<size_t>(i) * n_ + j] != 0; }
  bool leq(int i, int j) const { return i == j || less(i, j); }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  bool incomparable(int i, int j) const { return i != j && !comparable(i, j); }

  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int v) const;

  Rel relation() const { return Rel{n_, lt_}; }
  const std::vector<char>& matrix() const { return lt_; }

  Poset induced(const std::vector<int>& vertices) const;
  bool same_relation(const Poset& other) const;

  Poset() = default;  // the empty poset

 private:
  void check_index(int x) const;
  friend std::vector<int> down_set(const Poset&, int);
  friend std::vector<int> up_set(const Poset&, int);
  friend std::vector<int> incomparables(const Poset&, int);

  int n_ = 0;
  std::vector<char> lt_;
  std::vector<std::string> names_;
};

// Undirected irreflexive graph.
class SimpleGraph {
 public:
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> names = {});

  int size() const { return n_; }
  bool adjacent(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int v) const;

  Rel relation() const { return Rel{n_, adj_}; }
  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;
  std::vector<std::vector<int>> components() const;
  std::vector<std::pair<int, int>> edges() const;

  SimpleGraph() = default;

 private:
  int n_ = 0;
  std::vector<char> adj_;
  std::vector<std::string> names_;
};

struct LevelDecomposition {
  std::vector<std::vector<int>> levels;
  int height() const { return static_cast<int>(levels.size()); }
};

std::vector<int> down_set(const Poset& p, int x);
std::vector<int> up_set(const Poset& p, int x);
std::vector<int> incomparables(const Poset& p, int x);

std::vector<int> min_elements(const Poset& p);
std::vector<int> max_elements(const Poset& p);

LevelDecomposition levels(const Poset& p);

// Maximum antichain size, exact (minimum chain cover via bipartite matching).
int width(const Poset& p);

SimpleGraph comparability_graph(const Poset& p);
SimpleGraph incomparability_graph(const Poset& p);

Poset dual(const Poset& p);

// Order-isomorphism test, exhaustive with degree/level pruning. Intended for
// small posets; throws SizeGuardError above the configured bound.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);

}  // namespace iolab
