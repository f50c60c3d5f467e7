#pragma once

#include <string>
#include <vector>

#include "iolab/interval.hpp"
#include "iolab/poset.hpp"

namespace iolab {

enum class NodeKind { Leaf, Prime, Linear, EdgeFree, Complete };

// Kind label; the poset view renders Linear as "chain" and EdgeFree as
// "antichain".
std::string kind_name(NodeKind k, bool poset_view);

// Gallai decomposition tree: nodes are the strong modules, children the
// maximal strong modules properly included in their parent.
struct ModuleTree {
  struct Node {
    std::vector<int> vertices;  // sorted
    NodeKind kind = NodeKind::Leaf;
    std::vector<int> children;           // node ids
    std::vector<char> quotient;          // k*k relation among children
    bool quotient_at(int i, int j) const {
      return quotient[static_cast<size_t>(i) * children.size() + j] != 0;
    }
  };
  std::vector<Node> nodes;
  int root = 0;
  bool poset_view = true;

  int depth() const;
  std::vector<std::vector<int>> node_sets() const;
};

enum class IndexKind { Chain, FiniteAntichain, Prime };

struct Theorem1Decomposition {
  Poset index;
  IndexKind index_kind;
  std::vector<Poset> components;
  std::vector<std::vector<int>> component_vertices;  // original indices per component
  std::vector<int> singular_indices;                 // of the index poset
};

bool is_module(const Rel& r, const std::vector<int>& s);
bool is_module(const Poset& p, const std::vector<int>& s);
bool is_module(const SimpleGraph& g, const std::vector<int>& s);

// Inclusion-least module containing f (splitter-closure fixpoint).
std::vector<int> smallest_module(const Rel& r, const std::vector<int>& f);
std::vector<int> smallest_module(const Poset& p, const std::vector<int>& f);
std::vector<int> smallest_module(const SimpleGraph& g, const std::vector<int>& f);

ModuleTree module_tree(const Rel& r, bool poset_view);
ModuleTree module_tree(const Poset& p);
ModuleTree module_tree(const SimpleGraph& g);

std::vector<std::vector<int>> strong_modules(const Poset& p);
std::vector<std::vector<int>> strong_modules(const SimpleGraph& g);

// Deepest tree node containing f (S(F)).
std::vector<int> robust_hull(const ModuleTree& t, const std::vector<int>& f);
std::vector<int> robust_hull(const Poset& p, const std::vector<int>& f);
std::vector<int> robust_hull(const SimpleGraph& g, const std::vector<int>& f);

// Convention for tiny structures: a single vertex is prime, two vertices are
// not (matching the Gallai-root reading: root of kind Prime, or n=1).
bool is_prime(const Poset& p);
bool is_prime(const SimpleGraph& g);

// A poset is prime iff its comparability graph is; returns whether the two
// sides agree (always true).
bool kelly_check(const Poset& p);

Theorem1Decomposition decompose_interval_order(const Poset& p);
Poset recompose(const Theorem1Decomposition& d);

// Maximum independent set size, exact.
int antichain_height(const SimpleGraph& g);
// ht restricted to the non-neighbours of every vertex drops strictly.
bool rank_inc_check(const SimpleGraph& g);

}  // namespace iolab
