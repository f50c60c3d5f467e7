#include "iolab/modular.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "iolab/detail/cliques.hpp"

namespace iolab {

std::string kind_name(NodeKind k, bool poset_view) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Prime: return "prime";
    case NodeKind::Linear: return poset_view ? "chain" : "linear";
    case NodeKind::EdgeFree: return poset_view ? "antichain" : "edge-free";
    case NodeKind::Complete: return "complete";
  }
  return "?";
}

int ModuleTree::depth() const {
  std::vector<int> d(nodes.size(), 1);
  // Children always have larger ids than their parent.
  int best = 1;
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (int c : nodes[i].children) d[c] = d[i] + 1;
    best = std::max(best, d[i]);
  }
  return best;
}

std::vector<std::vector<int>> ModuleTree::node_sets() const {
  std::vector<std::vector<int>> out;
  for (const auto& n : nodes) out.push_back(n.vertices);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_module(const Rel& r, const std::vector<int>& s) {
  std::vector<char> in(r.n, 0);
  for (int v : s) {
    if (v < 0 || v >= r.n) throw IndexError("module member out of range");
    in[v] = 1;
  }
  if (s.empty()) return true;
  int a0 = s.front();
  for (int x = 0; x < r.n; ++x) {
    if (in[x]) continue;
    for (int a : s)
      if (r(x, a) != r(x, a0) || r(a, x) != r(a0, x)) return false;
  }
  return true;
}

bool is_module(const Poset& p, const std::vector<int>& s) { return is_module(p.relation(), s); }
bool is_module(const SimpleGraph& g, const std::vector<int>& s) { return is_module(g.relation(), s); }

namespace {

// Splitter closure of f within the sub-structure on `scope`.
std::vector<int> closure_in(const Rel& r, const std::vector<int>& scope,
                            const std::vector<int>& f) {
  std::vector<char> in(r.n, 0), in_scope(r.n, 0);
  for (int v : scope) in_scope[v] = 1;
  for (int v : f) {
    if (!in_scope[v]) throw IndexError("closure seed outside scope");
    in[v] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : scope) {
      if (in[x]) continue;
      bool splits = false;
      int a0 = -1;
      for (int a : scope) {
        if (!in[a]) continue;
        if (a0 < 0) {
          a0 = a;
          continue;
        }
        if (r(x, a) != r(x, a0) || r(a, x) != r(a0, x)) {
          splits = true;
          break;
        }
      }
      if (splits) {
        in[x] = 1;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int v : scope)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> smallest_module(const Rel& r, const std::vector<int>& f) {
  if (f.empty()) throw SpecError("smallest_module of an empty set");
  std::vector<int> scope(r.n);
  std::iota(scope.begin(), scope.end(), 0);
  return closure_in(r, scope, f);
}

std::vector<int> smallest_module(const Poset& p, const std::vector<int>& f) {
  return smallest_module(p.relation(), f);
}
std::vector<int> smallest_module(const SimpleGraph& g, const std::vector<int>& f) {
  return smallest_module(g.relation(), f);
}

namespace {

// Connected components of the comparability (or its complement) view on scope.
std::vector<std::vector<int>> scope_components(const Rel& r, const std::vector<int>& scope,
                                               bool complement) {
  std::vector<int> comp(r.n, -1);
  std::vector<std::vector<int>> out;
  auto linked = [&](int u, int v) {
    bool rel = r(u, v) || r(v, u);
    return complement ? !rel : rel;
  };
  for (int s : scope) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : scope)
        if (u != v && comp[u] < 0 && linked(v, u)) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// Maximal proper strong modules of a node whose comparability view and its
// complement are both connected. Proper pair closures all lie inside the
// partition classes; overlapping modules union to modules, so the classes are
// the overlap-components of the pair closures.
std::vector<std::vector<int>> prime_children(const Rel& r, const std::vector<int>& scope) {
  int m = static_cast<int>(scope.size());
  std::vector<int> parent(r.n, -1);
  for (int v : scope) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto c = closure_in(r, scope, {scope[i], scope[j]});
      if (static_cast<int>(c.size()) == m) continue;  // pair closure is everything
      for (size_t t = 1; t < c.size(); ++t) parent[find(c[t])] = find(c[0]);
    }
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(r.n, -1);
  for (int v : scope) {
    int root = find(v);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(v);
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    if (static_cast<int>(g.size()) == m)
      throw ContractError("proper modules of a prime node union to the whole node");
    if (!is_module(r, g))
      throw ContractError("overlap-component of a prime node is not a module");
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

int build_node(const Rel& r, bool poset_view, std::vector<int> scope, ModuleTree& tree) {
  int id = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  tree.nodes[id].vertices = scope;
  if (scope.size() == 1) {
    tree.nodes[id].kind = NodeKind::Leaf;
    return id;
  }
  std::vector<std::vector<int>> children;
  NodeKind kind;
  auto comp = scope_components(r, scope, false);
  if (comp.size() > 1) {
    kind = NodeKind::EdgeFree;
    children = std::move(comp);
  } else {
    auto cocomp = scope_components(r, scope, true);
    if (cocomp.size() > 1) {
      kind = poset_view ? NodeKind::Linear : NodeKind::Complete;
      children = std::move(cocomp);
    } else {
      kind = NodeKind::Prime;
      children = prime_children(r, scope);
    }
  }
  // Quotient relation among children, checked for uniformity.
  int k = static_cast<int>(children.size());
  std::vector<char> quot(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      bool first = r(children[i][0], children[j][0]);
      for (int a : children[i])
        for (int b : children[j])
          if (r(a, b) != first) throw ContractError("non-uniform quotient relation");
      quot[static_cast<size_t>(i) * k + j] = first ? 1 : 0;
    }
  if (kind == NodeKind::Linear) {
    // The quotient of a poset node with disconnected incomparability view is a
    // total order; sort the children along it.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (quot[static_cast<size_t>(i) * k + j] == quot[static_cast<size_t>(j) * k + i])
          throw ContractError("linear node quotient is not a total order");
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return quot[static_cast<size_t>(a) * k + b] != 0; });
    std::vector<std::vector<int>> sorted;
    for (int i : order) sorted.push_back(std::move(children[i]));
    children = std::move(sorted);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        quot[static_cast<size_t>(i) * k + j] = i < j ? 1 : 0;
  }
  tree.nodes[id].kind = kind;
  tree.nodes[id].quotient = std::move(quot);
  for (auto& child : children) {
    int cid = build_node(r, poset_view, std::move(child), tree);
    tree.nodes[id].children.push_back(cid);
  }
  return id;
}

}  // namespace

ModuleTree module_tree(const Rel& r, bool poset_view) {
  if (r.n < 1) throw SpecError("module tree of an empty structure");
  ModuleTree tree;
  tree.poset_view = poset_view;
  std::vector<int> all(r.n);
  std::iota(all.begin(), all.end(), 0);
  tree.root = build_node(r, poset_view, std::move(all), tree);
  if (tree.depth() > r.n) throw ContractError("module tree deeper than vertex count");
  return tree;
}

ModuleTree module_tree(const Poset& p) { return module_tree(p.relation(), true); }
ModuleTree module_tree(const SimpleGraph& g) { return module_tree(g.relation(), false); }

std::vector<std::vector<int>> strong_modules(const Poset& p) {
  return module_tree(p).node_sets();
}
std::vector<std::vector<int>> strong_modules(const SimpleGraph& g) {
  return module_tree(g).node_sets();
}

std::vector<int> robust_hull(const ModuleTree& t, const std::vector<int>& f) {
  if (f.empty()) throw SpecError("robust hull of an empty set");
  int cur = t.root;
  for (;;) {
    int next = -1;
    for (int c : t.nodes[cur].children) {
      const auto& verts = t.nodes[c].vertices;
      bool all = true;
      for (int v : f)
        if (!std::binary_search(verts.begin(), verts.end(), v)) {
          all = false;
          break;
        }
      if (all) {
        next = c;
        break;
      }
    }
    if (next < 0) return t.nodes[cur].vertices;
    cur = next;
  }
}

std::vector<int> robust_hull(const Poset& p, const std::vector<int>& f) {
  return robust_hull(module_tree(p), f);
}
std::vector<int> robust_hull(const SimpleGraph& g, const std::vector<int>& f) {
  return robust_hull(module_tree(g), f);
}

namespace {

bool tree_is_prime(const ModuleTree& t) {
  const auto& root = t.nodes[t.root];
  if (root.vertices.size() == 1) return true;
  if (root.kind != NodeKind::Prime) return false;
  for (int c : root.children)
    if (t.nodes[c].vertices.size() != 1) return false;
  return true;
}

}  // namespace

bool is_prime(const Poset& p) { return tree_is_prime(module_tree(p)); }
bool is_prime(const SimpleGraph& g) { return tree_is_prime(module_tree(g)); }

bool kelly_check(const Poset& p) {
  return is_prime(p) == is_prime(comparability_graph(p));
}

namespace {

bool verts_antichain(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j)) return false;
  return true;
}

}  // namespace

Theorem1Decomposition decompose_interval_order(const Poset& p) {
  if (p.size() < 2) throw SpecError("decomposition needs at least two vertices");
  if (auto w = find_two_plus_two(p)) throw NotIntervalOrderError(w->a, w->b, w->c, w->d);
  ModuleTree tree = module_tree(p);
  const auto& root = tree.nodes[tree.root];
  int k = static_cast<int>(root.children.size());

  Theorem1Decomposition d;
  std::vector<char> qlt(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      qlt[static_cast<size_t>(i) * k + j] = root.quotient_at(i, j) ? 1 : 0;
  d.index = Poset::from_matrix(k, std::move(qlt));
  for (int c : root.children) {
    d.component_vertices.push_back(tree.nodes[c].vertices);
    d.components.push_back(p.induced(tree.nodes[c].vertices));
  }
  d.singular_indices = singular_vertices(d.index);

  switch (root.kind) {
    case NodeKind::Linear:
      d.index_kind = IndexKind::Chain;
      break;
    case NodeKind::EdgeFree: {
      d.index_kind = IndexKind::FiniteAntichain;
      int fat_a = -1, fat_b = -1;
      for (int i = 0; i < k; ++i)
        if (!verts_antichain(d.components[i])) {
          if (fat_a < 0) fat_a = i;
          else fat_b = i;
        }
      if (fat_b >= 0)
        throw ContractError("antichain index with two non-antichain components: " +
                            std::to_string(fat_a) + " and " + std::to_string(fat_b));
      break;
    }
    case NodeKind::Prime: {
      d.index_kind = IndexKind::Prime;
      if (!is_prime(d.index)) throw ContractError("prime-case quotient is not prime");
      for (int i = 0; i < k; ++i) {
        bool singular = std::find(d.singular_indices.begin(), d.singular_indices.end(), i) !=
                        d.singular_indices.end();
        if (!singular && !verts_antichain(d.components[i]))
          throw ContractError("non-antichain component at non-singular index " +
                              std::to_string(i));
      }
      break;
    }
    default:
      throw ContractError("unexpected root kind in interval-order decomposition");
  }
  return d;
}

Poset recompose(const Theorem1Decomposition& d) {
  int k = d.index.size();
  if (static_cast<int>(d.components.size()) != k ||
      static_cast<int>(d.component_vertices.size()) != k)
    throw SpecError("component count does not match index");
  int n = 0;
  for (const auto& verts : d.component_vertices) n += static_cast<int>(verts.size());
  std::vector<char> seen(n, 0);
  for (const auto& verts : d.component_vertices)
    for (int v : verts) {
      if (v < 0 || v >= n || seen[v]) throw SpecError("component vertices do not partition 0..n-1");
      seen[v] = 1;
    }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < k; ++i) {
    const Poset& ci = d.components[i];
    const auto& vi = d.component_vertices[i];
    if (ci.size() != static_cast<int>(vi.size())) throw SpecError("component size mismatch");
    for (int a = 0; a < ci.size(); ++a)
      for (int b = 0; b < ci.size(); ++b)
        if (ci.less(a, b)) lt[static_cast<size_t>(vi[a]) * n + vi[b]] = 1;
    for (int j = 0; j < k; ++j) {
      if (!d.index.less(i, j)) continue;
      for (int a : vi)
        for (int b : d.component_vertices[j]) lt[static_cast<size_t>(a) * n + b] = 1;
    }
  }
  return Poset::from_matrix(n, std::move(lt));
}

int antichain_height(const SimpleGraph& g) {
  int n = g.size();
  if (n == 0) return 0;
  if (n > 64) throw SizeGuardError("independent-set height limited to n <= 64");
  std::vector<detail::Mask> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !g.adjacent(i, j)) adj[i] |= detail::Mask{1} << j;
  int best = 0;
  for (detail::Mask c : detail::maximal_cliques(adj, n))
    best = std::max(best, __builtin_popcountll(c));
  return best;
}

bool rank_inc_check(const SimpleGraph& g) {
  int ht = antichain_height(g);
  if (ht < 1) return true;
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> inc;
    for (int u = 0; u < g.size(); ++u)
      if (u != v && !g.adjacent(u, v)) inc.push_back(u);
    if (antichain_height(g.induced(inc)) >= ht) return false;
  }
  return true;
}

}  // namespace iolab
