#include "iolab/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace iolab {

int subset_guard() {
  if (const char* e = std::getenv("IOLAB_GUARD_N")) return std::atoi(e);
  return 18;
}

int iso_guard() {
  if (const char* e = std::getenv("IOLAB_GUARD_N")) return std::atoi(e);
  return 12;
}

namespace {

void assert_order_invariants(int n, const std::vector<char>& lt) {
  auto at = [&](int i, int j) { return lt[static_cast<size_t>(i) * n + j] != 0; };
  for (int i = 0; i < n; ++i) {
    if (at(i, i)) throw ContractError("relation not irreflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i)) throw ContractError("relation not antisymmetric");
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k)) throw ContractError("relation not transitive");
    }
  }
}

}  // namespace

void Poset::check_index(int x) const {
  if (x < 0 || x >= n_) throw IndexError("vertex index " + std::to_string(x) + " out of range");
}

std::string Poset::name_of(int v) const {
  check_index(v);
  return names_.empty() ? std::to_string(v) : names_[v];
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                        std::vector<std::string> names) {
  if (n < 0) throw IndexError("negative vertex count");
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    lt[static_cast<size_t>(a) * n + b] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!lt[static_cast<size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (lt[static_cast<size_t>(k) * n + j]) lt[static_cast<size_t>(i) * n + j] = 1;
    }
  for (int i = 0; i < n; ++i)
    if (lt[static_cast<size_t>(i) * n + i]) {
      // Recover a witness cycle through i by walking the input arcs.
      std::vector<char> arc(static_cast<size_t>(n) * n, 0);
      for (auto [a, b] : pairs) arc[static_cast<size_t>(a) * n + b] = 1;
      std::vector<int> cycle{i};
      int cur = i;
      do {
        for (int j = 0; j < n; ++j)
          if (arc[static_cast<size_t>(cur) * n + j] &&
              (j == i || lt[static_cast<size_t>(j) * n + i])) {
            cur = j;
            break;
          }
        if (cur != i) cycle.push_back(cur);
      } while (cur != i);
      throw CycleError(std::move(cycle));
    }
  return from_matrix(n, std::move(lt), std::move(names));
}

Poset Poset::from_matrix(int n, std::vector<char> lt, std::vector<std::string> names) {
  assert_order_invariants(n, lt);
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw IndexError("name count mismatch");
  Poset p;
  p.n_ = n;
  p.lt_ = std::move(lt);
  p.names_ = std::move(names);
  return p;
}

Poset Poset::induced(const std::vector<int>& vertices) const {
  int m = static_cast<int>(vertices.size());
  std::vector<char> lt(static_cast<size_t>(m) * m, 0);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    check_index(vertices[i]);
    if (!names_.empty()) names.push_back(names_[vertices[i]]);
    for (int j = 0; j < m; ++j)
      lt[static_cast<size_t>(i) * m + j] = less(vertices[i], vertices[j]) ? 1 : 0;
  }
  return from_matrix(m, std::move(lt), std::move(names));
}

bool Poset::same_relation(const Poset& other) const {
  return n_ == other.n_ && lt_ == other.lt_;
}

std::string SimpleGraph::name_of(int v) const {
  if (v < 0 || v >= n_) throw IndexError("vertex index out of range");
  return names_.empty() ? std::to_string(v) : names_[v];
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<std::string> names) {
  if (n < 0) throw IndexError("negative vertex count");
  SimpleGraph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw IndexError("edge endpoint out of range");
    if (a == b) throw ContractError("loop edge");
    g.adj_[static_cast<size_t>(a) * n + b] = 1;
    g.adj_[static_cast<size_t>(b) * n + a] = 1;
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw IndexError("name count mismatch");
  g.names_ = std::move(names);
  return g;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g;
  g.n_ = n_;
  g.names_ = names_;
  g.adj_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !adjacent(i, j)) g.adj_[static_cast<size_t>(i) * n_ + j] = 1;
  return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  int m = static_cast<int>(vertices.size());
  SimpleGraph g;
  g.n_ = m;
  g.adj_.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    if (!names_.empty()) g.names_.push_back(names_[vertices[i]]);
    for (int j = 0; j < m; ++j)
      g.adj_[static_cast<size_t>(i) * m + j] = adjacent(vertices[i], vertices[j]) ? 1 : 0;
  }
  return g;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u = 0; u < n_; ++u)
        if (adjacent(v, u) && comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) e.emplace_back(i, j);
  return e;
}

std::vector<int> down_set(const Poset& p, int x) {
  p.check_index(x);
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y)
    if (p.less(y, x)) out.push_back(y);
  return out;
}

std::vector<int> up_set(const Poset& p, int x) {
  p.check_index(x);
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y)
    if (p.less(x, y)) out.push_back(y);
  return out;
}

std::vector<int> incomparables(const Poset& p, int x) {
  p.check_index(x);
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y)
    if (p.incomparable(x, y)) out.push_back(y);
  return out;
}

std::vector<int> min_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (down_set(p, x).empty()) out.push_back(x);
  return out;
}

std::vector<int> max_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (up_set(p, x).empty()) out.push_back(x);
  return out;
}

LevelDecomposition levels(const Poset& p) {
  LevelDecomposition d;
  std::vector<char> placed(p.size(), 0);
  int remaining = p.size();
  while (remaining > 0) {
    std::vector<int> level;
    for (int x = 0; x < p.size(); ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < p.size() && minimal; ++y)
        if (!placed[y] && p.less(y, x)) minimal = false;
      if (minimal) level.push_back(x);
    }
    for (int x : level) placed[x] = 1;
    remaining -= static_cast<int>(level.size());
    d.levels.push_back(std::move(level));
  }
  return d;
}

namespace {

// Kuhn augmenting paths on the split bipartite graph of the comparability DAG.
bool try_augment(const Poset& p, int u, std::vector<int>& match_r, std::vector<char>& used) {
  for (int v = 0; v < p.size(); ++v) {
    if (!p.less(u, v) || used[v]) continue;
    used[v] = 1;
    if (match_r[v] < 0 || try_augment(p, match_r[v], match_r, used)) {
      match_r[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

int width(const Poset& p) {
  // Dilworth via minimum chain cover: width = n - max matching.
  std::vector<int> match_r(p.size(), -1);
  int matched = 0;
  for (int u = 0; u < p.size(); ++u) {
    std::vector<char> used(p.size(), 0);
    if (try_augment(p, u, match_r, used)) ++matched;
  }
  return p.size() - matched;
}

SimpleGraph comparability_graph(const Poset& p) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j)) e.emplace_back(i, j);
  return SimpleGraph::from_edges(p.size(), e, p.names());
}

SimpleGraph incomparability_graph(const Poset& p) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.incomparable(i, j)) e.emplace_back(i, j);
  return SimpleGraph::from_edges(p.size(), e, p.names());
}

Poset dual(const Poset& p) {
  int n = p.size();
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) lt[static_cast<size_t>(i) * n + j] = 1;
  return Poset::from_matrix(n, std::move(lt), p.names());
}

namespace {

struct Signature {
  int down, up;
  bool operator==(const Signature&) const = default;
};

Signature sig_of(const Poset& p, int x) {
  return {static_cast<int>(down_set(p, x).size()), static_cast<int>(up_set(p, x).size())};
}

bool extend_iso(const Poset& p, const Poset& q, std::vector<int>& map, std::vector<char>& used,
                const std::vector<Signature>& sp, const std::vector<Signature>& sq, int i) {
  int n = p.size();
  if (i == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v] || !(sp[i] == sq[v])) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (p.less(i, j) != q.less(v, map[j]) || p.less(j, i) != q.less(map[j], v)) ok = false;
    if (!ok) continue;
    map[i] = v;
    used[v] = 1;
    if (extend_iso(p, q, map, used, sp, sq, i + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() > iso_guard())
    throw SizeGuardError("isomorphism search above guard (n=" + std::to_string(p.size()) + ")");
  int n = p.size();
  std::vector<Signature> sp(n), sq(n);
  for (int i = 0; i < n; ++i) {
    sp[i] = sig_of(p, i);
    sq[i] = sig_of(q, i);
  }
  auto key = [](Signature s) { return s.down * 1000 + s.up; };
  std::vector<int> kp, kq;
  for (int i = 0; i < n; ++i) {
    kp.push_back(key(sp[i]));
    kq.push_back(key(sq[i]));
  }
  std::sort(kp.begin(), kp.end());
  std::sort(kq.begin(), kq.end());
  if (kp != kq) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (extend_iso(p, q, map, used, sp, sq, 0)) return map;
  return std::nullopt;
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

}  // namespace iolab
