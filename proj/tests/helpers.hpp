#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "iolab/poset.hpp"

namespace iolab::testing {

inline Poset chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(n, pairs);
}

inline Poset antichain(int n) { return Poset::from_pairs(n, {}); }

inline Poset two_plus_two() { return Poset::from_pairs(4, {{0, 1}, {2, 3}}); }

// Random DAG closure: relation drawn below a random linear extension.
inline Poset random_poset(std::mt19937& rng, int n, double density = 0.3) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(perm[i], perm[j]);
  return Poset::from_pairs(n, pairs);
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return SimpleGraph::from_edges(n, edges);
}

inline std::vector<std::vector<int>> normalized(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace iolab::testing
