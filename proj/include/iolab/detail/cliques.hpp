#pragma once

#include <cstdint>
#include <vector>

namespace iolab::detail {

using Mask = std::uint64_t;

// Bron-Kerbosch with pivoting over adjacency bitmasks, n <= 64.
inline void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                          std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = -1, best = -1;
  for (Mask t = px; t;) {
    int u = __builtin_ctzll(t);
    t &= t - 1;
    int deg = __builtin_popcountll(adj[u] & p);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  Mask cand = p & ~adj[pivot];
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    Mask vb = Mask{1} << v;
    bron_kerbosch(adj, r | vb, p & adj[v], x & adj[v], out);
    p &= ~vb;
    x |= vb;
  }
}

inline std::vector<Mask> maximal_cliques(const std::vector<Mask>& adj, int n) {
  if (n == 0) return {};
  std::vector<Mask> out;
  Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  bron_kerbosch(adj, 0, full, 0, out);
  return out;
}

}  // namespace iolab::detail
