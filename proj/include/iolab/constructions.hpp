#pragma once

#include <vector>

#include "iolab/ordinal.hpp"
#include "iolab/poset.hpp"

namespace iolab {

// The semiorder I_n: vertices 0..n-1 with i<j iff j-i >= 2. Its
// incomparability graph is the path 0-1-...-(n-1); prime for n >= 4.
Poset semiorder(int n);

// Finite incidence bipartite poset B(C_m): vertices (i,r) for i in {0,1},
// r in 0..m-1, with (0,r) < (1,r') iff r < r'.
Poset incidence_bipartite(int m);

// Minimal vertex whose up-set is inclusion-maximal among minimal elements;
// its up-set is everything outside Min(P). Lowest index wins ties.
int choose_anchor(const Poset& p);

struct QSpec {
  std::vector<Poset> blocks;   // prime interval orders, each >= 4 vertices
  std::vector<int> anchors;    // one per block; empty means auto-select
};

// Glues the blocks into a prime interval order: linear sum of the blocks plus
// fresh vertices y_i with x_i < y_i < x_{i+1}, transitively closed. The
// antichain chain of the result is the concatenation of the blocks' chains;
// all three of these facts are verified on the output.
Poset q_construction(const QSpec& spec);

// Finite prefix of the rank-alpha prime interval order family: leaves become
// semiorder prefixes, sum terms allocate the budget over blocks and glue via
// the Q-construction. A sum term whose budget cannot fit two 4-vertex blocks
// plus glue falls back to its first summand.
Poset p_alpha_prefix(const ChainTerm& term, int budget);

// Antichain-chain length p_alpha_prefix will produce, computed symbolically
// from the allocation rule alone.
int predicted_am_length(const ChainTerm& term, int budget);

}  // namespace iolab
