#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iolab/poset.hpp"

namespace iolab {

// Witness quadruple a<b, c<d with all cross pairs incomparable.
struct TwoPlusTwo {
  int a, b, c, d;
};

// The maximal antichains of an interval order, totally ordered, with the
// contiguous membership range of every vertex.
struct AMChain {
  std::vector<std::vector<int>> antichains;
  std::vector<std::pair<int, int>> membership;  // per vertex: [lo, hi]
  int length() const { return static_cast<int>(antichains.size()); }
};

struct IntervalRepresentation {
  int chain_length = 0;
  std::vector<std::pair<int, int>> intervals;  // per vertex: [lo, hi]
};

struct StandardRepresentation {
  IntervalRepresentation rep;
  std::vector<std::pair<int, int>> doubly_critical;
  bool injective = false;
  // Discriminating-family report: coverage, separation, finite intersection.
  bool covers = false;
  bool separates = false;
  bool finite_intersection = false;
};

struct LexSumSpec {
  Poset index;
  std::vector<Poset> components;  // one nonempty poset per index vertex
};

// 2+2-freeness, decided via the up-set chain test and cross-checked against
// a direct scan; returns the witness on failure.
std::optional<TwoPlusTwo> find_two_plus_two(const Poset& p);
bool is_interval_order(const Poset& p);

AMChain am_chain(const Poset& p);

StandardRepresentation standard_representation(const Poset& p);
std::vector<std::pair<int, int>> doubly_critical_pairs(const Poset& p);

IntervalRepresentation downset_interval_representation(const Poset& p);

std::vector<int> singular_vertices(const Poset& p);

Poset lex_sum(const LexSumSpec& spec);

struct LexSumVerdict {
  bool valid;
  std::string reason;
};
LexSumVerdict is_valid_interval_lex_sum(const LexSumSpec& spec);

// x<y iff hi(x)<lo(y), over all pairs.
bool representation_contract_holds(const Poset& p, const IntervalRepresentation& r);

}  // namespace iolab
