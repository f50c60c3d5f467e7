#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "iolab/interval.hpp"
#include "iolab/poset.hpp"

namespace iolab::oracle {

// Exponential-time reference implementations. None of these share code with
// the fast paths they validate.

// Every subset that is a module, by 2^n bitmask enumeration (includes the
// empty set and the trivial modules).
std::vector<std::vector<int>> all_modules(const Rel& r);
std::vector<std::vector<int>> all_modules(const Poset& p);
std::vector<std::vector<int>> all_modules(const SimpleGraph& g);

// Nonempty modules overlapping no other module.
std::vector<std::vector<int>> all_strong_modules(const Rel& r);
std::vector<std::vector<int>> all_strong_modules(const Poset& p);
std::vector<std::vector<int>> all_strong_modules(const SimpleGraph& g);

std::vector<std::vector<int>> all_maximal_antichains(const Poset& p);

// Quadruple scan for an induced 2+2.
std::optional<TwoPlusTwo> find_2plus2(const Poset& p);

// All labeled posets on n vertices (n <= 5), streamed to the callback.
// Counts: n=3 -> 19, n=4 -> 219, n=5 -> 4231.
void exhaustive_small_posets(int n, const std::function<void(const Poset&)>& f);

bool brute_is_prime(const Rel& r);
bool brute_is_prime(const Poset& p);
bool brute_is_prime(const SimpleGraph& g);

}  // namespace iolab::oracle
