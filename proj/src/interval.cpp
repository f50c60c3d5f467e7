#include "iolab/interval.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "iolab/detail/cliques.hpp"

namespace iolab {

namespace {

bool subset_leq(const Poset& p, const std::vector<int>& a, const std::vector<int>& b) {
  // Eq-(2) comparison: every element of a is below-or-equal some element of b.
  for (int x : a) {
    bool found = false;
    for (int y : b)
      if (p.leq(x, y)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool upsets_form_chain(const Poset& p, int* bad_x = nullptr, int* bad_y = nullptr) {
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool x_sub_y = true, y_sub_x = true;
      for (int z = 0; z < n; ++z) {
        if (p.less(x, z) && !p.less(y, z)) x_sub_y = false;
        if (p.less(y, z) && !p.less(x, z)) y_sub_x = false;
      }
      if (!x_sub_y && !y_sub_x) {
        if (bad_x) *bad_x = x;
        if (bad_y) *bad_y = y;
        return false;
      }
    }
  return true;
}

std::optional<TwoPlusTwo> direct_scan(const Poset& p) {
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.incomparable(a, c) || !p.incomparable(b, c)) continue;
        for (int d = 0; d < n; ++d)
          if (p.less(c, d) && p.incomparable(a, d) && p.incomparable(b, d))
            return TwoPlusTwo{a, b, c, d};
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<TwoPlusTwo> find_two_plus_two(const Poset& p) {
  // Up-set chain test with witness recovery; must agree with the direct scan.
  std::optional<TwoPlusTwo> fast;
  int x = -1, y = -1;
  if (!upsets_form_chain(p, &x, &y)) {
    int b = -1, d = -1;
    for (int z = 0; z < p.size(); ++z) {
      if (b < 0 && p.less(x, z) && !p.less(y, z)) b = z;
      if (d < 0 && p.less(y, z) && !p.less(x, z)) d = z;
    }
    fast = TwoPlusTwo{x, b, y, d};
    if (!p.less(fast->a, fast->b) || !p.less(fast->c, fast->d) ||
        !p.incomparable(fast->a, fast->c) || !p.incomparable(fast->a, fast->d) ||
        !p.incomparable(fast->b, fast->c) || !p.incomparable(fast->b, fast->d))
      throw ContractError("invalid 2+2 witness from up-set chain test");
  }
  auto slow = direct_scan(p);
  if (fast.has_value() != slow.has_value())
    throw ContractError("2+2 characterizations disagree");
  return fast;
}

bool is_interval_order(const Poset& p) { return !find_two_plus_two(p).has_value(); }

namespace {

using detail::Mask;

std::vector<std::vector<int>> maximal_antichain_sets(const Poset& p) {
  int n = p.size();
  if (n > 64) throw SizeGuardError("antichain enumeration limited to n <= 64");
  if (n == 0) return {};
  std::vector<Mask> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.incomparable(i, j)) adj[i] |= Mask{1} << j;
  std::vector<Mask> cliques = detail::maximal_cliques(adj, n);
  std::vector<std::vector<int>> out;
  for (Mask m : cliques) {
    std::vector<int> s;
    while (m) {
      s.push_back(__builtin_ctzll(m));
      m &= m - 1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

AMChain am_chain(const Poset& p) {
  if (auto w = find_two_plus_two(p)) throw NotIntervalOrderError(w->a, w->b, w->c, w->d);
  AMChain chain;
  chain.antichains = maximal_antichain_sets(p);
  int k = chain.length();
  // Eq-(2) must totally order distinct maximal antichains; asserted, not assumed.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool le = subset_leq(p, chain.antichains[i], chain.antichains[j]);
      bool ge = subset_leq(p, chain.antichains[j], chain.antichains[i]);
      if (le && ge) throw ContractError("distinct maximal antichains compare equal");
      if (!le && !ge) throw ContractError("maximal antichains incomparable in an interval order");
    }
  std::sort(chain.antichains.begin(), chain.antichains.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return subset_leq(p, a, b) && !subset_leq(p, b, a);
            });
  chain.membership.assign(p.size(), {-1, -1});
  for (int pos = 0; pos < k; ++pos)
    for (int v : chain.antichains[pos]) {
      auto& [lo, hi] = chain.membership[v];
      if (lo < 0) lo = pos;
      else if (hi != pos - 1)
        throw ContractError("vertex membership in the antichain chain is not contiguous");
      hi = pos;
    }
  for (auto [lo, hi] : chain.membership)
    if (lo < 0) throw ContractError("vertex in no maximal antichain");
  return chain;
}

std::vector<std::pair<int, int>> doubly_critical_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      bool module = true;
      for (int z = 0; z < n && module; ++z) {
        if (z == x || z == y) continue;
        if (p.less(z, x) != p.less(z, y) || p.less(x, z) != p.less(y, z)) module = false;
      }
      if (module) out.emplace_back(x, y);
    }
  return out;
}

StandardRepresentation standard_representation(const Poset& p) {
  AMChain chain = am_chain(p);
  StandardRepresentation sr;
  sr.rep.chain_length = chain.length();
  sr.rep.intervals = chain.membership;
  sr.doubly_critical = doubly_critical_pairs(p);

  int n = p.size();
  bool distinct = true;
  for (int x = 0; x < n && distinct; ++x)
    for (int y = x + 1; y < n; ++y)
      if (chain.membership[x] == chain.membership[y]) {
        distinct = false;
        break;
      }
  sr.injective = distinct;
  if (sr.injective != sr.doubly_critical.empty())
    throw ContractError("injectivity and doubly critical pairs disagree");

  int k = chain.length();
  std::vector<char> covered(k, 0);
  for (auto [lo, hi] : chain.membership)
    for (int pos = lo; pos <= hi; ++pos) covered[pos] = 1;
  sr.covers = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });

  sr.separates = true;
  for (int i = 0; i < k && sr.separates; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool sep = false;
      for (int x : chain.antichains[i]) {
        for (int y : chain.antichains[j])
          if (chain.membership[x].second < chain.membership[y].first ||
              chain.membership[y].second < chain.membership[x].first) {
            sep = true;
            break;
          }
        if (sep) break;
      }
      if (!sep) {
        sr.separates = false;
        break;
      }
    }

  // Finite intersection, checked literally: every maximal family of pairwise
  // intersecting membership intervals must have a common position. Such
  // families are the maximal cliques of the interval graph on the membership
  // intervals.
  sr.finite_intersection = true;
  {
    int m = n;
    if (m > 0 && m <= 64) {
      std::vector<Mask> adj(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j && !(chain.membership[i].second < chain.membership[j].first ||
                          chain.membership[j].second < chain.membership[i].first))
            adj[i] |= Mask{1} << j;
      std::vector<Mask> cliques = detail::maximal_cliques(adj, m);
      for (Mask c : cliques) {
        int lo = 0, hi = sr.rep.chain_length - 1;
        for (Mask t = c; t;) {
          int v = __builtin_ctzll(t);
          t &= t - 1;
          lo = std::max(lo, chain.membership[v].first);
          hi = std::min(hi, chain.membership[v].second);
        }
        if (lo > hi) sr.finite_intersection = false;
      }
    }
  }
  return sr;
}

IntervalRepresentation downset_interval_representation(const Poset& p) {
  if (auto w = find_two_plus_two(p)) throw NotIntervalOrderError(w->a, w->b, w->c, w->d);
  int n = p.size();
  // Chain positions: the distinct down-sets ordered by inclusion.
  std::vector<std::vector<int>> downs(n);
  for (int x = 0; x < n; ++x) downs[x] = down_set(p, x);
  std::vector<std::vector<int>> chain = downs;
  std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(), chain[i].end()))
      throw ContractError("down-sets do not form an inclusion chain");
  int levels_count = static_cast<int>(chain.size());
  auto rank_of = [&](const std::vector<int>& d) {
    return static_cast<int>(std::find(chain.begin(), chain.end(), d) - chain.begin());
  };

  std::vector<std::pair<int, int>> raw(n);
  for (int x = 0; x < n; ++x) {
    int lo = rank_of(downs[x]);
    auto ups = up_set(p, x);
    int hi;
    if (ups.empty()) {
      hi = levels_count - 1;  // D(U(x)) is the whole set; one past the last down-set
    } else {
      // The least down-set among successors is their intersection.
      int best = levels_count;
      for (int y : ups) best = std::min(best, rank_of(downs[y]));
      hi = best - 1;
    }
    if (hi < lo) throw ContractError("degenerate down-set interval");
    raw[x] = {lo, hi};
  }

  // Position splitting for identical intervals (doubly critical classes):
  // members of a duplicate class get distinct start slots, ordered by index.
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[raw[x]].push_back(x);
  std::vector<int> split(levels_count, 1);
  for (auto& [key, members] : groups)
    if (members.size() > 1)
      split[key.first] = std::max(split[key.first], static_cast<int>(members.size()));
  std::vector<int> start(levels_count + 1, 0);
  for (int i = 0; i < levels_count; ++i) start[i + 1] = start[i] + split[i];

  IntervalRepresentation rep;
  rep.chain_length = start[levels_count];
  rep.intervals.assign(n, {0, 0});
  for (auto& [key, members] : groups) {
    int offset = 0;
    for (int x : members) {
      rep.intervals[x] = {start[key.first] + (members.size() > 1 ? offset++ : 0),
                          start[key.second] + split[key.second] - 1};
    }
  }
  if (!representation_contract_holds(p, rep))
    throw ContractError("down-set representation violates the interval contract");
  return rep;
}

bool representation_contract_holds(const Poset& p, const IntervalRepresentation& r) {
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (p.less(x, y) != (r.intervals[x].second < r.intervals[y].first)) return false;
    }
  return true;
}

std::vector<int> singular_vertices(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    auto inc = incomparables(p, x);
    bool antichain = true;
    for (size_t i = 0; i < inc.size() && antichain; ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        if (p.comparable(inc[i], inc[j])) {
          antichain = false;
          break;
        }
    if (antichain) out.push_back(x);
  }
  return out;
}

Poset lex_sum(const LexSumSpec& spec) {
  int k = spec.index.size();
  if (static_cast<int>(spec.components.size()) != k)
    throw SpecError("component count does not match index size");
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    if (spec.components[i].size() == 0) throw SpecError("empty component");
    offset[i + 1] = offset[i] + spec.components[i].size();
  }
  int n = offset[k];
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < k; ++i) {
    const Poset& pi = spec.components[i];
    for (int a = 0; a < pi.size(); ++a)
      for (int b = 0; b < pi.size(); ++b)
        if (pi.less(a, b)) lt[static_cast<size_t>(offset[i] + a) * n + offset[i] + b] = 1;
    for (int j = 0; j < k; ++j) {
      if (!spec.index.less(i, j)) continue;
      for (int a = offset[i]; a < offset[i + 1]; ++a)
        for (int b = offset[j]; b < offset[j + 1]; ++b) lt[static_cast<size_t>(a) * n + b] = 1;
    }
  }
  return Poset::from_matrix(n, std::move(lt));
}

namespace {

bool poset_is_antichain(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j)) return false;
  return true;
}

}  // namespace

LexSumVerdict is_valid_interval_lex_sum(const LexSumSpec& spec) {
  if (spec.index.size() < 2) throw SpecError("index must have at least two vertices");
  for (const Poset& c : spec.components)
    if (c.size() == 0) throw SpecError("empty component");
  if (!is_interval_order(spec.index)) return {false, "index is not an interval order"};
  for (size_t i = 0; i < spec.components.size(); ++i)
    if (!is_interval_order(spec.components[i]))
      return {false, "component " + std::to_string(i) + " is not an interval order"};
  if (poset_is_antichain(spec.index)) {
    int fat = 0;
    for (const Poset& c : spec.components)
      if (!poset_is_antichain(c)) ++fat;
    if (fat > 1) return {false, "antichain index with two non-antichain components"};
    return {true, "antichain index, at most one non-antichain component"};
  }
  auto sing = singular_vertices(spec.index);
  std::vector<int> fat;
  for (int i = 0; i < spec.index.size(); ++i) {
    if (poset_is_antichain(spec.components[i])) continue;
    if (std::find(sing.begin(), sing.end(), i) == sing.end())
      return {false, "non-antichain component at non-singular index " + std::to_string(i)};
    fat.push_back(i);
  }
  // Two incomparable fat indices give a 2+2 across their components. When the
  // index is prime its singulars form a chain and this never fires; for a
  // general index it must be checked.
  for (size_t a = 0; a < fat.size(); ++a)
    for (size_t b = a + 1; b < fat.size(); ++b)
      if (spec.index.incomparable(fat[a], fat[b]))
        return {false, "non-antichain components at incomparable indices " +
                           std::to_string(fat[a]) + " and " + std::to_string(fat[b])};
  return {true, "non-antichain components only at pairwise comparable singular indices"};
}

}  // namespace iolab
