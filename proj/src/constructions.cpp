#include "iolab/constructions.hpp"

#include <algorithm>
#include <set>

#include "iolab/interval.hpp"
#include "iolab/modular.hpp"

namespace iolab {

Poset semiorder(int n) {
  if (n < 1) throw SpecError("semiorder needs at least one vertex");
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) lt[static_cast<size_t>(i) * n + j] = 1;
  Poset p = Poset::from_matrix(n, std::move(lt));
  // Incomparability graph must be exactly the path 0-1-...-(n-1).
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.incomparable(i, j) != (j - i == 1))
        throw ContractError("semiorder incomparability graph is not a path");
  return p;
}

Poset incidence_bipartite(int m) {
  if (m < 1) throw SpecError("incidence bipartite poset needs m >= 1");
  int n = 2 * m;
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int r = 0; r < m; ++r) {
    names[r] = "(0," + std::to_string(r) + ")";
    names[m + r] = "(1," + std::to_string(r) + ")";
  }
  for (int r = 0; r < m; ++r)
    for (int s = r + 1; s < m; ++s) lt[static_cast<size_t>(r) * n + (m + s)] = 1;
  Poset p = Poset::from_matrix(n, std::move(lt), std::move(names));
  if (!is_interval_order(p)) throw ContractError("B(C_m) is not an interval order");
  return p;
}

int choose_anchor(const Poset& p) {
  if (auto w = find_two_plus_two(p)) throw NotIntervalOrderError(w->a, w->b, w->c, w->d);
  auto mins = min_elements(p);
  int best = -1;
  std::vector<int> best_up;
  for (int x : mins) {
    auto ux = up_set(p, x);
    if (best < 0 || (ux.size() > best_up.size() &&
                     std::includes(ux.begin(), ux.end(), best_up.begin(), best_up.end()))) {
      best = x;
      best_up = std::move(ux);
    } else if (!std::includes(best_up.begin(), best_up.end(), ux.begin(), ux.end())) {
      throw ContractError("up-sets of minimal elements do not form a chain");
    }
  }
  // The winner must see everything outside Min(P).
  std::vector<int> expected;
  for (int v = 0; v < p.size(); ++v)
    if (std::find(mins.begin(), mins.end(), v) == mins.end()) expected.push_back(v);
  if (best_up != expected)
    throw ContractError("anchor up-set is not the complement of the minimal level");
  return best;
}

Poset q_construction(const QSpec& spec) {
  int kappa = static_cast<int>(spec.blocks.size());
  if (kappa < 2) throw SpecError("q-construction needs at least two blocks");
  std::vector<int> anchors = spec.anchors;
  for (int i = 0; i < kappa; ++i) {
    const Poset& b = spec.blocks[i];
    if (b.size() < 4) throw SpecError("block " + std::to_string(i) + " has fewer than 4 vertices");
    if (!is_interval_order(b))
      throw SpecError("block " + std::to_string(i) + " is not an interval order");
    if (!is_prime(b)) throw SpecError("block " + std::to_string(i) + " is not prime");
  }
  if (anchors.empty()) {
    for (const Poset& b : spec.blocks) anchors.push_back(choose_anchor(b));
  } else if (static_cast<int>(anchors.size()) != kappa) {
    throw SpecError("anchor count does not match block count");
  } else {
    for (int i = 0; i < kappa; ++i) {
      const Poset& b = spec.blocks[i];
      int x = anchors[i];
      if (x < 0 || x >= b.size()) throw SpecError("anchor out of range");
      if (!down_set(b, x).empty()) throw SpecError("anchor is not minimal");
      auto mins = min_elements(b);
      std::vector<int> expected;
      for (int v = 0; v < b.size(); ++v)
        if (std::find(mins.begin(), mins.end(), v) == mins.end()) expected.push_back(v);
      if (up_set(b, x) != expected) throw SpecError("anchor up-set is not V \\ Min");
    }
  }

  // Layout: block 0, y0, block 1, y1, ..., last block (no trailing glue).
  std::vector<int> offset(kappa), glue(kappa - 1);
  std::vector<std::string> names;
  int n = 0;
  for (int i = 0; i < kappa; ++i) {
    offset[i] = n;
    n += spec.blocks[i].size();
    for (int v = 0; v < spec.blocks[i].size(); ++v)
      names.push_back("b" + std::to_string(i) + "." + spec.blocks[i].name_of(v));
    if (i + 1 < kappa) {
      glue[i] = n++;
      names.push_back("y" + std::to_string(i));
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < kappa; ++i) {
    const Poset& b = spec.blocks[i];
    for (int a = 0; a < b.size(); ++a)
      for (int c = 0; c < b.size(); ++c)
        if (b.less(a, c)) pairs.emplace_back(offset[i] + a, offset[i] + c);
    if (i + 1 < kappa)
      for (int a = 0; a < b.size(); ++a)
        for (int c = 0; c < spec.blocks[i + 1].size(); ++c)
          pairs.emplace_back(offset[i] + a, offset[i + 1] + c);
  }
  // y_i sits above the anchor of block i, below every non-minimal vertex of
  // block i+1, and incomparable to all of Min(P_{i+1}). The two tempting
  // variants both fail: gluing below the next anchor only leaves the extra
  // maximal antichain {y_i} u (Min \ anchor) after transitive closure, and
  // gluing below the whole block makes block i u {y_i} a module.
  for (int i = 0; i + 1 < kappa; ++i) {
    pairs.emplace_back(offset[i] + anchors[i], glue[i]);
    const Poset& next = spec.blocks[i + 1];
    auto mins = min_elements(next);
    for (int c = 0; c < next.size(); ++c)
      if (std::find(mins.begin(), mins.end(), c) == mins.end())
        pairs.emplace_back(glue[i], offset[i + 1] + c);
    // Consecutive glue vertices must compare, else {y_i, y_{i+1}} extends
    // Min(P_{i+1}) \ {anchor} into an extra maximal antichain.
    if (i + 2 < kappa) pairs.emplace_back(glue[i], glue[i + 1]);
  }
  Poset q = Poset::from_pairs(n, pairs, std::move(names));

  // Postconditions, each verified rather than trusted.
  if (!is_interval_order(q)) throw ContractError("q-construction output is not an interval order");
  if (!is_prime(q)) throw ContractError("q-construction output is not prime");
  AMChain qc = am_chain(q);
  int pos = 0;
  for (int i = 0; i < kappa; ++i) {
    AMChain bc = am_chain(spec.blocks[i]);
    for (int t = 0; t < bc.length(); ++t, ++pos) {
      if (pos >= qc.length()) throw ContractError("antichain chain shorter than the block sum");
      std::set<int> expected;
      for (int v : bc.antichains[t]) expected.insert(offset[i] + v);
      // y_i joins the non-initial antichains of block i; y_{i-1} joins the
      // initial antichain Min(P_i) of block i, the only block-i antichain it
      // stays incomparable to.
      if (t > 0 && i + 1 < kappa) expected.insert(glue[i]);
      if (t == 0 && i > 0) expected.insert(glue[i - 1]);
      std::set<int> got(qc.antichains[pos].begin(), qc.antichains[pos].end());
      if (got != expected)
        throw ContractError("antichain chain does not concatenate blockwise");
    }
  }
  if (pos != qc.length()) throw ContractError("antichain chain longer than the block sum");
  return q;
}

namespace {

// Even split of (budget - glue) over `count` blocks, remainder to the front.
std::vector<int> sum_shares(int count, int budget) {
  int avail = budget - (count - 1);
  std::vector<int> shares(count, avail / count);
  for (int i = 0; i < avail % count; ++i) ++shares[i];
  return shares;
}

ChainTerm first_summand(const ChainTerm& t) {
  return t.kind() == ChainTerm::Kind::FiniteSum ? t.parts()[0] : t.body(0);
}

// Blocks a sum term materializes at this budget; empty when the term is a
// leaf or must degrade to its first summand.
std::vector<std::pair<ChainTerm, int>> plan_blocks(const ChainTerm& t, int budget) {
  std::vector<std::pair<ChainTerm, int>> out;
  if (t.kind() == ChainTerm::Kind::FiniteSum) {
    int kappa = static_cast<int>(t.parts().size());
    if (budget < 5 * kappa - 1)
      throw BudgetError("finite sum of " + std::to_string(kappa) +
                        " terms needs budget >= " + std::to_string(5 * kappa - 1));
    auto shares = sum_shares(kappa, budget);
    for (int i = 0; i < kappa; ++i) out.emplace_back(t.parts()[i], shares[i]);
  } else {
    int b = std::min((budget + 1) / 5, budget);  // max k with 5k-1 <= budget
    if (b < 2) return out;                       // degrade
    auto shares = sum_shares(b, budget);
    for (int i = 0; i < b; ++i) out.emplace_back(t.body(i), shares[i]);
  }
  return out;
}

Poset materialize(const ChainTerm& t, int budget) {
  switch (t.kind()) {
    case ChainTerm::Kind::Omega:
      return semiorder(budget);
    case ChainTerm::Kind::FiniteChain:
      // Finite(k) targets I_{k+1}; bumped to 4 vertices so the result stays a
      // usable Q-construction block.
      return semiorder(std::max(4, std::min(t.finite_size() + 1, budget)));
    default: {
      auto blocks = plan_blocks(t, budget);
      if (blocks.empty()) return materialize(first_summand(t), budget);
      QSpec spec;
      for (auto& [term, share] : blocks) spec.blocks.push_back(materialize(term, share));
      return q_construction(spec);
    }
  }
}

int predicted(const ChainTerm& t, int budget) {
  switch (t.kind()) {
    case ChainTerm::Kind::Omega:
      return budget - 1;
    case ChainTerm::Kind::FiniteChain:
      return std::max(4, std::min(t.finite_size() + 1, budget)) - 1;
    default: {
      auto blocks = plan_blocks(t, budget);
      if (blocks.empty()) return predicted(first_summand(t), budget);
      int total = 0;
      for (auto& [term, share] : blocks) total += predicted(term, share);
      return total;
    }
  }
}

}  // namespace

int predicted_am_length(const ChainTerm& term, int budget) {
  if (budget < 4) throw BudgetError("budget must be at least 4");
  return predicted(term, budget);
}

Poset p_alpha_prefix(const ChainTerm& term, int budget) {
  if (budget < 4) throw BudgetError("budget must be at least 4");
  Poset p = materialize(term, budget);
  if (!is_interval_order(p)) throw ContractError("prefix is not an interval order");
  if (width(p) > 5) throw ContractError("prefix width exceeds 2*(leaf width)+1");
  if (am_chain(p).length() != predicted(term, budget))
    throw ContractError("antichain chain length differs from the allocation prediction");
  return p;
}

}  // namespace iolab
