#include "iolab/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace iolab::oracle {

namespace {

using Mask = std::uint32_t;

void check_guard(int n, const char* what) {
  if (n > subset_guard())
    throw SizeGuardError(std::string(what) + " above guard (n=" + std::to_string(n) + ")");
}

std::vector<int> mask_to_set(Mask m) {
  std::vector<int> s;
  while (m) {
    s.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  return s;
}

// Module test straight from the definition, independent of the fast path.
bool mask_is_module(const Rel& r, Mask m, int n) {
  for (int x = 0; x < n; ++x) {
    if (m & (Mask{1} << x)) continue;
    int prev_out = -1, prev_in = -1;
    for (int a = 0; a < n; ++a) {
      if (!(m & (Mask{1} << a))) continue;
      int out = r(x, a) ? 1 : 0, in = r(a, x) ? 1 : 0;
      if (prev_out >= 0 && (out != prev_out || in != prev_in)) return false;
      prev_out = out;
      prev_in = in;
    }
  }
  return true;
}

std::vector<Mask> module_masks(const Rel& r) {
  check_guard(r.n, "module enumeration");
  std::vector<Mask> out;
  Mask end = Mask{1} << r.n;
  for (Mask m = 0; m < end; ++m)
    if (mask_is_module(r, m, r.n)) out.push_back(m);
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_modules(const Rel& r) {
  std::vector<std::vector<int>> out;
  for (Mask m : module_masks(r)) out.push_back(mask_to_set(m));
  return out;
}

std::vector<std::vector<int>> all_modules(const Poset& p) { return all_modules(p.relation()); }
std::vector<std::vector<int>> all_modules(const SimpleGraph& g) { return all_modules(g.relation()); }

std::vector<std::vector<int>> all_strong_modules(const Rel& r) {
  auto mods = module_masks(r);
  std::vector<std::vector<int>> out;
  for (Mask m : mods) {
    if (m == 0) continue;
    bool strong = true;
    for (Mask other : mods) {
      Mask both = m & other;
      if (both != 0 && both != m && both != other) {
        strong = false;
        break;
      }
    }
    if (strong) out.push_back(mask_to_set(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_strong_modules(const Poset& p) {
  return all_strong_modules(p.relation());
}
std::vector<std::vector<int>> all_strong_modules(const SimpleGraph& g) {
  return all_strong_modules(g.relation());
}

std::vector<std::vector<int>> all_maximal_antichains(const Poset& p) {
  int n = p.size();
  check_guard(n, "antichain enumeration");
  std::vector<std::vector<int>> out;
  Mask end = Mask{1} << n;
  for (Mask m = 1; m < end; ++m) {
    auto s = mask_to_set(m);
    bool anti = true;
    for (size_t i = 0; i < s.size() && anti; ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (p.comparable(s[i], s[j])) {
          anti = false;
          break;
        }
    if (!anti) continue;
    bool maximal = true;
    for (int x = 0; x < n && maximal; ++x) {
      if (m & (Mask{1} << x)) continue;
      bool free = true;
      for (int v : s)
        if (p.comparable(x, v)) {
          free = false;
          break;
        }
      if (free) maximal = false;
    }
    if (maximal) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TwoPlusTwo> find_2plus2(const Poset& p) {
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!p.less(c, d)) continue;
          if (p.incomparable(a, c) && p.incomparable(a, d) && p.incomparable(b, c) &&
              p.incomparable(b, d))
            return TwoPlusTwo{a, b, c, d};
        }
    }
  return std::nullopt;
}

void exhaustive_small_posets(int n, const std::function<void(const Poset&)>& f) {
  if (n < 0 || n > 5) throw SizeGuardError("exhaustive poset enumeration limited to n <= 5");
  // Each unordered pair is <, >, or incomparable; keep the transitive ones.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int k = static_cast<int>(pairs.size());
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::vector<char> lt(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < k; ++i) {
      int d = static_cast<int>(c % 3);
      c /= 3;
      if (d == 1) lt[static_cast<size_t>(pairs[i].first) * n + pairs[i].second] = 1;
      if (d == 2) lt[static_cast<size_t>(pairs[i].second) * n + pairs[i].first] = 1;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b) {
        if (!lt[static_cast<size_t>(a) * n + b]) continue;
        for (int d = 0; d < n; ++d)
          if (lt[static_cast<size_t>(b) * n + d] && !lt[static_cast<size_t>(a) * n + d]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    f(Poset::from_matrix(n, std::move(lt)));
  }
}

bool brute_is_prime(const Rel& r) {
  if (r.n == 1) return true;
  if (r.n == 2) return false;
  for (Mask m : module_masks(r)) {
    int c = __builtin_popcount(m);
    if (c >= 2 && c < r.n) return false;
  }
  return true;
}

bool brute_is_prime(const Poset& p) { return brute_is_prime(p.relation()); }
bool brute_is_prime(const SimpleGraph& g) { return brute_is_prime(g.relation()); }

}  // namespace iolab::oracle
