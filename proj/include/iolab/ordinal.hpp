#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iolab/errors.hpp"

namespace iolab {

// Ordinal in Cantor normal form: a strictly decreasing sum of w-powers with
// positive finite coefficients. Empty term list is 0.
class Ordinal {
 public:
  struct Term;
  std::vector<Term> terms;

  static Ordinal zero() { return {}; }
  static Ordinal from_nat(long long k);
  static Ordinal omega();
  static Ordinal omega_pow(Ordinal exp, long long coeff = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_nat() const;
  // Successor ordinals have a finite part; limits do not.
  bool is_limit() const;
  bool is_successor() const { return !is_zero() && !is_limit(); }

  Ordinal plus(const Ordinal& b) const;  // ordinal addition (left absorption)
  Ordinal succ() const { return plus(from_nat(1)); }
  Ordinal pred() const;                  // of a successor
};

struct Ordinal::Term {
  Ordinal exp;
  long long coeff;
  bool operator==(const Term&) const = default;
};

std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b);
inline bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms == b.terms; }

// Grammar: expr := term ('+' term)*; term := 'w' ('^' base)? ('*' nat)? | nat;
// base := '(' expr ')' | term. Sums are normalized by ordinal addition.
Ordinal ord_parse(const std::string& text);
std::string ord_show(const Ordinal& o);

// Standard fundamental sequence of a limit ordinal; strictly increasing in i
// with supremum lambda.
Ordinal fundamental_sequence(const Ordinal& lambda, int i);

// Well-founded chain term: a finite chain, omega, a finite sum, or an
// omega-indexed sum (constant body or an index rule).
class ChainTerm {
 public:
  enum class Kind { FiniteChain, Omega, FiniteSum, OmegaSum };

  static ChainTerm finite(int k);
  static ChainTerm omega();
  static ChainTerm finite_sum(std::vector<ChainTerm> parts);
  static ChainTerm omega_sum(ChainTerm body);
  // Rule-based omega sum; `declared_rank` is the intended supremum of the
  // child ranks + 1 and is sample-verified by rank().
  static ChainTerm omega_sum(std::function<ChainTerm(int)> rule, Ordinal declared_rank);

  Kind kind() const { return impl_->kind; }
  int finite_size() const { return impl_->k; }
  const std::vector<ChainTerm>& parts() const { return impl_->parts; }
  bool has_constant_body() const { return impl_->constant_body; }
  ChainTerm body(int i) const;  // i-th summand of an omega sum

  const std::optional<Ordinal>& declared_rank() const { return impl_->declared; }

 private:
  struct Impl {
    Kind kind;
    int k = 0;
    std::vector<ChainTerm> parts;
    std::function<ChainTerm(int)> rule;
    bool constant_body = false;
    std::optional<Ordinal> declared;
  };
  explicit ChainTerm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Hausdorff-rank convention for chain terms (leaves are rank 0; a sum of
// non-leaf parts is one above the largest part; rule-based omega sums carry
// a declared rank that is verified on sampled summands).
Ordinal rank(const ChainTerm& t);

// A chain term of the requested rank: Omega at rank 0, an omega sum of the
// predecessor term at successors, a fundamental-sequence rule at limits.
ChainTerm canonical_term(const Ordinal& alpha);

}  // namespace iolab
