#include "iolab/ordinal.hpp"

#include <cctype>

namespace iolab {

Ordinal Ordinal::from_nat(long long k) {
  if (k < 0) throw SpecError("negative ordinal");
  Ordinal o;
  if (k > 0) o.terms.push_back({zero(), k});
  return o;
}

Ordinal Ordinal::omega() {
  Ordinal o;
  o.terms.push_back({from_nat(1), 1});
  return o;
}

Ordinal Ordinal::omega_pow(Ordinal exp, long long coeff) {
  if (coeff < 1) throw SpecError("coefficient must be positive");
  Ordinal o;
  o.terms.push_back({std::move(exp), coeff});
  return o;
}

bool Ordinal::is_nat() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exp.is_zero());
}

bool Ordinal::is_limit() const {
  return !terms.empty() && !terms.back().exp.is_zero();
}

std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b) {
  size_t k = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < k; ++i) {
    auto e = ord_compare(a.terms[i].exp, b.terms[i].exp);
    if (e != std::strong_ordering::equal) return e;
    if (a.terms[i].coeff != b.terms[i].coeff)
      return a.terms[i].coeff <=> b.terms[i].coeff;
  }
  return a.terms.size() <=> b.terms.size();
}

Ordinal Ordinal::plus(const Ordinal& b) const {
  if (b.is_zero()) return *this;
  const Ordinal& lead = b.terms[0].exp;
  Ordinal out;
  // Terms of `a` with exponent below b's leading exponent are absorbed.
  for (const Term& t : terms) {
    auto c = ord_compare(t.exp, lead);
    if (c == std::strong_ordering::less) break;
    out.terms.push_back(t);
  }
  if (!out.terms.empty() && out.terms.back().exp == lead) {
    out.terms.back().coeff += b.terms[0].coeff;
    out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
  } else {
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  }
  return out;
}

Ordinal Ordinal::pred() const {
  if (!is_successor()) throw SpecError("predecessor of a non-successor ordinal");
  Ordinal out = *this;
  if (--out.terms.back().coeff == 0) out.terms.pop_back();
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, 1, static_cast<int>(pos) + 1);
  }

  long long nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return v;
  }

  Ordinal term() {
    skip_ws();
    if (pos >= s.size()) fail("expected a term");
    if (s[pos] == 'w') {
      ++pos;
      Ordinal exp = Ordinal::from_nat(1);
      if (eat('^')) {
        if (eat('(')) {
          exp = expr();
          if (!eat(')')) fail("expected ')'");
        } else if (eat('w')) {
          // Unparenthesized exponents are a bare w or a number; anything
          // larger must be wrapped so that w^w*3 keeps meaning (w^w)*3.
          exp = Ordinal::omega();
        } else {
          exp = Ordinal::from_nat(nat());
        }
      }
      long long coeff = 1;
      if (eat('*')) coeff = nat();
      if (coeff < 1) fail("coefficient must be positive");
      return Ordinal::omega_pow(std::move(exp), coeff);
    }
    return Ordinal::from_nat(nat());
  }

  Ordinal expr() {
    Ordinal o = term();
    while (eat('+')) o = o.plus(term());
    return o;
  }
};

}  // namespace

Ordinal ord_parse(const std::string& text) {
  Parser p{text};
  Ordinal o = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return o;
}

std::string ord_show(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < o.terms.size(); ++i) {
    if (i) out += "+";
    const auto& t = o.terms[i];
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exp == Ordinal::from_nat(1))) {
      std::string e = ord_show(t.exp);
      bool bare = t.exp.is_nat() || t.exp == Ordinal::omega();
      out += "^" + (bare ? e : "(" + e + ")");
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

Ordinal fundamental_sequence(const Ordinal& lambda, int i) {
  if (!lambda.is_limit()) throw NotLimitError("fundamental sequence of a non-limit ordinal");
  if (i < 0) throw SpecError("negative index");
  Ordinal head = lambda;
  Ordinal::Term last = head.terms.back();
  if (--head.terms.back().coeff == 0) head.terms.pop_back();
  // head + w^beta where beta = last.exp (> 0).
  const Ordinal& beta = last.exp;
  if (beta.is_successor()) {
    // w^{e+1}[i] = w^e * (i+1)
    return head.plus(Ordinal::omega_pow(beta.pred(), i + 1));
  }
  // beta is itself a limit: w^beta[i] = w^{beta[i]}
  return head.plus(Ordinal::omega_pow(fundamental_sequence(beta, i)));
}

ChainTerm ChainTerm::finite(int k) {
  if (k < 1) throw SpecError("finite chain must be nonempty");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::FiniteChain;
  impl->k = k;
  return ChainTerm(std::move(impl));
}

ChainTerm ChainTerm::omega() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Omega;
  return ChainTerm(std::move(impl));
}

ChainTerm ChainTerm::finite_sum(std::vector<ChainTerm> parts) {
  if (parts.size() < 2) throw SpecError("finite sum needs at least two parts");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::FiniteSum;
  impl->parts = std::move(parts);
  return ChainTerm(std::move(impl));
}

ChainTerm ChainTerm::omega_sum(ChainTerm body) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::OmegaSum;
  impl->parts.push_back(std::move(body));
  impl->constant_body = true;
  return ChainTerm(std::move(impl));
}

ChainTerm ChainTerm::omega_sum(std::function<ChainTerm(int)> rule, Ordinal declared_rank) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::OmegaSum;
  impl->rule = std::move(rule);
  impl->declared = std::move(declared_rank);
  return ChainTerm(std::move(impl));
}

ChainTerm ChainTerm::body(int i) const {
  if (impl_->kind != Kind::OmegaSum) throw SpecError("body of a non-omega-sum term");
  if (impl_->constant_body) return impl_->parts[0];
  return impl_->rule(i);
}

namespace {

// verify=false accepts declared ranks as-is. The sampling check below needs
// this: re-sampling every sampled body would branch five ways per nesting
// level and blow up exponentially on terms like the canonical w^w.
Ordinal rank_impl(const ChainTerm& t, bool verify) {
  switch (t.kind()) {
    case ChainTerm::Kind::FiniteChain:
    case ChainTerm::Kind::Omega:
      return Ordinal::zero();
    case ChainTerm::Kind::FiniteSum: {
      // A finite sum of finite chains is itself finite: rank 0. Otherwise one
      // above the largest part (documented convention; w*2 gets rank 1).
      bool all_finite = true;
      Ordinal best = Ordinal::zero();
      for (const auto& p : t.parts()) {
        if (p.kind() != ChainTerm::Kind::FiniteChain) all_finite = false;
        Ordinal r = rank_impl(p, verify);
        if (ord_compare(r, best) == std::strong_ordering::greater) best = r;
      }
      return all_finite ? Ordinal::zero() : best.succ();
    }
    case ChainTerm::Kind::OmegaSum: {
      if (t.has_constant_body()) return rank_impl(t.body(0), verify).succ();
      const auto& declared = t.declared_rank();
      if (!declared) throw ContractError("rule-based omega sum without a declared rank");
      if (verify) {
        // The declared supremum must dominate a strictly increasing sample.
        Ordinal prev = Ordinal::zero();
        for (int i = 0; i < 5; ++i) {
          Ordinal ri = rank_impl(t.body(i), false).succ();
          if (ord_compare(ri, *declared) == std::strong_ordering::greater)
            throw ContractError("sampled summand rank exceeds the declared rank");
          if (i > 0 && ord_compare(ri, prev) != std::strong_ordering::greater)
            throw ContractError("sampled summand ranks are not strictly increasing");
          prev = ri;
        }
      }
      return *declared;
    }
  }
  throw ContractError("unreachable chain-term kind");
}

}  // namespace

Ordinal rank(const ChainTerm& t) { return rank_impl(t, true); }

ChainTerm canonical_term(const Ordinal& alpha) {
  if (alpha.is_zero()) return ChainTerm::omega();
  if (alpha.is_successor()) return ChainTerm::omega_sum(canonical_term(alpha.pred()));
  Ordinal lambda = alpha;
  return ChainTerm::omega_sum(
      [lambda](int i) { return canonical_term(fundamental_sequence(lambda, i)); }, alpha);
}

}  // namespace iolab
