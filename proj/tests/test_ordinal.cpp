#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iolab/ordinal.hpp"

using namespace iolab;

namespace {

Ordinal random_ordinal(std::mt19937& rng, int depth = 2) {
  Ordinal o = Ordinal::from_nat(static_cast<long long>(rng() % 4));
  int terms = static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Ordinal exp = depth > 0 ? random_ordinal(rng, depth - 1)
                            : Ordinal::from_nat(static_cast<long long>(rng() % 3));
    o = Ordinal::omega_pow(exp, 1 + static_cast<long long>(rng() % 3)).plus(o);
  }
  return o;
}

}  // namespace

TEST_CASE("parsing and normal form") {
  Ordinal o = ord_parse("w^2*3+w+5");
  REQUIRE(o.terms.size() == 3);
  CHECK(o.terms[0].exp == Ordinal::from_nat(2));
  CHECK(o.terms[0].coeff == 3);
  CHECK(o.terms[1].exp == Ordinal::from_nat(1));
  CHECK(o.terms[1].coeff == 1);
  CHECK(o.terms[2].exp == Ordinal::zero());
  CHECK(o.terms[2].coeff == 5);

  CHECK(ord_parse("1+w") == ord_parse("w"));
  CHECK(ord_show(ord_parse("1+w")) == "w");

  Ordinal nested = ord_parse("w^(w+1)");
  REQUIRE(nested.terms.size() == 1);
  CHECK(nested.terms[0].exp == ord_parse("w+1"));
  CHECK(ord_parse(ord_show(nested)) == nested);

  CHECK(ord_parse("0") == Ordinal::zero());
  CHECK_THROWS_AS(ord_parse("w^"), ParseError);
  CHECK_THROWS_AS(ord_parse("+"), ParseError);
  CHECK_THROWS_AS(ord_parse("w*0"), ParseError);
}

TEST_CASE("show/parse round trip") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    Ordinal o = random_ordinal(rng);
    CHECK(ord_parse(ord_show(o)) == o);
  }
}

TEST_CASE("comparison") {
  std::vector<std::string> ascending = {"0", "1", "w", "w*2", "w^2"};
  for (size_t i = 0; i < ascending.size(); ++i)
    for (size_t j = i + 1; j < ascending.size(); ++j)
      CHECK(ord_compare(ord_parse(ascending[i]), ord_parse(ascending[j])) ==
            std::strong_ordering::less);
  CHECK(ord_compare(ord_parse("w^w"), ord_parse("w^5*9")) == std::strong_ordering::greater);

  std::mt19937 rng(89);
  for (int trial = 0; trial < 1000; ++trial) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    if (ord_compare(a, b) != std::strong_ordering::greater &&
        ord_compare(b, c) != std::strong_ordering::greater)
      CHECK(ord_compare(a, c) != std::strong_ordering::greater);
    if (ord_compare(a, b) == std::strong_ordering::equal) CHECK(a == b);
    auto ab = ord_compare(a, b), ba = ord_compare(b, a);
    CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
    CHECK((ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal));
  }
}

TEST_CASE("successor and limit structure") {
  CHECK(Ordinal::zero().is_zero());
  CHECK(ord_parse("5").is_successor());
  CHECK(ord_parse("w").is_limit());
  CHECK(ord_parse("w+1").is_successor());
  CHECK(ord_parse("w^2+w").is_limit());
  CHECK(ord_parse("w+3").pred() == ord_parse("w+2"));
  CHECK(ord_parse("w").succ() == ord_parse("w+1"));
  CHECK(ord_parse("1").plus(ord_parse("w")) == ord_parse("w"));
  CHECK(ord_parse("w").plus(ord_parse("1")) == ord_parse("w+1"));
}

TEST_CASE("fundamental sequences") {
  for (int i = 0; i < 5; ++i)
    CHECK(fundamental_sequence(ord_parse("w"), i) == Ordinal::from_nat(i + 1));
  for (int i = 0; i < 5; ++i) {
    Ordinal expect = Ordinal::omega_pow(Ordinal::from_nat(1), i + 1);
    CHECK(fundamental_sequence(ord_parse("w^2"), i) == expect);
  }
  CHECK(fundamental_sequence(ord_parse("w^w"), 3) == ord_parse("w^4"));
  CHECK_THROWS_AS(fundamental_sequence(ord_parse("w+1"), 0), NotLimitError);

  std::mt19937 rng(97);
  int tried = 0;
  while (tried < 100) {
    Ordinal o = random_ordinal(rng, 1).plus(Ordinal::omega());
    if (!o.is_limit()) continue;
    ++tried;
    Ordinal prev = fundamental_sequence(o, 0);
    CHECK(ord_compare(prev, o) == std::strong_ordering::less);
    for (int i = 1; i <= 20; ++i) {
      Ordinal cur = fundamental_sequence(o, i);
      CHECK(ord_compare(prev, cur) == std::strong_ordering::less);
      CHECK(ord_compare(cur, o) == std::strong_ordering::less);
      prev = cur;
    }
  }
}

TEST_CASE("chain-term ranks") {
  CHECK(rank(ChainTerm::omega()) == Ordinal::zero());
  CHECK(rank(ChainTerm::finite(7)) == Ordinal::zero());
  CHECK(rank(ChainTerm::omega_sum(ChainTerm::omega())) == Ordinal::from_nat(1));
  CHECK(rank(ChainTerm::finite_sum({ChainTerm::omega(), ChainTerm::omega()})) ==
        Ordinal::from_nat(1));
  // A finite sum of finite chains is itself finite.
  CHECK(rank(ChainTerm::finite_sum({ChainTerm::finite(2), ChainTerm::finite(3)})) ==
        Ordinal::zero());
}

TEST_CASE("canonical terms realize their rank") {
  CHECK(canonical_term(Ordinal::zero()).kind() == ChainTerm::Kind::Omega);
  ChainTerm one = canonical_term(Ordinal::from_nat(1));
  CHECK(one.kind() == ChainTerm::Kind::OmegaSum);
  CHECK(one.has_constant_body());
  CHECK(one.body(0).kind() == ChainTerm::Kind::Omega);

  ChainTerm w = canonical_term(ord_parse("w"));
  CHECK(w.kind() == ChainTerm::Kind::OmegaSum);
  CHECK_FALSE(w.has_constant_body());

  for (const char* s : {"0", "1", "2", "3", "w", "w+1", "w*2", "w^2", "w^w"}) {
    Ordinal alpha = ord_parse(s);
    CHECK(rank(canonical_term(alpha)) == alpha);
  }
}
