#include <gtest/gtest.h>

#include <random>

#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/normalizer.hpp"

using namespace bisimkit;

namespace {
Term P(const char* s) { return parse_ccs(s); }
}  // namespace

TEST(RewriteStep, Examples) {
  EXPECT_EQ(rewrite_step(P("a.a.0")), P("a.0 | a.0"));
  EXPECT_EQ(rewrite_step(P("a.b.0")), std::nullopt);
  EXPECT_EQ(rewrite_step(P("a.(b.0 | a.b.0)")), P("a.b.0 | a.b.0"));
}

TEST(RewriteStep, MultiComponentBody) {
  // P = b | c has two components; the redex is a.(b | c | a.(b | c)).
  EXPECT_EQ(rewrite_step(P("a.(b | c | a.(b | c))")), P("a.(b | c) | a.(b | c)"));
  EXPECT_EQ(rewrite_step(P("a.(b | c | a.(b | c) | a.(b | c))")), power(P("a.(b | c)"), 3));
  // the inner redex a.(b | a.b) is contracted first
  EXPECT_EQ(rewrite_step(P("a.(c | a.(b | a.b))")), P("a.(c | a.b | a.b)"));
}

TEST(RewriteStep, SeveralCopies) {
  EXPECT_EQ(rewrite_step(P("a.(b | a.b | a.b)")), P("a.b | a.b | a.b"));
  EXPECT_EQ(rewrite_step(P("a.(a | a | a)")), P("a | a | a | a"));
  EXPECT_EQ(rewrite_step(P("a.(b | a.b | a.b | c)")), std::nullopt);
}

TEST(Normalize, Examples) {
  auto nf = normalize(P("a.a.a.0"));
  EXPECT_EQ(nf.term, P("a.0 | a.0 | a.0"));
  EXPECT_EQ(nf.steps, 2u);
  EXPECT_EQ(normalize(P("a.b.0")).term, P("a.b.0"));
  EXPECT_EQ(normalize(P("a.b.0")).steps, 0u);
  EXPECT_EQ(normalize(P("a.('b.0 | a.'b.0)")).term, P("a.'b.0 | a.'b.0"));
  EXPECT_TRUE(bisimilar_oracle(P("a.a.a.0"), power(P("a"), 3)));
}

TEST(Normalize, SumRejected) { EXPECT_THROW(normalize(parse_ccs_plus("a + b")), std::invalid_argument); }

TEST(DecideBisim, Examples) {
  EXPECT_TRUE(decide_bisim(P("a.a.0"), P("a.0 | a.0")));
  EXPECT_FALSE(decide_bisim(P("a.0 | 'b.0"), P("a.'b.0")));
  EXPECT_FALSE(bisimilar_oracle(P("a.0 | 'b.0"), P("a.'b.0")));
  EXPECT_TRUE(decide_bisim(Term::nil(), Term::nil()));
  EXPECT_THROW(decide_bisim(P("X"), P("X")), std::invalid_argument);
}

TEST(Primes, Examples) {
  EXPECT_EQ(prime_decompose(P("a.0 | a.0")).components, (std::vector<Term>{P("a"), P("a")}));
  EXPECT_EQ(prime_decompose(P("a.a.0")).components, (std::vector<Term>{P("a"), P("a")}));
  EXPECT_TRUE(prime_decompose(Term::nil()).components.empty());
  EXPECT_TRUE(is_prime(P("a.b.0")));
  EXPECT_FALSE(is_prime(P("a.0 | b.0")));
  EXPECT_FALSE(is_prime(P("a.a.0")));
}

TEST(Primes, BruteForceExamples) {
  EXPECT_TRUE(is_prime_bruteforce(P("a.b.0")));
  EXPECT_FALSE(is_prime_bruteforce(P("a.0 | a.0")));
  EXPECT_FALSE(is_prime_bruteforce(Term::nil()));
  try {
    (void)is_prime_bruteforce(P("a.a.a.a.a.a"), 5);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "brute-force bound exceeded");
  }
}

TEST(Primes, AgreeWithBruteForce) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  for (const auto& t : e.up_to(3)) EXPECT_EQ(is_prime(t), is_prime_bruteforce(t)) << print_term(t);
}

TEST(Normalize, SoundAgainstOracle) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  for (const auto& t : e.up_to(4)) {
    auto nf = normalize(t);
    EXPECT_TRUE(bisimilar_oracle(t, nf.term)) << print_term(t);
    EXPECT_LE(nf.steps, weight(t));
    EXPECT_TRUE(is_normal(nf.term));
  }
}

TEST(Normalize, WeightDecreases) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  for (const auto& t : e.up_to(4))
    for (const auto& u : all_rewrite_steps(t)) EXPECT_LT(weight(u), weight(t));
}

TEST(Normalize, PrefixedNormalFormsArePrime) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  for (const auto& t : e.up_to(4))
    for (const auto& c : prime_decompose(t).components) EXPECT_EQ(c.kind(), TermKind::Prefix);
}

TEST(Open, Examples) {
  EXPECT_EQ(normalize_open(P("a.(X | a.X)")), P("a.X | a.X"));
  EXPECT_EQ(normalize_open(P("X")), P("X"));
  Instantiation c{{"X"_n, P("c")}};
  Term m = P("a.(X | a.X)");
  EXPECT_EQ(normalize(instantiate(m, c)).term, P("a.c.0 | a.c.0"));
  EXPECT_EQ(instantiate(normalize_open(m), c), P("a.c.0 | a.c.0"));
}

TEST(Open, VariableNeverHeadsRedex) {
  EXPECT_EQ(normalize_open(P("a.(X | X)")), P("a.(X | X)"));
  EXPECT_EQ(normalize_open(P("a.a.X")), P("a.a.X"));
}

TEST(Extensional, Examples) {
  EXPECT_TRUE(decide_extensional(P("a.(X | a.X)"), P("a.X | a.X")));
  EXPECT_TRUE(decide_extensional(P("X | Y"), P("Y | X")));
  EXPECT_FALSE(decide_extensional(P("a.X"), P("X")));
  EXPECT_TRUE(decide_extensional_by_normal_forms(P("a.(X | a.X)"), P("a.X | a.X")));
  EXPECT_FALSE(decide_extensional_by_normal_forms(P("a.X"), P("X")));
}

TEST(Extensional, RoutesAgree) {
  std::mt19937 rng(11);
  auto alphabet = both_polarities({"a"_n});
  for (int i = 0; i < 300; ++i) {
    Term m = random_ccs(rng, 3, alphabet, {"X"_n, "Y"_n});
    Term n = random_ccs(rng, 3, alphabet, {"X"_n, "Y"_n});
    EXPECT_EQ(decide_extensional(m, n), decide_extensional_by_normal_forms(m, n)) << print_term(m) << " vs " << print_term(n);
    EXPECT_TRUE(decide_extensional(m, normalize_open(m)));
  }
}

TEST(PowerWitnesses, UpToTen) {
  Term a = P("a");
  for (std::size_t n = 1; n <= 10; ++n) {
    Term lhs = Term::prefix(Prefix::action("a"_n), power(a, n));
    EXPECT_TRUE(decide_bisim(lhs, power(a, n + 1)));
    EXPECT_EQ(prime_decompose(lhs).components, std::vector<Term>(n + 1, a));
  }
}
