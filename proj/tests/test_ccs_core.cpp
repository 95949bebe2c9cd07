#include <gtest/gtest.h>

#include <random>

#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/ccs_term.hpp"
#include "bisimkit/enumerate.hpp"

using namespace bisimkit;

namespace {

Term P(const char* s) { return parse_ccs(s); }
Term Pp(const char* s) { return parse_ccs_plus(s); }
Term a0() { return Term::prefix(Prefix::action("a"_n), Term::nil()); }
Term b0() { return Term::prefix(Prefix::action("b"_n), Term::nil()); }
Term c0() { return Term::prefix(Prefix::action("c"_n), Term::nil()); }

// Rebuilds t as a raw (non-canonical) tree with shuffled, reassociated
// operands and scattered Nil padding.
Term scramble(const Term& t, std::mt19937& rng, bool summand = false) {
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  switch (t.kind()) {
    case TermKind::Prefix: {
      Term k = Term::prefix(t.head(), scramble(t.continuation(), rng));
      return !summand && coin() ? Term::raw_par(k, Term::nil()) : k;
    }
    case TermKind::Par:
    case TermKind::Sum: {
      auto kids = t.children();
      std::shuffle(kids.begin(), kids.end(), rng);
      const bool in_sum = t.kind() == TermKind::Sum;
      Term acc = scramble(kids[0], rng, in_sum);
      for (std::size_t i = 1; i < kids.size(); ++i) {
        Term k = scramble(kids[i], rng, in_sum);
        if (t.kind() == TermKind::Par)
          acc = coin() ? Term::raw_par(acc, k) : Term::raw_par(k, acc);
        else
          acc = coin() ? Term::raw_sum(acc, k) : Term::raw_sum(k, acc);
      }
      return acc;
    }
    default:
      return t;
  }
}

}  // namespace

TEST(Canonicalize, DropsNilComponent) {
  EXPECT_EQ(canonicalize(Term::raw_par(a0(), Term::nil())), a0());
}

TEST(Canonicalize, FlattensNestedPar) {
  Term t = canonicalize(Term::raw_par(Term::raw_par(a0(), b0()), c0()));
  ASSERT_EQ(t.kind(), TermKind::Par);
  EXPECT_EQ(t.children().size(), 3u);
  EXPECT_EQ(t, Term::par({a0(), b0(), c0()}));
}

TEST(Canonicalize, NilIsFixed) { EXPECT_EQ(canonicalize(Term::nil()), Term::nil()); }

TEST(Canonicalize, SumLaws) {
  EXPECT_EQ(Pp("a.0 + a.0"), a0());
  EXPECT_EQ(Pp("a.0 + b.0"), Pp("b.0 + a.0"));
  EXPECT_NE(Pp("a.0 + b.0"), a0());
  EXPECT_EQ(Pp("a + (b + a) + 0"), Pp("b + a"));
}

TEST(Canonicalize, UnguardedSummandRejected) {
  EXPECT_THROW(Term::sum(Term::par(a0(), b0()), c0()), std::invalid_argument);
  EXPECT_THROW(Term::raw_sum(Term::var("X"_n), a0()), std::invalid_argument);
}

TEST(Canonicalize, IdempotentAndCongruenceSound) {
  std::mt19937 rng(7);
  TermEnumerator e(both_polarities({"a"_n, "b"_n}), true);
  for (const auto& t : e.up_to(4)) {
    EXPECT_EQ(canonicalize(canonicalize(t)), canonicalize(t));
    for (int i = 0; i < 3; ++i) {
      Term u = scramble(t, rng);
      EXPECT_EQ(canonicalize(u), t) << print_term(t);
      EXPECT_EQ(size(u), size(t));
    }
  }
}

TEST(Size, Examples) {
  EXPECT_EQ(size(Term::nil()), 0u);
  EXPECT_EQ(size(P("a.('b.0 | a.0)")), 3u);
  EXPECT_EQ(size(P("a.0 | a.0")), 2u);
}

TEST(Size, OpenTermRejected) {
  try {
    (void)size(P("a.X"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "size undefined on open terms");
  }
}

TEST(Contribution, Examples) {
  EXPECT_EQ(contribution(P("a.b.0 | 'b.0"), Prefix::action("a"_n)), 2u);
  EXPECT_EQ(contribution(P("'b.0"), Prefix::action("a"_n)), 0u);
  EXPECT_EQ(contribution(P("a.0 | a.'b.0"), Prefix::action("a"_n)), 3u);
}

TEST(Contribution, BoundedBySize) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  auto alphabet = both_polarities({"a"_n, "b"_n});
  for (const auto& t : e.up_to(4))
    for (const auto& eta : alphabet) EXPECT_LE(contribution(t, eta), size(t));
}

TEST(Substitution, Examples) {
  EXPECT_EQ(apply_substitution(P("a.0 | 'b.0"), {{"a"_n, "p"_n}, {"b"_n, "p"_n}}), P("p.0 | 'p.0"));
  EXPECT_EQ(apply_substitution(P("a.b | c"), {}), P("a.b | c"));
  EXPECT_EQ(apply_substitution(P("'a.b.0"), {{"a"_n, "c"_n}}), P("'c.b.0"));
}

TEST(Substitution, PreservesSize) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  Substitution sigma{{"a"_n, "b"_n}};
  for (const auto& t : e.up_to(4)) EXPECT_EQ(size(apply_substitution(t, sigma)), size(t));
}

TEST(Substitution, Identity) {
  Substitution s{{"a"_n, "a"_n}};
  EXPECT_TRUE(s.is_identity());
  EXPECT_EQ(s("a"_n), "a"_n);
  EXPECT_EQ(s("z"_n), "z"_n);
}

TEST(Instantiate, Examples) {
  EXPECT_EQ(instantiate(P("a.(X | a.X)"), {{"X"_n, c0()}}), P("a.(c.0 | a.c.0)"));
  EXPECT_EQ(instantiate(P("X"), {{"X"_n, Term::nil()}}), Term::nil());
  EXPECT_EQ(instantiate(P("X | Y"), {{"X"_n, a0()}, {"Y"_n, a0()}}), P("a.0 | a.0"));
}

TEST(Instantiate, MissingVariable) {
  EXPECT_THROW(instantiate(P("X | Y"), {{"X"_n, a0()}}, true), std::invalid_argument);
  EXPECT_FALSE(instantiate(P("X | Y"), {{"X"_n, a0()}}).is_ground());
}

TEST(Prefix, ComplementInvolution) {
  for (const auto& eta : both_polarities({"a"_n, "b"_n})) {
    EXPECT_EQ(eta.complement().complement(), eta);
    EXPECT_NE(eta.complement(), eta);
  }
}

TEST(Names, InterningIsInjective) {
  EXPECT_EQ(Name::intern("abc"), Name::intern(std::string("ab") + "c"));
  EXPECT_NE(Name::intern("abc"), Name::intern("abd"));
  EXPECT_NE(Name::fresh(), Name::fresh());
  EXPECT_LT("zzz"_n, Name::fresh());
}

TEST(Order, TagOrder) {
  EXPECT_LT(Term::nil(), P("X"));
  EXPECT_LT(P("X"), a0());
  EXPECT_LT(a0(), Pp("a + b"));
  EXPECT_LT(Pp("a + b"), P("a | b"));
  EXPECT_LT(P("a"), P("'a"));
  EXPECT_LT(P("'a"), P("b"));
}

// Counts frozen from an independent Python enumeration (multisets of
// prefixed terms over four prefixes).
TEST(Enumerate, MicroCcsCounts) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  const std::size_t expected[] = {1, 4, 26, 188, 1499, 12628};
  for (std::uint32_t n = 0; n <= 5; ++n) {
    const auto& level = e.of_size(n);
    EXPECT_EQ(level.size(), expected[n]) << n;
    EXPECT_TRUE(std::is_sorted(level.begin(), level.end()));
    EXPECT_EQ(std::adjacent_find(level.begin(), level.end()), level.end());
    for (const auto& t : level) EXPECT_EQ(size(t), n);
  }
}

TEST(Enumerate, RandomTermsHaveRequestedSize) {
  std::mt19937 rng(1);
  auto alphabet = both_polarities({"a"_n, "b"_n});
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::uint32_t>(i % 7);
    EXPECT_EQ(random_ccs(rng, n, alphabet).prefix_count(), n);
  }
}

TEST(Syntax, ParseExamples) {
  EXPECT_EQ(P("a.0 | 'b.0"), Term::par(a0(), Term::prefix(Prefix::coaction("b"_n), Term::nil())));
  Term s = Pp("a.'b.0 + 'b.a.0");
  ASSERT_EQ(s.kind(), TermKind::Sum);
  EXPECT_EQ(s.children().size(), 2u);
  EXPECT_EQ(P("a"), a0());
  EXPECT_EQ(P("  ( a . 0 )|( 0 ) "), a0());
}

TEST(Syntax, PrintExamples) {
  EXPECT_EQ(print_term(P("a.0 | a.0")), "a.0 | a.0");
  EXPECT_EQ(print_term(Term::nil()), "0");
  EXPECT_EQ(print_term(Pp("b.0 + a.0")), "a.0 + b.0");
  EXPECT_EQ(print_term(P("a.(b | 'c.X)")), "a.(b.0 | 'c.X)");
}

TEST(Syntax, Errors) {
  try {
    (void)parse_ccs_plus("a.0 + (b.0 | c.0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.message(), "summands must be prefixed");
    EXPECT_EQ(e.span().start, 6u);
  }
  EXPECT_THROW(parse_ccs("a.0 + b.0"), ParseError);
  EXPECT_THROW(parse_ccs("a.0 |"), ParseError);
  EXPECT_THROW(parse_ccs("a.$"), ParseError);
  EXPECT_THROW(parse_ccs("(a.0"), ParseError);
  EXPECT_THROW(parse_ccs_plus("X + a"), ParseError);
}

TEST(Syntax, RoundTrip) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}), true);
  for (const auto& t : e.up_to(4)) EXPECT_EQ(parse_ccs_plus(print_term(t)), t) << print_term(t);
  std::mt19937 rng(3);
  auto alphabet = both_polarities({"a"_n, "b"_n});
  for (int i = 0; i < 300; ++i) {
    Term t = random_ccs(rng, 5, alphabet, {"X"_n, "Y"_n});
    EXPECT_EQ(parse_ccs(print_term(t)), t) << print_term(t);
  }
}
