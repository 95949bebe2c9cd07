#include <gtest/gtest.h>

#include <random>

#include "bisimkit/ccs_plus.hpp"
#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/enumerate.hpp"
#include "bisimkit/md_analysis.hpp"

using namespace bisimkit;

namespace {
Term P(const char* s) { return parse_ccs_plus(s); }
Prefix eta(const char* s) { return P(s).head(); }
}  // namespace

TEST(DTransitions, Examples) {
  auto ts = d_transitions(P("b.0 | a.c.0"));
  DTransition want{CcsAction::of(eta("a")), {P("c"), P("b")}};
  EXPECT_NE(std::find(ts.begin(), ts.end(), want), ts.end());
  EXPECT_EQ(ts.size(), 2u);

  auto sum = d_transitions(P("a.0 + 'b.0"));
  DTransition fire_a{CcsAction::of(eta("a")), {Term::nil(), Term::nil()}};
  EXPECT_NE(std::find(sum.begin(), sum.end(), fire_a), sum.end());

  auto comm = d_transitions(P("a.0 | 'a.0"));
  DTransition t{CcsAction::tau(), {Term::nil(), Term::nil()}};
  EXPECT_EQ(comm.front(), t);
}

TEST(DTransitions, LocalityOfCommunication) {
  auto ts = d_transitions(P("a.b | 'a.c | d"));
  DTransition want{CcsAction::tau(), {P("b | c"), P("d")}};
  EXPECT_NE(std::find(ts.begin(), ts.end(), want), ts.end());
}

TEST(Dsim, Examples) {
  EXPECT_FALSE(dsim(P("a.0 | 'b.0"), P("a.'b.0 + 'b.a.0")));
  EXPECT_TRUE(dsim(P("a.b + c"), P("a.b + c")));
  EXPECT_TRUE(dsim(P("a.0 | 'b.0"), P("'b.0 | a.0")));
  EXPECT_FALSE(dsim(P("a.a"), P("a | a")));
}

TEST(StrongPlus, Examples) {
  EXPECT_TRUE(strong_bisim_plus(P("a.0 | 'b.0"), P("a.'b.0 + 'b.a.0")));
  EXPECT_FALSE(strong_bisim_plus(P("p.0 | 'p.0"), P("p.'p.0 + 'p.p.0")));
  EXPECT_TRUE(strong_bisim_plus(Term::nil(), Term::nil()));
}

TEST(DTransitions, Reconstruction) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}), true);
  for (const auto& p : e.up_to(4))
    for (const auto& tr : d_transitions(p))
      if (!tr.action.is_tau()) {
        EXPECT_TRUE(reconstructs(p, *tr.action.visible, tr.residual)) << print_term(p);
      }
}

TEST(Dsim, CoincidesWithCongruenceSmall) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}), true);
  auto terms = e.up_to(2);
  DistributedBisimClasses classes{std::span<const Term>(terms)};
  for (const auto& p : terms)
    for (const auto& q : terms) EXPECT_EQ(classes.related(p, q), p == q);
}

TEST(Dsim, Congruence) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}), true);
  auto terms = e.up_to(2);
  auto eta_a = eta("a");
  Term s = P("'b");
  std::vector<Term> roots = terms;
  for (const auto& p : terms) {
    roots.push_back(Term::prefix(eta_a, p));
    roots.push_back(Term::par(p, s));
    roots.push_back(Term::sum(Term::prefix(eta_a, p), s));
  }
  DistributedBisimClasses classes{std::span<const Term>(roots)};
  for (const auto& p : terms)
    for (const auto& q : terms) {
      if (!classes.related(p, q)) continue;
      EXPECT_TRUE(classes.related(Term::prefix(eta_a, p), Term::prefix(eta_a, q)));
      EXPECT_TRUE(classes.related(Term::par(p, s), Term::par(q, s)));
      EXPECT_TRUE(classes.related(Term::sum(Term::prefix(eta_a, p), s), Term::sum(Term::prefix(eta_a, q), s)));
    }
}

TEST(Matching, PerfectMatching) {
  auto eq = [](const Term& x, const Term& y) { return x == y; };
  EXPECT_TRUE(perfect_matching({P("a"), P("b")}, {P("b"), P("a")}, eq));
  EXPECT_FALSE(perfect_matching({P("a"), P("a")}, {P("a"), P("b")}, eq));
  auto any = [](const Term&, const Term&) { return true; };
  EXPECT_FALSE(perfect_matching({P("a")}, {P("a"), P("b")}, any));
}

TEST(Md, CheckExamples) {
  MdWitness same{eta("a"), eta("a"), P("a"), Term::nil(), P("a"), Term::nil(), Term::nil()};
  EXPECT_THROW(check_md(same, Equivalence::StrongCcs), std::invalid_argument);
  MdWitness bogus{eta("a"), eta("b"), P("b"), Term::nil(), P("b"), Term::nil(), Term::nil()};
  try {
    check_md(bogus, Equivalence::StrongCcs);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "not a candidate MD");
  }
  MdWitness w{eta("a"), eta("'b"), P("a"), Term::nil(), P("'b"), Term::nil(), Term::nil()};
  EXPECT_EQ(w.left(), P("'b.a"));
  EXPECT_EQ(w.right(), P("a.'b"));
  EXPECT_FALSE(check_md(w, Equivalence::StrongCcs));
  EXPECT_TRUE(size_argument_holds(w));
}

TEST(Md, DiagramWitnessForExpansion) {
  auto w = find_diagram_md(P("a.'b.0 + 'b.a.0"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->q12, Term::nil());
  EXPECT_EQ(w->q21, Term::nil());
  EXPECT_NE(w->eta1, w->eta2);
  EXPECT_FALSE(find_diagram_md(P("a.'b.0 | 'b.a.0")).has_value());
}

TEST(Md, DependentFiringsFollowOccurrences) {
  // a.b | b.a : firing a then b must use the b under a, ending in b.a
  auto fs = dependent_firings(P("a.b | b.a"));
  ASSERT_EQ(fs.size(), 2u);
  for (const auto& f : fs) EXPECT_EQ(size(f.end), 2u);
}

TEST(Md, SearchExamples) {
  EXPECT_FALSE(search_md_parallel_shape(0, {"a"_n, "b"_n}).has_value());
  EXPECT_FALSE(search_md_parallel_shape(2, {"a"_n, "b"_n}).has_value());
  EXPECT_FALSE(search_md_diagram(Calculus::Ccs, 4, {"a"_n, "b"_n}).has_value());
  EXPECT_FALSE(search_md_diagram(Calculus::CcsPlus, 1, {"a"_n}).has_value());
  auto w = search_md_diagram(Calculus::CcsPlus, 4, {"a"_n, "b"_n});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(size(w->q), 4u);
  EXPECT_LE(w->q, P("a.'b.0 + 'b.a.0"));
  EXPECT_TRUE(bisimilar_oracle(w->q12, w->q21));
}

// The normal-form multiset test used by the parallel search agrees with
// the oracle on every candidate at a small bound.
TEST(Md, ParallelSearchEquivalenceMatchesOracle) {
  TermEnumerator e(both_polarities({"a"_n, "b"_n}));
  auto terms = e.up_to(1);
  for (const auto& s : terms)
    for (const auto& t : terms)
      for (const auto& ts : transitions(s))
        for (const auto& tt : transitions(t)) {
          if (ts.action.is_tau() || tt.action.is_tau() || ts.action == tt.action) continue;
          MdWitness w{*ts.action.visible, *tt.action.visible, s, ts.target, t, tt.target, Term::nil()};
          EXPECT_EQ(check_md(w, Equivalence::StrongCcs), decide_bisim(w.left(), w.right()));
        }
}

TEST(Md, SubstitutionClosureExamples) {
  EXPECT_TRUE(check_substitution_closure(P("a.a"), P("a | a"), {{"a"_n, "b"_n}}, Equivalence::StrongCcs));
  EXPECT_FALSE(check_substitution_closure(P("a.0 | 'b.0"), P("a.'b.0 + 'b.a.0"), {{"a"_n, "p"_n}, {"b"_n, "p"_n}},
                                          Equivalence::StrongCcsPlus));
  EXPECT_TRUE(check_substitution_closure(P("a.'b"), P("a.'b"), {{"a"_n, "b"_n}}, Equivalence::Distributed));
}

TEST(Md, AllSubstitutions) {
  EXPECT_EQ(all_substitutions({"a"_n, "b"_n}, {"a"_n, "b"_n, "c"_n}).size(), 9u);
  EXPECT_EQ(all_substitutions({}, {"a"_n}).size(), 1u);
}
