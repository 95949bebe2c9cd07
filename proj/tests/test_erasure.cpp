#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/erasure.hpp"
#include "bisimkit/pi_enumerate.hpp"
#include "bisimkit/pi_syntax.hpp"

using namespace bisimkit;

namespace {
PiTerm P(const char* s) { return parse_pi(s); }
Name N(const char* s) { return Name::intern(s); }
const ErasureContext ab{N("a"), N("b")};

void heads(const Term& t, std::set<Prefix>& out) {
  if (t.kind() == TermKind::Prefix) out.insert(t.head());
  for (const auto& k : t.children()) heads(k, out);
  if (t.kind() == TermKind::Prefix) heads(t.continuation(), out);
}
}  // namespace

TEST(Erase, Examples) {
  EXPECT_EQ(erase(P("a(x).c<d>.0 | c(y).b<d>.0"), ab), parse_ccs("a.0"));
  EXPECT_EQ(erase(P("(nu p)(b<p>.a(x).0)"), ab), parse_ccs("'b.a.0"));
  EXPECT_EQ(erase(P("0"), ab), Term::nil());
  EXPECT_EQ(erase(P("a(x).x(y).0 | b<a>.b<b>.0"), ab), parse_ccs("a.0 | 'b.'b.0"));
  // the roles of a and b are fixed: an input on b is not kept
  EXPECT_EQ(erase(P("b(x).0 | a<c>.0"), ab), Term::nil());
}

TEST(Erase, DistinctNamesRequired) { EXPECT_THROW(ErasureContext(N("a"), N("a")), std::invalid_argument); }

TEST(Erase, TransitionExamples) {
  EXPECT_TRUE(check_erasure_transitions(P("a(x).0"), ab));
  EXPECT_TRUE(check_erasure_transitions(P("(nu q) b<q>.0"), ab));
  EXPECT_TRUE(check_erasure_transitions(P("c<d>.0"), ab));
  EXPECT_TRUE(check_erasure_transitions(P("a(x).x<a>.b<x>.0 | (nu p)(b<p>.p(y).a(z).0)"), ab));
}

TEST(Erase, Transfer) {
  PiTerm p = P("a(x).b<x>.0 | (nu q) b<q>.0");
  EXPECT_TRUE(transfer_check(p, PiTerm::par(p, PiTerm::nil()), ab));
  EXPECT_TRUE(transfer_check(P("a(x).0 | b<c>.0"), P("b<c>.0 | a(x).0"), ab));
  EXPECT_TRUE(transfer_check(P("(nu p)(p<a>.0)"), P("0"), ab));
  try {
    transfer_check(P("a(x).0"), P("b<c>.0"), ab);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "transfer premise violated");
  }
}

TEST(Erase, Properties) {
  std::mt19937 rng(3);
  const std::vector<Name> ns{N("a"), N("b"), N("c")};
  const std::map<Name, Name> swap_c_d{{N("c"), N("d")}, {N("d"), N("c")}};
  for (int i = 0; i < 500; ++i) {
    PiTerm raw = random_pi(rng, 6, 2, ns);
    Term e = erase(raw, ab);
    std::set<Prefix> seen;
    heads(e, seen);
    for (const auto& eta : seen)
      EXPECT_TRUE(eta == Prefix::action(N("a")) || eta == Prefix::coaction(N("b")));
    EXPECT_EQ(erase(canonicalize(raw), ab), e);
    EXPECT_EQ(erase(pi_substitute(raw, swap_c_d), ab), e);
    EXPECT_TRUE(check_erasure_transitions(raw, ab)) << print_term(canonicalize(raw));
  }
}
