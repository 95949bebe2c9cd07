#include <gtest/gtest.h>

#include <random>

#include "bisimkit/enumerate.hpp"
#include "bisimkit/pi_enumerate.hpp"
#include "bisimkit/serialize.hpp"
#include "bisimkit/syntax.hpp"

using namespace bisimkit;

TEST(Serialize, CcsShape) {
  Json j = to_json(parse_ccs("a.0 | 'b.X"));
  EXPECT_EQ(j["tag"], "par");
  ASSERT_EQ(j["children"].size(), 2u);
  EXPECT_EQ(j["children"][1]["polarity"], "coaction");
  EXPECT_EQ(j["children"][1]["continuation"]["tag"], "var");
  EXPECT_EQ(to_json(Term::nil()), Json::parse(R"({"tag":"nil"})"));
}

TEST(Serialize, PiShape) {
  Json j = to_json(parse_pi_raw("(nu p)(b<p>.a(x).0)"));
  EXPECT_EQ(j["tag"], "nu");
  EXPECT_EQ(j["binder"], "p");
  EXPECT_EQ(j["body"]["tag"], "output");
  EXPECT_EQ(j["body"]["continuation"]["binder"], "x");
}

TEST(Serialize, RoundTrip) {
  std::mt19937 rng(1);
  const auto prefixes = both_polarities({Name::intern("a"), Name::intern("b")});
  for (const auto& t : ccs_plus_terms_up_to(prefixes, 3)) EXPECT_EQ(ccs_from_json(to_json(t)), t);
  for (int i = 0; i < 100; ++i) {
    Term t = canonicalize(random_ccs(rng, 5, prefixes, {Name::intern("X")}));
    EXPECT_EQ(ccs_from_json(Json::parse(to_json(t).dump())), t);
    PiTerm p = canonicalize(random_pi(rng, 6, 2, {Name::intern("a"), Name::intern("b")}));
    EXPECT_EQ(pi_from_json(Json::parse(to_json(p).dump())), p);
  }
}

TEST(Serialize, Errors) {
  EXPECT_THROW(ccs_from_json(Json::parse(R"({"tag":"loop"})")), std::invalid_argument);
  EXPECT_THROW(ccs_from_json(Json::parse(R"({"tag":"prefix","name":"a"})")), std::invalid_argument);
  EXPECT_THROW(pi_from_json(Json::parse(R"([1, 2])")), std::invalid_argument);
}
