#include <gtest/gtest.h>

#include "realform/errors.hpp"
#include "realform/families.hpp"
#include "realform/json_io.hpp"
#include "test_support.hpp"

using namespace realform;
using namespace realform::testing;

TEST(JsonIntegers, Conversions) {
  EXPECT_EQ(integer_from_json(Json(12)), 12);
  EXPECT_EQ(integer_from_json(Json("-7")), -7);
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890")), Integer("123456789012345678901234567890"));
  EXPECT_THROW(integer_from_json(Json("12a")), InvalidInput);
  EXPECT_THROW(integer_from_json(Json(1.5)), InvalidInput);
  EXPECT_EQ(integer_to_json(Integer(5)), Json(5));
  EXPECT_EQ(integer_to_json(Integer("123456789012345678901234567890")), Json("123456789012345678901234567890"));
}

TEST(JsonModule, RoundTrip) {
  const GammaModule m = module_from_json(Json::parse(R"({"orders":[3,3],"action":[[0,-1],[-1,0]]})"));
  EXPECT_EQ(module_from_json(module_to_json(m)), m);
  EXPECT_EQ(module_from_json(Json::parse(R"({"orders":[4],"action":"inversion"})")),
            GammaModule::inversion(group({4})));
  EXPECT_THROW(module_from_json(Json::parse(R"({"orders":[4],"action":"flip"})")), InvalidInput);
  EXPECT_THROW(module_from_json(Json::parse(R"({"orders":[4]})")), InvalidInput);
  EXPECT_THROW(module_from_json(Json::parse(R"({"orders":[4],"action":[[2]]})")), NotAutomorphism);
  EXPECT_THROW(module_from_json(Json::parse(R"({"orders":[3,3],"action":[[1,0]]})")), InvalidInput);
}

TEST(JsonFactorGraph, RoundTrip) {
  const Json j = Json::parse(R"j({"factors":[{"family":"SL","n":3},{"family":"SL","n":3}],
    "sigma_perm":[1,0],"sigma_labels":[null,null],"theta_perm":[0,1],
    "theta_labels":["transpose_inverse","inner_pq(2,1)"]})j");
  const FactorGraph fg = factor_graph_from_json(j);
  EXPECT_EQ(fg.theta_labels[1]->kind, InvolutionLabel::Kind::InnerPQ);
  EXPECT_EQ(factor_graph_from_json(factor_graph_to_json(fg)), fg);
  EXPECT_THROW(factor_graph_from_json(Json::parse(R"({"factors":[]})")), InvalidInput);
}

TEST(JsonEngineInput, Families) {
  const EngineInput a = engine_input_from_json(Json::parse(R"({"family":"sl-symplectic","n":2,"r":2,"s":1})"));
  EXPECT_EQ(decide_existence(a).failed_condition, FailedCondition::DeltaNonzero);
  const EngineInput b = engine_input_from_json(Json::parse(R"({"family":"sl-pair","n":3,"h_gens":[[1,0]]})"));
  EXPECT_EQ(decide_existence(b).failed_condition, FailedCondition::NotStable);
  const EngineInput c = engine_input_from_json(Json::parse(R"({"family":"generic",
    "Q":{"orders":[2],"action":"identity"},"h_gens":[[0]],"Z":{"orders":[4],"action":"identity"},
    "chi":[[1]],"delta":[1],"compat":true})"));
  EXPECT_EQ(decide_existence(c).failed_condition, FailedCondition::DeltaNonzero);
}

TEST(JsonEngineInput, Errors) {
  for (const char* bad : {R"({"family":"sl-symplectic","n":2,"r":3,"s":1})", R"({"family":"nope"})",
                          R"({"n":2})", R"([1,2])", R"({"family":"sl-symplectic","n":"x","r":1,"s":0})",
                          R"({"family":"sl-pair","n":3,"h_gens":[[1]]})",
                          R"({"family":"sl-symplectic","n":99999999999999999999,"r":1,"s":0})",
                          R"({"family":"generic","Q":{"orders":[2],"action":"identity"},
                              "Z":{"orders":[4],"action":"identity"},"chi":[[1]],"delta":[1],"compat":3})"}) {
    EXPECT_THROW(engine_input_from_json(Json::parse(bad)), InvalidInput) << bad;
  }
}

TEST(JsonDecision, SchemaAndReplay) {
  const Json spec = Json::parse(R"({"family":"sl-symplectic","n":4,"r":8,"s":2})");
  const Decision d = decide_existence(engine_input_from_json(spec));
  const Json report = decision_to_json(d, spec);
  EXPECT_EQ(report["exists"], true);
  EXPECT_EQ(report["failed_condition"], "none");
  EXPECT_EQ(report["num_classes"], 2);
  EXPECT_EQ(report["A_canonical"], Json::parse("[4]"));
  EXPECT_EQ(report["conditions"]["delta_zero"], true);
  EXPECT_EQ(replay_decision(report).exists, true);
  Json tampered = report;
  tampered["num_classes"] = 4;
  EXPECT_THROW(replay_decision(tampered), InvalidInput);
  Json unstable = decision_to_json(decide_existence(build_sl_pair({3, {{1, 0}}})),
                                   Json::parse(R"({"family":"sl-pair","n":3,"h_gens":[[1,0]]})"));
  EXPECT_TRUE(unstable["A_canonical"].is_null());
  EXPECT_TRUE(unstable["conditions"]["delta_zero"].is_null());
  EXPECT_NO_THROW(replay_decision(unstable));
}

TEST(JsonCohomology, Z4Trivial) {
  const Json j = cohomology_to_json(GammaModule::trivial(group({4})));
  EXPECT_EQ(j["h1_rank"], 1);
  EXPECT_EQ(j["h2"], Json::parse("[2]"));
  EXPECT_EQ(j["h1_representatives"], Json::parse("[[0],[2]]"));
}
