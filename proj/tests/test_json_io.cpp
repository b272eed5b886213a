#include "support.hpp"

using namespace prohecke;
using namespace prohecke::testing;
using nlohmann::json;

TEST(JsonIo, ConfigParsing) {
  const auto c = parse_config(json::parse(R"({"group":"SL3","field":{"p":5,"m":2},"seed":9,"max_len":4})"));
  EXPECT_EQ(c.field.p, 5);
  EXPECT_EQ(c.field.m, 2);
  EXPECT_EQ(c.field.f, 1);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.max_len, 4);
  EXPECT_THROW(parse_config(json::parse(R"({"group":"SL3"})")), ParseError);
  EXPECT_THROW(parse_config(json::parse(R"({"group":"SL3","field":{"p":"x"}})")), ParseError);
  EXPECT_THROW(parse_config(json::parse(R"({"group":"SL3","field":{"p":3},"max_len":-1})")), ParseError);
}

TEST(JsonIo, ExplicitGroup) {
  const auto rd = parse_group(json::parse(R"({"rank":1,"roots":[[2],[-2]],"coroots":[[1],[-1]],"simple":[0]})"));
  EXPECT_EQ(rd.num_roots(), 2);
  EXPECT_EQ(rd.root(0)(0), 2);
}

TEST(JsonIo, RoundTrips) {
  const auto ctx = make("Sp4", 5);
  for (const auto& x : basis_elements(ctx, 2)) {
    EXPECT_EQ(prop_elt_from_json(ctx, to_json(ctx, x)), x);
    EXPECT_EQ(weyl_elt_from_json(ctx, to_json(ctx, x.w)), x.w);
  }
  const HeckeElt h = ctx.hecke->mul(ctx.hecke->tau(ctx.group->lift_s(2)), ctx.hecke->tau(ctx.group->lift_s(2)));
  EXPECT_EQ(hecke_elt_from_json(ctx, to_json(ctx, h)), h);
  const TopElt t = ctx.top->left_generator(2, ctx.top->phi(ctx.group->lift_s(2)));
  EXPECT_EQ(top_elt_from_json(ctx, to_json(ctx, t)), t);
  EXPECT_EQ(to_json(ctx, t)["basis"], "phi");
}

TEST(JsonIo, Coefficients) {
  const auto ctx = make("SL2", 3, 1, 2);
  EXPECT_EQ(field_elt_from_json(ctx, json(5)), k(ctx, 2));
  EXPECT_EQ(field_elt_from_json(ctx, json::parse("[1,2]")), ctx.field->from_coeffs(std::vector<int>{1, 2}));
  EXPECT_THROW(field_elt_from_json(ctx, json::parse("[1]")), ParseError);
  EXPECT_THROW(field_elt_from_json(ctx, json::parse("[3,0]")), ParseError);
}

TEST(JsonIo, ElementErrors) {
  const auto ctx = make("SL2", 3);
  EXPECT_THROW(prop_elt_from_json(ctx, json::parse(R"({"torus":[0,0]})")), ParseError);
  EXPECT_THROW(weyl_elt_from_json(ctx, json::parse(R"({"w0_word":[4]})")), ParseError);
  EXPECT_THROW(hecke_elt_from_json(ctx, json::parse(R"({"basis":"phi","terms":[]})")), ParseError);
  EXPECT_THROW(check_context(ctx, json::parse(R"({"context":{"group":{"preset":"SL3"}}})")), ParseError);
  EXPECT_THROW(check_context(ctx, json::parse(R"({"context":{"field":{"p":5}}})")), ParseError);
  EXPECT_NO_THROW(check_context(ctx, json::parse(R"({"context":{"field":{"p":3}}})")));
  EXPECT_THROW(prop_elt_from_json(ctx, json::parse(R"({"tourus":[0]})")), ParseError);
  EXPECT_THROW(prop_elt_from_json(ctx, json::parse("[0]")), ParseError);
}

TEST(JsonIo, BareWeylElementIsTorusFree) {
  const auto ctx = make("SL2", 3);
  const ProPElt x = prop_elt_from_json(ctx, json::parse(R"({"w0_word":[0],"mu":[0]})"));
  EXPECT_EQ(x.w, weyl_elt_from_json(ctx, json::parse(R"({"w0_word":[0],"mu":[0]})")));
  EXPECT_TRUE((x.t.array() == 0).all());
  EXPECT_EQ(ctx.weyl->length(x.w), 1);
  EXPECT_EQ(hecke_elt_from_json(ctx, json::parse(R"({"w0_word":[0],"mu":[0]})")).terms().size(), 1u);
}

TEST(JsonIo, ConfigEcho) {
  const auto ctx = make("SL2", 3);
  const json j = config_json(ctx.config);
  EXPECT_EQ(j["field"]["p"], 3);
  EXPECT_EQ(j["seed"], ctx.config.seed);
}
