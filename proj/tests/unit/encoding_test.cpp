#include <gtest/gtest.h>

#include "termclone/termclone.hpp"

using namespace termclone;

TEST(ElementJson, Shapes) {
  EXPECT_EQ(to_json(Element::zero()), json::parse(R"({"kind":"zero"})"));
  EXPECT_EQ(to_json(Element::letter(Letter::var(3))), json::parse(R"({"kind":"letter","letter":"x3"})"));
  EXPECT_EQ(to_json(Element::word(Letter::p(), {Letter::var(1), Letter::p()})),
            json::parse(R"({"kind":"word","head":"p","tail":["p","x1"]})"));
}

TEST(ElementJson, RoundTripOverF3) {
  for (const Element& e : enumerate_free(3)) {
    const json j = to_json(e);
    EXPECT_EQ(element_from_json(json::parse(j.dump())), e);
  }
}

TEST(ElementJson, RejectsMalformed) {
  EXPECT_THROW(element_from_json(json::parse(R"({"kind":"word","head":"p","tail":[]})")), error);
  EXPECT_THROW(element_from_json(json::parse(R"({"kind":"letter","letter":"x0"})")), error);
  EXPECT_THROW(element_from_json(json::parse(R"({"kind":"blob"})")), error);
  EXPECT_THROW(element_from_json(json::parse(R"({"letter":"p"})")), error);
}

TEST(ReportJson, Schema) {
  const CloneReport ok = is_clone(clone_closure({}, 1));
  const json j = to_json(ok);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_TRUE(j.at("counterexample").is_null());
  EXPECT_EQ(j.at("checked"), ok.checked);

  const CloneReport bad = is_clone(CloneSet{{Element::letter(Letter::var(1)), eval_term(parse_term("p*x1"))}, 1, false});
  const json k = to_json(bad);
  EXPECT_EQ(k.at("pass"), false);
  EXPECT_EQ(k.at("counterexample").at("member"), to_json(eval_term(parse_term("p*x1"))));
  EXPECT_EQ(k.at("counterexample").at("substitution").at("x1"), to_json(eval_term(parse_term("p*x1"))));
  EXPECT_EQ(k.at("counterexample").at("result"), json::parse(R"({"kind":"zero"})"));
}

TEST(ModelJson, RoundTrip) {
  for (const FiniteModel& m : enumerate_models(3)) EXPECT_EQ(model_from_json(json::parse(to_json(m).dump())), m);
  const json file = json::parse(R"({"size":2,"zero":0,"p":1,"table":[[0,0],[0,0]]})");
  EXPECT_EQ(model_from_json(file), FiniteModel(2, {0, 0, 0, 0}, 0, 1));
}

TEST(ModelJson, RejectsMalformed) {
  EXPECT_THROW(model_from_json(json::parse(R"({"size":2,"zero":0,"p":1,"table":[[0,0]]})")), error);
  EXPECT_THROW(model_from_json(json::parse(R"({"size":1,"zero":0,"p":1,"table":[[0]]})")), error);
  EXPECT_THROW(model_from_json(json::parse(R"({"size":1,"zero":0,"table":[[0]]})")), error);
  EXPECT_THROW(model_from_json(json::parse(R"({"size":1,"zero":0,"p":0,"table":[["a"]]})")), error);
}
