#include <gtest/gtest.h>

#include <random>

#include "rcone/json_io.hpp"

using namespace rcone;

TEST(CertificateJson, SchemaLayout) {
  const Certificate c = cone_check({CurveModel(2, PointMode::Generic), {1, 1}, {2, 0}});
  const Json j = to_json(c);
  const std::string expected =
      R"({"problem":{"genus":2,"mode":"generic","L":[1,1],"D":[2,0]},"verdict":"witness",)"
      R"("witness":{"i":1,"m":0,"dim":{"exact":1}},"bound_m0":3,)"
      R"("assumptions":["(X, D) is a rational pair","snc representative exists","generic point mode"]})";
  EXPECT_EQ(j.dump(), expected);
}

TEST(CertificateJson, AllVanishHasNullWitness) {
  const Certificate c = cone_check({CurveModel(0, PointMode::Generic), {1, 1}, {0, 0}});
  const Json j = to_json(c);
  EXPECT_EQ(j["verdict"], "all_vanish");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["bound_m0"], 0);
}

TEST(CertificateJson, RangeDimensions) {
  EXPECT_EQ(to_json(DimValue::range(2, 3)).dump(), R"({"range":[2,3]})");
  EXPECT_EQ(dim_from_json(Json::parse(R"({"range":[2,3]})")), DimValue::range(2, 3));
  EXPECT_THROW(dim_from_json(Json::parse(R"({"range":[2,2]})")), std::invalid_argument);
  EXPECT_THROW(dim_from_json(Json::parse(R"({"exact":-1})")), std::invalid_argument);
}

TEST(CertificateJson, RoundTripProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> genus(0, 5), pos(1, 4), nonneg(0, 8), mode(0, 1);
  int indeterminate = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const ConeProblem p = trial == 0 ? ConeProblem{CurveModel(2, PointMode::Arbitrary), {1, 2}, {1, 0}} : ConeProblem{CurveModel(genus(rng), mode(rng) ? PointMode::Arbitrary : PointMode::Generic),
                        {pos(rng), pos(rng)},
                        {nonneg(rng), nonneg(rng)}};
    const Certificate c = cone_check(p);
    if (c.verdict == Verdict::Indeterminate) ++indeterminate;
    const Certificate back = certificate_from_json(Json::parse(to_json(c).dump()));
    EXPECT_EQ(back, c);
  }
  EXPECT_GT(indeterminate, 0);
}

TEST(CertificateJson, StrictDecoding) {
  const Json good = to_json(cone_check({CurveModel(2, PointMode::Generic), {1, 1}, {0, 0}}));
  auto broken = [&](auto mutate) {
    Json j = good;
    mutate(j);
    return j;
  };
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j.erase("verdict"); })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["verdict"] = "maybe"; })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["problem"]["mode"] = "weird"; })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["problem"]["L"] = Json::array({0, 1}); })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["problem"]["D"] = Json::array({1}); })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["witness"]["i"] = 3; })), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(broken([](Json& j) { j["bound_m0"] = "three"; })), std::invalid_argument);
}

TEST(CertificateJson, DecodedTamperingIsCaughtByVerification) {
  Json j = to_json(cone_check({CurveModel(2, PointMode::Generic), {1, 1}, {0, 0}}));
  j["witness"]["dim"] = Json{{"exact", 5}};
  EXPECT_FALSE(verify_certificate(certificate_from_json(j)));
}

TEST(SearchReportJson, RoundTrip) {
  for (Int g : {0, 1, 2, 3}) {
    for (PointMode mode : {PointMode::Generic, PointMode::Arbitrary}) {
      const SearchReport r = search_grid(CurveModel(g, mode), {1, 1}, 5, 5);
      const SearchReport back = search_report_from_json(Json::parse(to_json(r).dump()));
      EXPECT_EQ(back, r) << "g=" << g;
    }
  }
}

TEST(SearchReportJson, ProofSurvivesAndStillVerifies) {
  const SearchReport r = search_grid(CurveModel(2, PointMode::Generic), {1, 1}, 3, 3);
  const Json j = to_json(r);
  EXPECT_EQ(j["closed_form_verdict"], "nonexistence_proved");
  ASSERT_TRUE(j["proof"].is_object());
  const NonexistenceProof p = proof_from_json(j["proof"]);
  EXPECT_TRUE(verify_proof(p));
  EXPECT_EQ(j["proof"]["cases"][1]["d_range"].dump(), "[-2,-2]");
  EXPECT_EQ(j["proof"]["cases"][0]["d_range"].dump(), "[-1,null]");
}

TEST(SearchReportJson, Deterministic) {
  const auto one = to_json(search_grid(CurveModel(2, PointMode::Arbitrary), {1, 2}, 6, 6)).dump();
  const auto two = to_json(search_grid(CurveModel(2, PointMode::Arbitrary), {1, 2}, 6, 6)).dump();
  EXPECT_EQ(one, two);
}
