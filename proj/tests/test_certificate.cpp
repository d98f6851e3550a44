#include <gtest/gtest.h>

#include <string>

#include "quartic/certificate.hpp"
#include "quartic/errors.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::Rng;

TEST(Certificate, RoundTrip) {
  Rng rng(31);
  for (FieldTag tag : theorem_field_tags()) {
    const FieldParams& f = field(tag);
    for (int n = 0; n < 20; ++n) {
      const AdditiveForm form = quartic::testing::random_form(f, rng, quartic::testing::random_levels(rng, 11));
      const int M = 8 + static_cast<int>(rng() % 40);
      const Witness w = solve(form, M);
      const nlohmann::json j = witness_to_json(form, w);
      EXPECT_EQ(j.at("field"), std::string(f.name));
      EXPECT_EQ(j.at("check_modulus"), M);
      EXPECT_EQ(j.at("residual").get<std::string>().size(), static_cast<std::size_t>(M));

      // through text and back
      const Certificate c = certificate_from_json(nlohmann::json::parse(j.dump()));
      EXPECT_EQ(c.witness.check_modulus, M);
      EXPECT_EQ(c.witness.lifted_index, w.lifted_index);
      ASSERT_EQ(c.form.size(), form.size());
      EXPECT_TRUE(verify(c.form, c.witness).passed());
      EXPECT_EQ(witness_to_json(c.form, c.witness), j);
    }
  }
}

TEST(Certificate, TamperedFailsVerify) {
  const FieldParams& f = field(FieldTag::sqrt2);
  const AdditiveForm form = parse_form("1,1,1,1,1,p,p,p,p,p,p", f);
  const Witness w = solve(form, 20);
  nlohmann::json j = witness_to_json(form, w);
  std::string first = j["coefficients"][0];
  first[1] = first[1] == '0' ? '1' : '0';
  j["coefficients"][0] = first;
  const Certificate c = certificate_from_json(j);
  EXPECT_FALSE(verify(c.form, c.witness).passed());
}

TEST(Certificate, Malformed) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse("{}")), Error);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"field":"sqrt3"})")), std::exception);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(
                   R"({"field":"sqrt2","check_modulus":4,"coefficients":["1x00"],"assignment":["1000"],
                       "lifted_index":0,"residual":"0000"})")),
               std::exception);
  // length mismatch loads but does not verify
  const Certificate c = certificate_from_json(nlohmann::json::parse(
      R"({"field":"sqrt2","check_modulus":4,"coefficients":["1000","1000"],"assignment":["1000"],
          "lifted_index":0,"residual":"0000"})"));
  const VerifyReport r = verify(c.form, c.witness);
  EXPECT_FALSE(r.length_ok);
  EXPECT_FALSE(r.passed());
}

TEST(ZeroSearchJson, Shape) {
  const FieldParams& f = field(FieldTag::sqrt2);
  const AdditiveForm diff = parse_form("1,-1", f);
  const nlohmann::json j = zero_search_to_json(diff, 6, has_primitive_zero_mod(diff, 6));
  EXPECT_TRUE(j.at("has_primitive_zero").get<bool>());
  EXPECT_EQ(j.at("witness").size(), 2u);
  EXPECT_EQ(j.at("modulus"), 6);

  const AdditiveForm g = parse_form("1,1,1,1,p,p,p,p,p,p", f);
  const nlohmann::json k = zero_search_to_json(g, 8, has_primitive_zero_mod(g, 8));
  EXPECT_FALSE(k.at("has_primitive_zero").get<bool>());
  EXPECT_FALSE(k.contains("witness"));
}
