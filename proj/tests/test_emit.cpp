#include "gdist/emit.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gdist;

namespace {

const RationalGF kGenusGF(parse_bivar("288*x^2*(x+1)*t^6 - 48*x*(2*x^2-7*x-3)*t^5 - 16*(15*x^2-5*x-1)*t^4"
                                      " + 4*(4*x^2-35*x+1)*t^3 + 18*(x-1)*t^2 + 2*(x+2)*t"),
                          parse_bivar("(1-4*x*t^2)*(1-4*t-12*x*t^2)*(1-2*t-12*x*t^2)"));

}  // namespace

TEST(Emit, PolyJson) {
  EXPECT_EQ(poly_json(LaurentPoly{4, 2}).dump(), R"({"terms":[[0,"4"],[1,"2"]]})");
  EXPECT_EQ(poly_json(parse_poly("1/2*x^-1 + 3")).dump(), R"({"terms":[[-1,"1/2"],[0,"3"]]})");
  EXPECT_THROW(poly_json(LaurentPoly()), EmitError);
  EXPECT_EQ(poly_json(LaurentPoly(), true).dump(), R"({"terms":[]})");
  const LaurentPoly p = parse_poly("6 + 36*x + 126*x^2 + 120*x^3");
  EXPECT_EQ(poly_from_json(poly_json(p)), p);
  EXPECT_EQ(poly_from_json(nlohmann::json::parse(R"([[2,"5"]])")), parse_poly("5*x^2"));
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"terms":[[0,"1/0"]]})")), std::exception);
}

TEST(Emit, TsvAndText) {
  EXPECT_EQ(poly_tsv(LaurentPoly{6, 30}), "0\t6\n1\t30\n");
  EXPECT_THROW(poly_tsv(LaurentPoly()), EmitError);
  EXPECT_EQ(emit_poly(LaurentPoly{6, 30}, Format::text), "6 + 30*x\n");
  EXPECT_EQ(emit_poly(LaurentPoly{4, 2}, Format::json), R"({"terms":[[0,"4"],[1,"2"]]})" "\n");
}

TEST(Emit, Formats) {
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("tsv"), Format::tsv);
  EXPECT_THROW(parse_format("xml"), EmitError);
}

TEST(Emit, GfRoundTrip) {
  const std::string text = gf_text(kGenusGF);
  EXPECT_EQ(text.front(), '(');
  EXPECT_TRUE(parse_gf(text).equivalent(kGenusGF));
  EXPECT_TRUE(parse_gf(kGenusGF.str()).equivalent(kGenusGF));
  EXPECT_TRUE(gf_from_json(gf_json(kGenusGF)).equivalent(kGenusGF));
  EXPECT_TRUE(gf_from_json(nlohmann::json::parse(gf_json(kGenusGF).dump())).equivalent(kGenusGF));
  EXPECT_EQ(parse_gf(text).series(8), kGenusGF.series(8));
  EXPECT_THROW(parse_gf("(1 + t"), std::exception);
}

TEST(Emit, BivarAndSeries) {
  const BivarPoly b = parse_bivar("1 - 6*t + (8 + 48*x)*t^2");
  EXPECT_EQ(bivar_from_json(bivar_json(b)), b);
  const auto j = series_json({LaurentPoly{6, 30}, LaurentPoly{6, 36}});
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["n"], 2);
  EXPECT_EQ(poly_from_json(j[0]["poly"]), (LaurentPoly{6, 30}));
}
