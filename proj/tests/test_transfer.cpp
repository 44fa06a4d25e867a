#include "gdist/embedding.hpp"
#include "gdist/transfer.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gdist;

namespace {

LaurentPoly oracle(const Graph& g, FaceMode mode) {
  return mode == FaceMode::euler ? euler_distribution_oracle(g).euler.poly() : genus_distribution_oracle(g).poly();
}

const BivarPoly kCn2GenusDen = parse_bivar("(1-4*x*t^2)*(1-4*t-12*x*t^2)*(1-2*t-12*x*t^2)");

}  // namespace

TEST(Family, DoubledPathMatchesOracle) {
  for (auto mode : {FaceMode::orientable, FaceMode::euler}) {
    const auto spec = named_family("doubled_path", mode);
    const auto s = family_series(spec, 4);
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(s[static_cast<std::size_t>(n - 1)], oracle(doubled_path(n + 1), mode)) << n;
  }
}

TEST(Family, DoubledCycleMatchesOracle) {
  for (auto mode : {FaceMode::orientable, FaceMode::euler}) {
    const auto spec = named_family("doubled_cycle", mode);
    const auto s = family_series(spec, 3);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(s[static_cast<std::size_t>(n - 1)], oracle(doubled_cycle(n), mode)) << n;
  }
}

TEST(Family, TripledCycleGenus) {
  const auto spec = named_family("tripled_cycle", FaceMode::orientable);
  const auto s = family_series(spec, 2);
  EXPECT_EQ(s[0], oracle(tripled_cycle(1), FaceMode::orientable));
  EXPECT_EQ(s[1], oracle(tripled_cycle(2), FaceMode::orientable));
}

TEST(Family, GridCapped) {
  const auto spec = named_family("grid3", FaceMode::orientable);
  EXPECT_EQ(family_genus_poly(spec, 1), (LaurentPoly{2, 58, 36}));
  const Graph g = family_graph(spec, 1);
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(g.edge_count(), 12);
}

TEST(Family, FamilyGraphShape) {
  const auto spec = named_family("doubled_cycle", FaceMode::orientable);
  const Graph g = family_graph(spec, 5);
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 10);
  EXPECT_EQ(family_genus_poly(spec, 5), oracle(g, FaceMode::orientable));
}

TEST(Family, StepwiseAgreesWithSeries) {
  const auto spec = named_family("doubled_cycle", FaceMode::orientable);
  TransferState st = initial_state(spec);
  const auto s = family_series(spec, 5);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(st.n, n);
    EXPECT_EQ(complete_state(spec, st), s[static_cast<std::size_t>(n - 1)]);
    st = step_state(spec, st);
  }
}

TEST(Family, JsonSpec) {
  const auto named = parse_family_json(R"({"name":"doubled_cycle","mode":"euler"})");
  EXPECT_EQ(named.mode, FaceMode::euler);
  const auto custom = parse_family_json(
      R"({"h":{"vertices":2,"edges":[[0,1],[0,1]]},"glue":"0>1","kind":"circular","mode":"genus"})");
  EXPECT_EQ(family_series(custom, 3), family_series(named_family("doubled_cycle", FaceMode::orientable), 3));
  EXPECT_THROW(parse_family_json(R"({"h":{"vertices":2,"edges":[[0,1]]},"glue":"0>1","mode":"torus"})"),
               std::invalid_argument);
  EXPECT_THROW(parse_family_json(R"({"h":{"vertices":2,"edges":[[0,1]]},"glue":"0>1","kind":"spiral"})"),
               std::invalid_argument);
  EXPECT_THROW(parse_family_json("not json"), std::invalid_argument);
}

TEST(Family, RationalGF) {
  const auto gf = family_rational_gf(named_family("doubled_cycle", FaceMode::orientable), 6, 6, 3);
  EXPECT_EQ(gf.pade.gf.series(12), family_series(named_family("doubled_cycle", FaceMode::orientable), 12));
  EXPECT_TRUE(divides_in_t(kCn2GenusDen, BivarPoly([&] {
                std::vector<LaurentPoly> c;
                for (const auto& x : gf.pade.gf.den().coeffs()) c.push_back(x.substitute_power(2));
                return c;
              }())));
}

TEST(TransferMatrix, DoubledCycle) {
  const auto tm = transfer_matrix(named_family("doubled_cycle", FaceMode::orientable));
  EXPECT_EQ(tm.basis.size(), tm.m.size());
  const BivarPoly d = det_one_minus_tm(tm.m);
  EXPECT_EQ(d[0], LaurentPoly(1));
  EXPECT_TRUE(divides_in_t(kCn2GenusDen, d));
  EXPECT_THROW(transfer_matrix(named_family("doubled_cycle", FaceMode::euler), 3), std::runtime_error);
}

TEST(DividesInT, Basics) {
  const BivarPoly q = parse_bivar("1-x*t");
  EXPECT_TRUE(divides_in_t(q, parse_bivar("(1-x^2*t)*(1+t)")));
  EXPECT_FALSE(divides_in_t(q, parse_bivar("(1-x*t)*(1+t)")));
  EXPECT_FALSE(divides_in_t(q, parse_bivar("2-t")));
}
