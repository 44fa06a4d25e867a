#include "gdist/distributions.hpp"
#include "gdist/transfer.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gdist;

namespace {

const LaurentPoly X = LaurentPoly::x();

LaurentPoly mono(int c, int k) { return LaurentPoly::monomial(Rational(c), k); }

PEdVector vec(std::initializer_list<LaurentPoly> xs) {
  PEdVector v;
  std::size_t i = 0;
  for (const auto& p : xs) v[i++] = p;
  return v;
}

LaurentPoly euler_of(const Graph& g) { return euler_distribution_oracle(g).euler.poly(); }
LaurentPoly genus_of(const Graph& g) { return genus_distribution_oracle(g).poly(); }

Rational pow_int(int b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST(Ped, TypeNames) {
  for (int t = 0; t < kPedTypes; ++t) EXPECT_EQ(ped_type_from_name(ped_type_name(t)), t);
  EXPECT_EQ(ped_type_from_name("zz9"), -1);
}

TEST(Ped, DoubledPaths) {
  const auto p2 = ped_vector_oracle(doubled_path(2), 0, 1);
  EXPECT_EQ(p2, vec({0, 0, 0, 0, 0, 1, 0, 0, 0, X}));
  const auto p3 = ped_vector_oracle(doubled_path(3), 0, 2);
  EXPECT_EQ(p3, vec({0, 0, 0, 0, 4, mono(2, 1), mono(4, 1), mono(4, 1), mono(4, 2), mono(6, 2)}));
  EXPECT_EQ(ped_sum(p3), euler_of(doubled_path(3)));
  EXPECT_THROW(ped_vector_oracle(doubled_path(3), 0, 1), std::invalid_argument);
}

TEST(Ped, ClosureIsDoubledCycle) {
  // Two parallel s-t edges on P_n^2 make C_n^2.
  EXPECT_EQ(euler_of(add_parallel_pair(doubled_path(3), 0, 2)), euler_of(doubled_cycle(3)));
}

TEST(Ped, DerivedSeriesMatchesEngine) {
  const auto tabs = derive_transition_tables();
  const auto engine = family_series(named_family("doubled_cycle", FaceMode::euler), 7);
  const auto ped = ped_series(tabs, 7);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(ped[static_cast<std::size_t>(n - 1)], engine[static_cast<std::size_t>(n - 1)]) << n;
  EXPECT_FALSE(diff_tables(printed_transition_tables(), tabs).empty());
  EXPECT_FALSE(tabs.to_json().empty());
}

TEST(Partials, HalfOpenLadderAgainstOracle) {
  // Recurrence index n completes to the half-open ladder with n + 2 rungs.
  for (auto mode : {PartialMode::genus, PartialMode::euler})
    for (int n = 0; n <= 2; ++n) {
      const auto m = half_open_ladder_marked(n + 2);
      const auto want = partial_pair_oracle(m.g, m.u, m.v, mode);
      const auto got = ladder_partials(n, mode).half_open;
      EXPECT_EQ(got.d, want.d) << n;
      EXPECT_EQ(got.s, want.s) << n;
    }
}

TEST(Partials, RecurrenceValues) {
  const auto g1 = ladder_partials(1, PartialMode::genus).ladder;
  EXPECT_EQ(g1.d, LaurentPoly(2));
  EXPECT_EQ(g1.s, mono(2, 1));
  const auto hl3 = ladder_partials(1, PartialMode::euler).half_open;
  EXPECT_EQ(hl3.d, (LaurentPoly{4, 8}));
  EXPECT_EQ(hl3.s, (LaurentPoly{4, 16, 32}));
  for (int n = 0; n <= 8; ++n) {
    const Rational want = (Rational(4) * pow_int(8, n) + pow_int(-2, n)) / 5;
    EXPECT_EQ(ladder_partials(n, PartialMode::euler).ladder.d.eval(1), want) << n;
  }
}

TEST(Partials, ClosedFormScale) {
  for (int n = 1; n <= 6; ++n) {
    const auto cf = half_open_ladder_closed_form(n);
    const auto lp = ladder_partials(n, PartialMode::genus);
    EXPECT_EQ(cf.d, LaurentPoly(2) * lp.ladder.d) << n;
    EXPECT_EQ(LaurentPoly(0, {Rational(BigInt(1) << static_cast<unsigned>(n + 1))}) * cf.s, lp.half_open.s) << n;
  }
}

TEST(Composition, BarRing) {
  for (auto mode : {PartialMode::genus, PartialMode::euler}) {
    std::vector<PartialPair> parts;
    for (int a : {2, 1}) {
      const auto m = half_open_ladder_marked(a);
      parts.push_back(partial_pair_oracle(m.g, m.u, m.v, mode));
    }
    const Graph g = star_ladder({2, 1});
    EXPECT_EQ(bar_ring_from_partials(parts, mode), mode == PartialMode::genus ? genus_of(g) : euler_of(g));
  }
}

TEST(Composition, Ears) {
  const Graph g = dipole(2);
  const auto gp = break_edge(g, 0);
  const auto pp = partial_pair_oracle(gp.g, gp.u, gp.v, PartialMode::euler);
  for (auto [r, s] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    EXPECT_EQ(ear_formula_euler(pp, r, s), euler_of(eared_graph(g, 0, r, s))) << r << "," << s;
    const auto [p, q] = ear_formula_parts(pp, r, s);
    EXPECT_EQ(p + q, ear_formula_euler(pp, r, s));
  }
}

TEST(Composition, Cactus) {
  const Graph c(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  ASSERT_TRUE(is_cactus(c));
  EXPECT_EQ(cactus_euler(c), LaurentPoly(4) * euler_of(c));
  EXPECT_FALSE(is_cactus(dipole(3)));
  EXPECT_THROW(cactus_euler(dipole(3)), std::invalid_argument);
}

TEST(Composition, TreeLikeAndTv) {
  EXPECT_EQ(tree_like_compose({LaurentPoly{1, 1}, LaurentPoly{2}}), (LaurentPoly{2, 2}));
  EXPECT_THROW(tree_like_compose({}), std::invalid_argument);
  EXPECT_EQ(perturbation_tv_bound(LaurentPoly{3, 1}, LaurentPoly{0, 0, 0}), 0);
  EXPECT_EQ(perturbation_tv_bound(LaurentPoly{2}, LaurentPoly{1, -1}), Rational(1));
}

TEST(Recurrences, PrintedInitialSatisfies) {
  for (auto w : {CnRecurrence::genus6, CnRecurrence::euler10, CnRecurrence::euler6}) {
    const auto s = cn2_recurrences(w, 20);
    int bad = -1;
    EXPECT_TRUE(satisfies_recurrence(w, s, &bad)) << bad;
  }
  auto s = cn2_recurrences(CnRecurrence::genus6, 10);
  s[8] += LaurentPoly(1);
  int bad = -1;
  EXPECT_FALSE(satisfies_recurrence(CnRecurrence::genus6, s, &bad));
  EXPECT_EQ(bad, 9);
}

TEST(Recurrences, EngineEulerSatisfiesBoth) {
  const auto s = family_series(named_family("doubled_cycle", FaceMode::euler), 16);
  EXPECT_TRUE(satisfies_recurrence(CnRecurrence::euler10, s));
  EXPECT_TRUE(satisfies_recurrence(CnRecurrence::euler6, s));
}
