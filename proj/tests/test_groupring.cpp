#include "gdist/embedding.hpp"
#include "gdist/groupring.hpp"
#include "gdist/verify.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace gdist;

namespace {

const LaurentPoly X = LaurentPoly::x();

Perm cyc(const PointSet& s, const std::vector<std::vector<int>>& c) { return Perm::from_cycles(s, c); }

}  // namespace

TEST(Perm, CyclesAndCompose) {
  const Perm p = cyc({1, 2, 3, 4, 5}, {{1, 2, 5}, {3, 4}});
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(5), 1);
  EXPECT_EQ(p.str(), "(1,2,5)(3,4)");
  const Perm q = compose(p, p);
  EXPECT_EQ(q.str(), "(1,5,2)(3)(4)");
  EXPECT_THROW(cyc({1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST(Ring, Products) {
  const PointSet s{1, 2};
  const auto swap = GroupRingElem::single(cyc(s, {{1, 2}}));
  const auto id = GroupRingElem::identity(s);
  EXPECT_EQ(id * swap, swap);
  const auto e = swap + X * id;
  EXPECT_EQ(e * swap, id + X * swap);
}

TEST(Ring, DisjointSupportsCommute) {
  const auto a = GroupRingElem::single(cyc({0, 1, 2}, {{0, 1, 2}}), LaurentPoly{1, 1});
  const auto b = GroupRingElem::single(cyc({5, 6}, {{5, 6}}), X) + GroupRingElem::identity({5, 6}, 3);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b).support(), (PointSet{0, 1, 2, 5, 6}));
}

TEST(Proj, Restriction) {
  const auto e = GroupRingElem::single(cyc({1, 2, 3, 4, 5}, {{1, 2, 5}, {3, 4}}));
  const auto p = proj(e, {1, 2, 3});
  EXPECT_EQ(p, GroupRingElem::single(cyc({1, 2, 3}, {{1, 2}})));
  EXPECT_EQ(proj(e, e.support()), e);
  const auto two = e + GroupRingElem::identity(e.support(), LaurentPoly{0, 2});
  const auto empty = proj(two, {});
  EXPECT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty.coeff_sum(), (LaurentPoly{1, 2}));
  EXPECT_THROW(proj(e, {1, 9}), std::invalid_argument);
}

TEST(FaceProj, CountsAvoidedCycles) {
  const PointSet full{1, 2, 3, 4, 5};
  EXPECT_EQ(face_proj(GroupRingElem::identity(full), {1, 2}), GroupRingElem::identity({1, 2}, pow(X, 3)));
  const auto e = GroupRingElem::single(cyc(full, {{1, 2, 5}, {3, 4}}));
  // (3,4) misses {1,2}; (1,2,5) meets it.
  EXPECT_EQ(face_proj(e, {1, 2}), GroupRingElem::single(cyc({1, 2}, {{1, 2}}), X));
  EXPECT_EQ(face_proj(e, {1, 2, 5}), GroupRingElem::single(cyc({1, 2, 5}, {{1, 2, 5}}), X));
}

TEST(FaceProj, MulFaceProjMatchesProduct) {
  std::mt19937_64 rng(3);
  const PointSet s{0, 1, 2, 3, 4, 5};
  for (int t = 0; t < 20; ++t) {
    GroupRingElem a(s), b(s);
    for (int k = 0; k < 3; ++k) {
      std::vector<int> ia(s), ib(s);
      std::shuffle(ia.begin(), ia.end(), rng);
      std::shuffle(ib.begin(), ib.end(), rng);
      a.add(Perm{s, ia}, LaurentPoly(k + 1));
      b.add(Perm{s, ib}, X);
    }
    const PointSet sub{0, 2, 3};
    EXPECT_EQ(mul_face_proj(a, b, sub), face_proj(a * b, sub));
  }
}

TEST(CyclicSum, TermCounts) {
  const auto one = cyclic_sum_element({{0, 1, 2}}, false);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(one.coeff(cyc({0, 1, 2}, {{0, 1, 2}})), LaurentPoly(1));
  EXPECT_EQ(one.coeff(cyc({0, 1, 2}, {{0, 2, 1}})), LaurentPoly(1));
  EXPECT_EQ(cyclic_sum_element({{0, 1}, {2, 3}}, false).size(), 1u);
  EXPECT_EQ(cyclic_sum_element({{0, 1, 2, 3}, {4, 5, 6}}, false).size(), 12u);
  EXPECT_THROW(cyclic_sum_element({{0, 1}, {}}, false), std::invalid_argument);
  EXPECT_THROW(cyclic_sum_element({{0, 1}, {1, 2}}, false), std::invalid_argument);
}

TEST(FaceElement, SmallGraphs) {
  const auto k2 = face_element(path_graph(2), FaceMode::orientable);
  EXPECT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2.coeff(cyc({0, 1}, {{0, 1}})), LaurentPoly(1));
  const auto b1 = face_element(bouquet(1), FaceMode::orientable);
  EXPECT_EQ(b1, GroupRingElem::identity({0, 1}));
  EXPECT_EQ(genus_poly_from_face_element(k2, 2, 1, FaceMode::orientable), LaurentPoly(1));
  EXPECT_EQ(genus_poly_from_face_element(face_element(bouquet(2), FaceMode::orientable), 1, 2, FaceMode::orientable),
            (LaurentPoly{4, 2}));
  EXPECT_EQ(genus_poly_from_face_element(face_element(dipole(3), FaceMode::orientable), 2, 3, FaceMode::orientable),
            (LaurentPoly{2, 2}));
}

TEST(FaceElement, DumpFormat) {
  EXPECT_EQ(face_element(path_graph(2), FaceMode::orientable).dump(), "(0,1)\t1\n");
}

TEST(FaceElement, BlowUpFactorization) {
  for (auto mode : {FaceMode::orientable, FaceMode::euler}) {
    const Graph b2 = bouquet(2);
    EXPECT_EQ(face_element(b2, mode), cyclic_sum_element({b2.darts_at(0)}, mode) * face_element(blow_up(b2, {0}), mode));
  }
}

TEST(FaceElement, SignedCalibration) {
  const auto rep = calibrate_signed();
  EXPECT_TRUE(rep.consistent) << rep.str();
}

TEST(FaceElement, GenusFromFaceElementMatchesOracle) {
  std::mt19937_64 rng(19);
  RandomGraphParams p{4, 5, 4000};
  for (int i = 0; i < 25; ++i) {
    const Graph g = random_multigraph(rng, p);
    const int v = g.vertex_count(), e = g.edge_count(), c = g.components();
    EXPECT_EQ(genus_poly_from_face_element(face_element(g, FaceMode::orientable), v, e, FaceMode::orientable, c),
              genus_distribution_oracle(g).poly())
        << g.str();
    EXPECT_EQ(genus_poly_from_face_element(face_element(g, FaceMode::euler), v, e, FaceMode::euler, c),
              euler_distribution_oracle(g).euler.poly())
        << g.str();
  }
}

TEST(FaceElement, Budget) {
  OracleOptions o;
  o.budget = 5;
  EXPECT_THROW(face_element(dipole(4), FaceMode::orientable, o), BudgetExceeded);
}
