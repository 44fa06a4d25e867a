#include "gdist/bivar.hpp"
#include "gdist/distributions.hpp"
#include "gdist/laurent.hpp"
#include "gdist/matrix.hpp"
#include "gdist/series.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gdist;

namespace {

// Leibniz expansion of det(lambda I - m); reference for small matrices.
Rational det_shifted(const QMatrix& m, const Rational& lambda) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Rational prod = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= (i == p[i] ? lambda : Rational(0)) - m[i][p[i]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

QMatrix random_int_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  QMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (auto& row : m)
    for (auto& c : row) c = d(rng);
  return m;
}

}  // namespace

TEST(Rational, Normalized) {
  const Rational q = parse_rational("6/-4");
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
}

TEST(Laurent, Arithmetic) {
  const LaurentPoly a{4, 2}, b{6, 30};
  EXPECT_EQ((a * b).eval(1), 216);
  EXPECT_TRUE((LaurentPoly{1, 1} - LaurentPoly{1, 1}).is_zero());
  EXPECT_EQ((LaurentPoly{6, 36, 126, 120}).eval(1), 288);
  const LaurentPoly inv = LaurentPoly::monomial(Rational(1), -2) + LaurentPoly(3);
  EXPECT_EQ(inv.low(), -2);
  EXPECT_EQ(inv.eval(Rational(1, 2)), 7);
  EXPECT_EQ(inv.substitute_power(-1), (LaurentPoly{3, 0, 1}));
  EXPECT_EQ((LaurentPoly{0, 0, 3}).derivative(), (LaurentPoly{0, 6}));
  EXPECT_EQ(pow(LaurentPoly{1, 1}, 3), (LaurentPoly{1, 3, 3, 1}));
}

TEST(Laurent, Division) {
  const LaurentPoly a{1, 3, 3, 1}, b{1, 1};
  EXPECT_EQ(a.divexact(b), (LaurentPoly{1, 2, 1}));
  EXPECT_THROW((LaurentPoly{1, 0, 1}).divexact(b), std::exception);
  LaurentPoly q, r;
  LaurentPoly::divmod(LaurentPoly{2, 0, 1}, b, q, r);
  EXPECT_EQ(q * b + r, (LaurentPoly{2, 0, 1}));
  EXPECT_EQ(r, LaurentPoly(3));
}

TEST(Laurent, ParseAndPrint) {
  EXPECT_EQ(parse_poly("6 + 30*x").str(), "6 + 30*x");
  EXPECT_EQ(parse_poly("x^-1 - 1/2*x^3").str(), "x^-1 - 1/2*x^3");
  EXPECT_EQ(LaurentPoly().str(), "0");
}

TEST(Bivar, ParseExpandAndSeries) {
  const BivarPoly b = parse_bivar("(1-4*x*y^2)*(1-4*y-12*x*y^2)*(1-2*y-12*x*y^2)", "y");
  EXPECT_EQ(b.degree(), 6);
  EXPECT_EQ(b[1], LaurentPoly(-6));
  EXPECT_EQ(b[6], (LaurentPoly{0, 0, 0, -576}));
  const RationalGF geo(parse_bivar("x*t"), parse_bivar("1-x*t"));
  const auto s = geo.series(4);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[3], LaurentPoly::monomial(Rational(1), 4));
}

TEST(Pade, GeometricSeries) {
  SeriesPrefix s;
  for (int n = 1; n <= 8; ++n) s.push_back(LaurentPoly::monomial(Rational(1), n));
  const auto r = reconstruct_rational_gf(s, 2, 2, 3);
  EXPECT_TRUE(r.gf.equivalent(RationalGF(parse_bivar("x*t"), parse_bivar("1-x*t"))));
  EXPECT_EQ(r.q, 1);
}

TEST(Pade, DoubledCycleGenus) {
  const auto s = cn2_recurrences(CnRecurrence::genus6, 15);
  const auto r = reconstruct_rational_gf(s, 6, 6, 3);
  const RationalGF want(parse_bivar("288*x^2*(x+1)*t^6 - 48*x*(2*x^2-7*x-3)*t^5 - 16*(15*x^2-5*x-1)*t^4"
                                    " + 4*(4*x^2-35*x+1)*t^3 + 18*(x-1)*t^2 + 2*(x+2)*t"),
                        parse_bivar("(1-4*x*t^2)*(1-4*t-12*x*t^2)*(1-2*t-12*x*t^2)"));
  EXPECT_TRUE(r.gf.equivalent(want));
  EXPECT_EQ(r.gf.series(15), s);
  const auto b = recurrence_from_denominator(r.gf);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b[0], LaurentPoly(6));
  EXPECT_EQ(b[1], (LaurentPoly{-8, 28}));
  EXPECT_EQ(b[2], (LaurentPoly{0, -96}));
  EXPECT_EQ(b[3], (LaurentPoly{0, 32, -240}));
  EXPECT_EQ(b[4], (LaurentPoly{0, 0, 288}));
  EXPECT_EQ(b[5], (LaurentPoly{0, 0, 0, 576}));
}

TEST(Pade, RejectsShortOrInconsistent) {
  SeriesPrefix s;
  for (int n = 1; n <= 8; ++n) s.push_back(LaurentPoly(n * n * n * n * n));
  EXPECT_THROW(reconstruct_rational_gf(s, 1, 1, 3), ReconstructionError);
  EXPECT_THROW(reconstruct_rational_gf(SeriesPrefix(3, LaurentPoly(1)), 2, 2, 3), std::exception);
}

TEST(Recurrence, SimpleAndErrors) {
  const RationalGF g(parse_bivar("t"), parse_bivar("1-t"));
  EXPECT_EQ(recurrence_from_denominator(g), (std::vector<LaurentPoly>{LaurentPoly(1)}));
  EXPECT_THROW(recurrence_from_denominator(RationalGF(parse_bivar("1"), parse_bivar("t"))), std::exception);
  EXPECT_THROW(extend_series({LaurentPoly(1), LaurentPoly(1)}, {LaurentPoly(1)}, 5), std::exception);
}

TEST(Recurrence, CountIdentities) {
  const auto g = cn2_recurrences(CnRecurrence::genus6, 7);
  EXPECT_EQ(g[6].eval(1), 279936);  // 6^7
  const auto e = cn2_recurrences(CnRecurrence::euler10, 11);
  Rational want = 4096;  // 2^12 * 6^11
  for (int i = 0; i < 11; ++i) want *= 6;
  EXPECT_EQ(e[10].eval(1), want);
  const auto printed = cn2_printed_initial(CnRecurrence::euler10);
  const auto r = cn2_recurrences(CnRecurrence::euler6, 10, SeriesPrefix(printed.begin(), printed.begin() + 6));
  EXPECT_EQ(r, printed);
}

TEST(Recurrence, IntegerExtensionMatchesExact) {
  const auto b = cn2_recurrence_coeffs(CnRecurrence::genus6);
  const auto init = cn2_printed_initial(CnRecurrence::genus6);
  const auto exact = extend_series(b, init, 40);
  const auto ints = extend_series_int(b, init, 40);
  for (int n = 0; n < 40; ++n)
    for (int k = 0; k <= exact[static_cast<std::size_t>(n)].high(); ++k)
      EXPECT_EQ(Rational(ints[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]), exact[static_cast<std::size_t>(n)].coeff(k));
}

TEST(Matrix, CharpolyAgainstLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix m = random_int_matrix(rng, 4);
    const auto cp = charpoly(m);
    const LaurentPoly chi(0, cp);
    for (int l = -3; l <= 3; ++l) EXPECT_EQ(chi.eval(l), det_shifted(m, l));
    const QMatrix z = eval_poly_at_matrix(cp, m);
    for (const auto& row : z)
      for (const auto& c : row) EXPECT_EQ(c, 0);
  }
  const QMatrix id{{1, 0}, {0, 1}};
  EXPECT_EQ(charpoly(id), (std::vector<Rational>{1, -2, 1}));
}

TEST(Matrix, LargeCharpolyPathsAgree) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  PolyMatrix m(14, std::vector<LaurentPoly>(14));
  for (auto& row : m)
    for (auto& c : row) c = LaurentPoly{d(rng), d(rng)};
  EXPECT_EQ(charpoly(m), charpoly_berkowitz(m));
}

TEST(Matrix, TransferMatrixCharpoly) {
  const auto cp = charpoly(printed_transfer_matrix());
  ASSERT_EQ(cp.size(), 11u);
  EXPECT_EQ(cp[9], (LaurentPoly{-12, -26}));
  const LaurentPoly chi(0, charpoly(eval_matrix(printed_transfer_matrix(), 1)));
  EXPECT_EQ(chi.eval(12), 0);
  EXPECT_EQ(chi.derivative().eval(12), 0);
}

TEST(Matrix, Primitivity) {
  const QMatrix ones{{1, 1}, {1, 1}};
  const auto p = primitivity_check(ones);
  EXPECT_TRUE(p.primitive);
  EXPECT_EQ(p.witness_power, 1);
  QMatrix m = eval_matrix(printed_transfer_matrix(), 1);
  for (auto& row : m)
    for (auto& c : row) c /= 12;
  const auto q = primitivity_check(m);
  EXPECT_FALSE(q.primitive);
  EXPECT_EQ(q.witness_power, 82);
  EXPECT_THROW(primitivity_check(QMatrix{{1, -1}, {0, 1}}), std::exception);
}

TEST(Matrix, ReducedEulerCompanionIsPrimitive) {
  // Companion matrix of the order-6 reduced recurrence at x = 1, rows scaled to sum 1.
  const auto b = cn2_recurrence_coeffs(CnRecurrence::euler6);
  QMatrix c(6, std::vector<Rational>(6));
  for (int j = 0; j < 6; ++j) c[0][static_cast<std::size_t>(j)] = abs(b[static_cast<std::size_t>(j)].eval(1));
  for (int i = 1; i < 6; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
  for (auto& row : c) {
    Rational s = 0;
    for (const auto& v : row) s += v;
    for (auto& v : row) v /= s;
  }
  EXPECT_TRUE(primitivity_check(c).primitive);
}
