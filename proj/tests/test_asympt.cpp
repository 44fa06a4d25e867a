#include "gdist/asympt.hpp"
#include "gdist/transfer.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace gdist;

namespace {

const BivarPoly kGenusDen = parse_bivar("(1-4*x*t^2)*(1-4*t-12*x*t^2)*(1-2*t-12*x*t^2)");

// Straightforward double-precision KS with the k + 1/2 correction.
double ks_reference(const std::vector<double>& pmf, int low, double mean, double var) {
  const double sd = std::sqrt(var);
  double cdf = 0, worst = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double k = low + static_cast<double>(i);
    const double before = 0.5 * std::erfc(-((k - 0.5) - mean) / (sd * std::sqrt(2.0)));
    worst = std::max(worst, std::abs(cdf - before));
    cdf += pmf[i];
    const double after = 0.5 * std::erfc(-((k + 0.5) - mean) / (sd * std::sqrt(2.0)));
    worst = std::max(worst, std::abs(cdf - after));
  }
  return worst;
}

}  // namespace

TEST(Roots, CubicAndDominant) {
  const auto r = poly_roots({Complex(6), Complex(-7), Complex(0), Complex(1)});  // (t-1)(t-2)(t+3)
  ASSERT_EQ(r.size(), 3u);
  std::vector<double> re;
  for (const auto& z : r) {
    EXPECT_LT(std::abs(static_cast<double>(z.imag())), 1e-20);
    re.push_back(static_cast<double>(z.real()));
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -3, 1e-30);
  EXPECT_NEAR(re[1], 1, 1e-30);
  EXPECT_NEAR(re[2], 2, 1e-30);
  const auto d = dominant_root(parse_bivar("(1-2*t)*(1-3*t)"), 1);
  EXPECT_TRUE(d.simple);
  EXPECT_TRUE(d.unique);
  ASSERT_TRUE(d.r_exact.has_value());
  EXPECT_EQ(*d.r_exact, Rational(1, 3));
}

TEST(MeanVariance, DoubledCycleGenus) {
  const auto rep = mean_variance_at(kGenusDen, 1);
  ASSERT_TRUE(rep.mu_exact && rep.sigma2_exact);
  EXPECT_EQ(*rep.mu_exact, Rational(1, 4));
  EXPECT_EQ(*rep.sigma2_exact, Rational(3, 32));
  EXPECT_LT(rep.fd_rel_error, Float("1e-8"));
  EXPECT_TRUE(aperiodic_on_circle(kGenusDen, 1));
}

TEST(MeanVariance, DoubledCycleEuler) {
  const auto gf = family_rational_gf(named_family("doubled_cycle", FaceMode::euler), 6, 6, 3);
  const auto rep = mean_variance_at(gf.pade.gf.den(), 1);
  ASSERT_TRUE(rep.mu_exact && rep.sigma2_exact);
  EXPECT_EQ(*rep.mu_exact, Rational(5, 7));
  EXPECT_EQ(*rep.sigma2_exact, Rational(78, 343));
}

TEST(MeanVariance, ConstantSingularity) {
  const auto rep = mean_variance_at(parse_bivar("1-2*t"), 1);
  ASSERT_TRUE(rep.mu_exact && rep.sigma2_exact);
  EXPECT_EQ(*rep.mu_exact, 0);
  EXPECT_EQ(*rep.sigma2_exact, 0);
}

TEST(Stats, DistStats) {
  const auto s = dist_stats(LaurentPoly{6, 30});
  EXPECT_EQ(s.total, 36);
  EXPECT_EQ(s.mean, Rational(5, 6));
  EXPECT_EQ(s.variance, Rational(5, 36));
  EXPECT_EQ(s.low, 0);
  EXPECT_EQ(s.high, 1);
  EXPECT_THROW(dist_stats(LaurentPoly()), std::exception);
}

TEST(Stats, KsBinomialAgainstReference) {
  const LaurentPoly p = pow(LaurentPoly{1, 1}, 100);
  const double ks = ks_to_normal(p, 50, 25);
  EXPECT_NEAR(ks, ks_reference(dist_stats(p).normalized, 0, 50, 25), 1e-12);
  EXPECT_LT(ks, 0.005);
}

TEST(Stats, KsPointMass) {
  const LaurentPoly p = LaurentPoly::monomial(Rational(3), 5);
  EXPECT_GE(ks_to_normal(p, 5.5, 1e-6), 0.5);
  EXPECT_GE(ks_to_normal(p, 6.0, 0.01), 0.5);
}

TEST(Stats, TotalVariation) {
  const LaurentPoly p{1, 2, 1};
  EXPECT_EQ(tv_distance(p, LaurentPoly(4) * p), 0);
  EXPECT_EQ(tv_distance(LaurentPoly(1), LaurentPoly::x()), 1);
  EXPECT_EQ(tv_distance(LaurentPoly{1, 1}, LaurentPoly(1)), Rational(1, 2));
}

TEST(LocalLimit, Estimate) {
  const auto ll = local_limit_estimate(40, 10);
  EXPECT_GT(ll.value, 0);
  EXPECT_THROW(local_limit_estimate(40, 0), std::invalid_argument);
  EXPECT_THROW(local_limit_estimate(40, 20), std::invalid_argument);
}

TEST(Normality, Report) {
  std::vector<LaurentPoly> series;
  for (int n = 1; n <= 200; ++n) series.push_back(pow(LaurentPoly{1, 1}, static_cast<unsigned>(n)));
  const auto rows = normality_report(series, {50, 200}, 0.5, 0.25);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[1].mean, 100);
  EXPECT_DOUBLE_EQ(rows[1].target_variance, 50);
  EXPECT_LT(rows[1].ks, rows[0].ks);
  EXPECT_THROW(normality_report(series, {201}, 0.5, 0.25), std::exception);
}
