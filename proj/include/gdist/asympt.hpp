#pragma once

#include "gdist/bivar.hpp"
#include "gdist/laurent.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gdist {

using Float = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Float to_float(const Rational& q);
std::string float_str(const Float& f, int digits = 20);

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All complex roots of sum c_k t^k (Aberth iteration, Newton polish).
std::vector<Complex> poly_roots(const std::vector<Complex>& c);

struct SingularityReport {
  Rational x0;
  Complex r;                      // dominant root
  std::optional<Rational> r_exact;
  int multiplicity = 1;
  bool simple = false;
  bool unique = false;            // minimal modulus attained once, up to 1e-12 relative
  Float separation = 0;           // (|second| - |r|) / |r|

  bool has_moments = false;
  std::optional<Rational> mu_exact, sigma2_exact;
  Float mu = 0, sigma2 = 0;
  Float mu_fd = 0, sigma2_fd = 0;  // central differences
  Float fd_rel_error = 0;          // max relative disagreement

  std::string str() const;
};

SingularityReport dominant_root(const BivarPoly& den, const Rational& x0);
// Implicit differentiation of den(x, r(x)) = 0; exact when r(x0) is rational.
SingularityReport mean_variance_at(const BivarPoly& den, const Rational& x0);
// Whether |r(x0 e^{i theta})| > r(x0) on `samples` points of the circle (theta != 0).
bool aperiodic_on_circle(const BivarPoly& den, const Rational& x0, int samples = 64);

struct DistStats {
  Rational total, mean, variance;
  int low = 0, high = 0;
  std::vector<double> normalized;  // P(X = low + i)
};

DistStats dist_stats(const LaurentPoly& p);

// Kolmogorov distance to N(mean, var) with the continuity correction k + 1/2.
double ks_to_normal(const LaurentPoly& p, double mean, double var);
Rational tv_distance(const LaurentPoly& p, const LaurentPoly& q);

struct LocalLimit {
  double t = 0;
  Float log_value = 0;
  Float value = 0;
};

// gamma_g(C_n^2) estimate; requires 0 < g/n < 1/2.
LocalLimit local_limit_estimate(int n, int g);

struct NormalityRow {
  int n = 0;
  double mean = 0, variance = 0;
  double target_mean = 0, target_variance = 0;
  double ks = 0;
};

// `series[k]` is term k+1. Rows for each requested n against N(mu n, sigma2 n).
std::vector<NormalityRow> normality_report(const std::vector<LaurentPoly>& series, const std::vector<int>& ns,
                                           double mu, double sigma2);

}  // namespace gdist
