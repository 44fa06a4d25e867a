#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace gdist {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Laurent polynomial in x over Q, stored densely from the lowest nonzero
// exponent. The zero polynomial has an empty coefficient vector.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c);  // NOLINT
  // Coefficients of x^0, x^1, ...
  LaurentPoly(std::initializer_list<long> coeffs);
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly x() { return monomial(Rational(1), 1); }
  static LaurentPoly monomial(const Rational& c, int e);
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);

  bool is_zero() const { return c_.empty(); }
  // Lowest and highest exponent; undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  int degree() const { return is_zero() ? -1 : high(); }
  Rational coeff(int e) const;
  const std::vector<Rational>& dense() const { return c_; }
  std::map<int, Rational> terms() const;
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& q);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& q) { return a *= q; }
  friend LaurentPoly operator*(const Rational& q, LaurentPoly a) { return a *= q; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  void add_term(const Rational& c, int e);
  // Multiply by x^k.
  LaurentPoly shifted(int k) const;
  Rational eval(const Rational& at) const;
  // p(x^k) for k != 0; k = -1 gives p(1/x).
  LaurentPoly substitute_power(int k) const;
  LaurentPoly derivative() const;
  Rational sum_coeffs() const;
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  bool is_integral() const;
  bool nonnegative() const;
  // Exact division; throws if b does not divide *this.
  LaurentPoly divexact(const LaurentPoly& b) const;
  // Polynomial division with remainder (both must be polynomials).
  static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                     LaurentPoly& r);

  // "6 + 30*x", ascending exponents; "0" for zero.
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);
LaurentPoly parse_poly(const std::string& text, const std::string& var = "x");

}  // namespace gdist
