#pragma once

#include "gdist/laurent.hpp"

#include <string>
#include <vector>

namespace gdist {

// Polynomial in t with Laurent-polynomial coefficients in x.
class BivarPoly {
public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<LaurentPoly> coeffs);
  static BivarPoly constant(const LaurentPoly& c) { return BivarPoly({c}); }
  // c * t^k
  static BivarPoly monomial_t(const LaurentPoly& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const LaurentPoly& operator[](std::size_t k) const;
  LaurentPoly coeff(int k) const;
  const std::vector<LaurentPoly>& coeffs() const { return c_; }
  void set(int k, const LaurentPoly& v);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const LaurentPoly& s, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  // Keep t^0..t^n.
  BivarPoly truncated(int n) const;
  // Univariate polynomial in t at x = x0, coefficients of t^0..t^deg.
  std::vector<Rational> at_x(const Rational& x0) const;
  BivarPoly d_dt() const;
  BivarPoly d_dx() const;
  // Multiply all x-coefficients by the given power of x.
  BivarPoly x_shifted(int k) const;
  bool x_polynomial() const;

  std::string str(const std::string& tvar = "t", const std::string& xvar = "x") const;

private:
  void trim();
  std::vector<LaurentPoly> c_;
};

BivarPoly pow(const BivarPoly& p, unsigned k);
// Parse products/sums like "(1-4*x*y^2)*(1-2*y)" into a bivariate polynomial.
BivarPoly parse_bivar(const std::string& text, const std::string& tvar = "t",
                      const std::string& xvar = "x");

// Coefficients of t^1..t^N.
using SeriesPrefix = std::vector<LaurentPoly>;

class RationalGF {
public:
  RationalGF() = default;
  RationalGF(BivarPoly num, BivarPoly den);

  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  // Series coefficients of t^1..t^n (t^0 term must vanish or is dropped).
  SeriesPrefix series(int n) const;
  // Full coefficient list t^0..t^n.
  std::vector<LaurentPoly> expand(int n) const;
  // num1*den2 == num2*den1
  bool equivalent(const RationalGF& o) const;
  std::string str(const std::string& tvar = "t") const;

private:
  BivarPoly num_, den_;
};

}  // namespace gdist
