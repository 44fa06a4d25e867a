#pragma once

#include "gdist/laurent.hpp"

#include <string>
#include <vector>

namespace gdist {

using QMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct LinearSolveResult {
  bool consistent = false;
  int rank = 0;
  int unknowns = 0;
  std::vector<Rational> x;  // free variables set to zero
  bool unique() const { return consistent && rank == unknowns; }
};

// Exact Gaussian elimination over Q.
LinearSolveResult solve_linear(QMatrix a, std::vector<Rational> b);

// Polynomial through (xs[i], ys[i]) via Newton divided differences.
LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// det(lambda*I - m), coefficients of lambda^0..lambda^n.
std::vector<LaurentPoly> charpoly(const PolyMatrix& m);
std::vector<Rational> charpoly(const QMatrix& m);
// Division-free Berkowitz; used directly for small matrices.
std::vector<LaurentPoly> charpoly_berkowitz(const PolyMatrix& m);

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
QMatrix eval_matrix(const PolyMatrix& m, const Rational& x0);
// p(m) with p given by coefficients of lambda^0..; used for Cayley-Hamilton checks.
QMatrix eval_poly_at_matrix(const std::vector<Rational>& p, const QMatrix& m);

struct PrimitivityReport {
  bool primitive = false;
  int witness_power = 0;               // first all-positive power, or the bound
  std::vector<std::vector<int>> pattern;  // zero pattern of m^witness_power (1 = positive)
  std::string str() const;
};

// Positivity of m^n for n up to the Wielandt bound (dim-1)^2+1.
PrimitivityReport primitivity_check(const QMatrix& m);

}  // namespace gdist
