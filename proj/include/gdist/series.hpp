#pragma once

#include "gdist/bivar.hpp"

#include <stdexcept>
#include <vector>

namespace gdist {

struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PadeResult {
  RationalGF gf;
  int p = 0;  // t-degree of numerator
  int q = 0;  // t-degree of denominator
  int x_degree = 0;  // x-degree cap that succeeded
};

// Rational P/Q with deg_t P <= p_max, deg_t Q <= q_max and Q(0, x) = 1 matching
// every term of the prefix; the last `guard` terms are only used for checking.
PadeResult reconstruct_rational_gf(const SeriesPrefix& prefix, int p_max, int q_max,
                                   int guard = 3);

// b_j(x) = -[t^j] Q for j = 1..deg Q, requiring [t^0] Q = 1.
std::vector<LaurentPoly> recurrence_from_denominator(const RationalGF& gf);

// s_n = sum_j b_j s_{n-j}; init holds s_1..s_m; returns s_1..s_N.
SeriesPrefix extend_series(const std::vector<LaurentPoly>& b, const SeriesPrefix& init, int n);

// The same recurrence over big integers evaluated coefficientwise; used for long runs.
std::vector<std::vector<BigInt>> extend_series_int(const std::vector<LaurentPoly>& b,
                                                   const SeriesPrefix& init, int n);

}  // namespace gdist
