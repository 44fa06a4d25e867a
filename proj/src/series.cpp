#include "gdist/series.hpp"

#include "gdist/matrix.hpp"

#include <algorithm>
#include <optional>

namespace gdist {

namespace {

// Denominator q_1..q_q of a univariate Pade fit with numerator degree p, or nullopt
// when the equations n = p+1..last are inconsistent. `unique` reports full rank.
std::optional<std::vector<Rational>> univariate_den(const std::vector<Rational>& s, int p, int q,
                                                    int last, bool& unique) {
  // s[n] is the coefficient of t^n, s[0] = 0.
  QMatrix a;
  std::vector<Rational> b;
  for (int n = p + 1; n <= last; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(q));
    for (int j = 1; j <= q; ++j)
      if (n - j >= 0) row[static_cast<std::size_t>(j - 1)] = s[static_cast<std::size_t>(n - j)];
    a.push_back(std::move(row));
    b.push_back(-s[static_cast<std::size_t>(n)]);
  }
  if (q == 0) {
    for (const auto& v : b)
      if (v != 0) return std::nullopt;
    unique = true;
    return std::vector<Rational>{};
  }
  auto res = solve_linear(std::move(a), std::move(b));
  if (!res.consistent) return std::nullopt;
  unique = res.unique();
  return res.x;
}

bool univariate_matches(const std::vector<Rational>& s, int p, const std::vector<Rational>& den) {
  // Numerator from the first p+1 terms, then check every term.
  const int q = static_cast<int>(den.size());
  const int n_max = static_cast<int>(s.size()) - 1;
  for (int n = p + 1; n <= n_max; ++n) {
    Rational acc = s[static_cast<std::size_t>(n)];
    for (int j = 1; j <= q && j <= n; ++j)
      acc += den[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(n - j)];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Rational> eval_prefix(const SeriesPrefix& prefix, const Rational& x0) {
  std::vector<Rational> s(prefix.size() + 1);
  for (std::size_t i = 0; i < prefix.size(); ++i) s[i + 1] = prefix[i].eval(x0);
  return s;
}

Rational sample_point(int k) {
  // Small rationals away from 0 and -1, where family series tend to degenerate.
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const long base = primes[k % 16];
  const long den = 1 + k / 16;
  Rational r(base * 7 + k, den * 3);
  r.canonicalize();
  return r;
}

}  // namespace

PadeResult reconstruct_rational_gf(const SeriesPrefix& prefix_in, int p_max, int q_max, int guard) {
  if (p_max < 0 || q_max < 0 || guard < 0) throw std::invalid_argument("negative Pade bounds");
  const int n_terms = static_cast<int>(prefix_in.size());
  if (n_terms < guard + 1) throw ReconstructionError("series prefix too short");

  // Shift away negative x-exponents.
  int shift = 0;
  for (const auto& c : prefix_in)
    if (!c.is_zero()) shift = std::min(shift, c.low());
  SeriesPrefix prefix = prefix_in;
  if (shift < 0)
    for (auto& c : prefix) c = c.shifted(-shift);

  const int last = n_terms - guard;
  // Degree detection at generic points, iterative deepening in q.
  int best_p = -1, best_q = -1;
  for (int probe = 0; probe < 2; ++probe) {
    const auto s = eval_prefix(prefix, sample_point(probe));
    int fq = -1, fp = -1;
    for (int q = 0; q <= q_max && fq < 0; ++q)
      for (int p = 0; p <= p_max; ++p) {
        if (last - p < q) break;
        bool unique = false;
        auto den = univariate_den(s, p, q, last, unique);
        if (den && univariate_matches(s, p, *den)) {
          fq = q;
          fp = p;
          break;
        }
      }
    if (fq < 0) throw ReconstructionError("no rational function within the degree bounds");
    best_q = std::max(best_q, fq);
    best_p = std::max(best_p, fp);
  }
  if (n_terms < best_p + best_q + guard)
    throw ReconstructionError("series prefix shorter than p + q + guard");

  // Interpolate each denominator coefficient in x, doubling the x-degree cap.
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> vals(static_cast<std::size_t>(best_q));
  int next_point = 0;
  auto add_point = [&]() {
    while (true) {
      Rational x0 = sample_point(next_point++);
      auto s = eval_prefix(prefix, x0);
      bool unique = false;
      auto den = univariate_den(s, best_p, best_q, last, unique);
      if (!den || !unique || !univariate_matches(s, best_p, *den)) {
        if (next_point > 4096) throw ReconstructionError("no generic sample points found");
        continue;
      }
      xs.push_back(x0);
      for (int j = 0; j < best_q; ++j) vals[static_cast<std::size_t>(j)].push_back((*den)[static_cast<std::size_t>(j)]);
      return;
    }
  };

  BivarPoly series;
  {
    std::vector<LaurentPoly> sc(static_cast<std::size_t>(n_terms + 1));
    for (int n = 1; n <= n_terms; ++n) sc[static_cast<std::size_t>(n)] = prefix[static_cast<std::size_t>(n - 1)];
    series = BivarPoly(std::move(sc));
  }
  const int cap = 512;
  for (int dx = 1; dx <= cap; dx *= 2) {
    while (static_cast<int>(xs.size()) < dx + 4) add_point();
    std::vector<LaurentPoly> qc(static_cast<std::size_t>(best_q + 1));
    qc[0] = LaurentPoly(1);
    bool ok = true;
    for (int j = 0; j < best_q && ok; ++j) {
      std::vector<Rational> px(xs.begin(), xs.begin() + dx + 1);
      std::vector<Rational> py(vals[static_cast<std::size_t>(j)].begin(), vals[static_cast<std::size_t>(j)].begin() + dx + 1);
      LaurentPoly c = interpolate(px, py);
      for (std::size_t k = static_cast<std::size_t>(dx + 1); k < xs.size() && ok; ++k)
        ok = c.eval(xs[k]) == vals[static_cast<std::size_t>(j)][k];
      qc[static_cast<std::size_t>(j + 1)] = c;
    }
    if (!ok) continue;
    BivarPoly den(qc);
    BivarPoly num = (den * series).truncated(best_p);
    RationalGF gf(num, den);
    auto check = gf.series(n_terms);
    if (check != prefix) continue;
    if (shift < 0) gf = RationalGF(num.x_shifted(shift), den);
    return PadeResult{gf, best_p, best_q, dx};
  }
  throw ReconstructionError("denominator coefficients are not polynomial in x within the cap");
}

std::vector<LaurentPoly> recurrence_from_denominator(const RationalGF& gf) {
  const BivarPoly& d = gf.den();
  if (d.is_zero() || d[0] != LaurentPoly(1))
    throw std::domain_error("denominator constant term must be 1");
  std::vector<LaurentPoly> b;
  for (int j = 1; j <= d.degree(); ++j) b.push_back(-d.coeff(j));
  return b;
}

SeriesPrefix extend_series(const std::vector<LaurentPoly>& b, const SeriesPrefix& init, int n) {
  const std::size_t k = b.size();
  if (init.size() < k) throw std::invalid_argument("extend_series: insufficient initial values");
  SeriesPrefix out(init.begin(), init.begin() + std::min<long>(n, static_cast<long>(init.size())));
  while (static_cast<int>(out.size()) < n) {
    const std::size_t m = out.size();
    LaurentPoly acc;
    for (std::size_t j = 1; j <= k; ++j) acc += b[j - 1] * out[m - j];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<std::vector<BigInt>> extend_series_int(const std::vector<LaurentPoly>& b,
                                                   const SeriesPrefix& init, int n) {
  const std::size_t k = b.size();
  if (init.size() < k) throw std::invalid_argument("extend_series_int: insufficient initial values");
  auto to_int = [](const LaurentPoly& p) {
    if (!p.is_polynomial() || !p.is_integral())
      throw std::invalid_argument("extend_series_int: needs integer polynomials");
    std::vector<BigInt> v;
    if (p.is_zero()) return v;
    v.resize(static_cast<std::size_t>(p.high() + 1));
    for (int e = p.low(); e <= p.high(); ++e) v[static_cast<std::size_t>(e)] = p.coeff(e).get_num();
    return v;
  };
  std::vector<std::vector<BigInt>> bi, out;
  for (const auto& c : b) bi.push_back(to_int(c));
  for (std::size_t i = 0; i < init.size() && static_cast<int>(i) < n; ++i) out.push_back(to_int(init[i]));
  while (static_cast<int>(out.size()) < n) {
    const std::size_t m = out.size();
    std::vector<BigInt> acc;
    for (std::size_t j = 1; j <= k; ++j) {
      const auto& bj = bi[j - 1];
      const auto& sj = out[m - j];
      if (bj.empty() || sj.empty()) continue;
      if (acc.size() < bj.size() + sj.size() - 1) acc.resize(bj.size() + sj.size() - 1);
      for (std::size_t u = 0; u < bj.size(); ++u) {
        if (bj[u] == 0) continue;
        for (std::size_t v = 0; v < sj.size(); ++v) acc[u + v] += bj[u] * sj[v];
      }
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace gdist
