#include "gdist/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gdist {

LinearSolveResult solve_linear(QMatrix a, std::vector<Rational> b) {
  LinearSolveResult res;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  res.unknowns = static_cast<int>(cols);
  if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  res.rank = static_cast<int>(r);
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return res;
  res.consistent = true;
  res.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) res.x[static_cast<std::size_t>(pivot_col[i])] = b[i];
  return res;
}

LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  // Horner on the Newton form.
  LaurentPoly p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * (LaurentPoly::x() - LaurentPoly(xs[i])) + LaurentPoly(dd[i]);
  }
  return p;
}

namespace {

template <class T>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {T(1)};
  // Descending coefficients of the characteristic polynomial of the leading block.
  std::vector<T> c = {T(1), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> t(r + 2);
    t[0] = T(1);
    t[1] = -a[r][r];
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 2; k <= r + 1; ++k) {
      if (k > 2) {
        std::vector<T> w(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += a[i][j] * v[j];
        v = std::move(w);
      }
      T acc{};
      for (std::size_t j = 0; j < r; ++j) acc += a[r][j] * v[j];
      t[k] = -acc;
    }
    std::vector<T> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<Rational> hessenberg_charpoly(QMatrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      const Rational u = h[j][m - 1] / h[m][m - 1];
      for (std::size_t k = 0; k < n; ++k)
        if (h[m][k] != 0) h[j][k] -= u * h[m][k];
      for (std::size_t k = 0; k < n; ++k)
        if (h[k][j] != 0) h[k][m] += u * h[k][j];
    }
  }
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> cur(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h[m - 1][m - 1] * p[m - 1][k];
    }
    Rational t(1);
    for (std::size_t i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      if (t == 0) break;
      const Rational f = t * h[m - i - 1][m - 1];
      if (f == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] -= f * p[m - i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace

std::vector<LaurentPoly> charpoly_berkowitz(const PolyMatrix& m) { return berkowitz(m); }

std::vector<Rational> charpoly(const QMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("charpoly: matrix not square");
  return hessenberg_charpoly(m);
}

std::vector<LaurentPoly> charpoly(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("charpoly: matrix not square");
  if (n <= 12) return charpoly_berkowitz(m);
  // Evaluation/interpolation in x; the lambda^k coefficient has x-degree bounded by
  // the sum of the n-k largest row degrees.
  int lo = 0, bound = 0;
  for (const auto& row : m) {
    int hi = 0;
    for (const auto& e : row)
      if (!e.is_zero()) {
        lo = std::min(lo, e.low());
        hi = std::max(hi, e.high());
      }
    bound += hi;
  }
  if (lo < 0) bound -= lo * static_cast<int>(n);
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> vals(n + 1);
  for (int k = 0; k <= bound; ++k) {
    Rational x0(k + 1);
    QMatrix q = eval_matrix(m, x0);
    if (lo < 0) {
      Rational s(1);
      for (int i = 0; i < -lo; ++i) s *= x0;
      for (auto& row : q)
        for (auto& e : row) e *= s;
    }
    auto cp = charpoly(q);
    xs.push_back(x0);
    for (std::size_t i = 0; i <= n; ++i) vals[i].push_back(cp[i]);
  }
  std::vector<LaurentPoly> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = interpolate(xs, vals[i]);
    // Undo the x^(-lo) scaling of the matrix: lambda^i coefficient scales by s^(n-i).
    if (lo < 0) out[i] = out[i].divexact(LaurentPoly::monomial(Rational(1), -lo * static_cast<int>(n - i)));
  }
  return out;
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  PolyMatrix c(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QMatrix eval_matrix(const PolyMatrix& m, const Rational& x0) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) q[i].push_back(e.eval(x0));
  return q;
}

QMatrix eval_poly_at_matrix(const std::vector<Rational>& p, const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix acc(n, std::vector<Rational>(n));
  for (std::size_t k = p.size(); k-- > 0;) {
    QMatrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (acc[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += acc[i][l] * m[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += p[k];
    acc = std::move(next);
  }
  return acc;
}

std::string PrimitivityReport::str() const {
  std::ostringstream os;
  os << (primitive ? "primitive" : "not primitive") << " (power " << witness_power << ")\n";
  for (const auto& row : pattern) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << (row[j] ? '+' : '0');
    os << "\n";
  }
  return os.str();
}

PrimitivityReport primitivity_check(const QMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> base(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("primitivity_check: not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] < 0) throw std::invalid_argument("primitivity_check: negative entry");
      base[i][j] = m[i][j] > 0;
    }
  }
  const int bound = static_cast<int>((n - 1) * (n - 1) + 1);
  PrimitivityReport rep;
  auto cur = base;
  for (int k = 1;; ++k) {
    bool all = true;
    for (const auto& row : cur)
      for (int v : row) all = all && v;
    if (all || k == bound) {
      rep.primitive = all;
      rep.witness_power = k;
      rep.pattern = cur;
      return rep;
    }
    std::vector<std::vector<int>> next(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (cur[i][l])
          for (std::size_t j = 0; j < n; ++j) next[i][j] |= base[l][j];
    cur = std::move(next);
  }
}

}  // namespace gdist
