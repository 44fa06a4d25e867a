#include "gdist/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gdist {

Float to_float(const Rational& q) { return Float(q.get_num().get_str()) / Float(q.get_den().get_str()); }

std::string float_str(const Float& f, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << f;
  return os.str();
}

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

Float eval_laurent(const LaurentPoly& p, const Float& x) {
  if (p.is_zero()) return 0;
  Float acc = 0;
  const auto& d = p.dense();
  for (std::size_t i = d.size(); i-- > 0;) acc = acc * x + to_float(d[i]);
  return acc * pow(x, p.low());
}

Complex eval_laurent(const LaurentPoly& p, const Complex& x) {
  if (p.is_zero()) return 0;
  Complex acc = 0;
  const auto& d = p.dense();
  for (std::size_t i = d.size(); i-- > 0;) acc = acc * x + Complex(to_float(d[i]));
  return acc * pow(x, p.low());
}

Float eval_bivar(const BivarPoly& b, const Float& x, const Float& t) {
  Float acc = 0;
  for (int k = b.degree(); k >= 0; --k) acc = acc * t + eval_laurent(b[static_cast<std::size_t>(k)], x);
  return acc;
}

Rational eval_bivar(const BivarPoly& b, const Rational& x, const Rational& t) {
  Rational acc = 0;
  for (int k = b.degree(); k >= 0; --k) acc = acc * t + b[static_cast<std::size_t>(k)].eval(x);
  return acc;
}

std::vector<Complex> coeffs_at(const BivarPoly& den, const Rational& x0) {
  std::vector<Complex> c;
  for (const auto& q : den.at_x(x0)) c.emplace_back(to_float(q));
  return c;
}

// Continued-fraction convergents of a real number, tested exactly as roots.
std::optional<Rational> recognize_rational_root(const std::vector<Rational>& poly, const Float& x) {
  Float y = x;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 60; ++it) {
    Float a = floor(y);
    std::string digits = a.str(0, std::ios_base::fixed);
    digits = digits.substr(0, digits.find('.'));
    BigInt ai(digits);
    BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    Rational v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * cand + poly[i];
    // A convergent can hit a different root of the polynomial; it must also be close to x.
    if (v == 0 && abs(to_float(cand) - x) <= (abs(x) + 1) * Float("1e-30")) return cand;
    if (abs(k1) > BigInt("1000000000000000000")) break;
    Float frac = y - a;
    if (frac < Float("1e-40")) break;
    y = 1 / frac;
  }
  return std::nullopt;
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

Rational eval_q(const std::vector<Rational>& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

Float newton_root(const BivarPoly& den, const BivarPoly& dt, const Float& x, Float t) {
  for (int it = 0; it < 200; ++it) {
    const Float step = eval_bivar(den, x, t) / eval_bivar(dt, x, t);
    t -= step;
    if (abs(step) <= abs(t) * Float("1e-48")) break;
  }
  return t;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && abs(c.back()) == 0) c.pop_back();
  std::vector<Complex> roots;
  std::size_t lead_zero = 0;
  while (lead_zero < c.size() && abs(c[lead_zero]) == 0) ++lead_zero;
  for (std::size_t i = 0; i < lead_zero && lead_zero < c.size(); ++i) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(std::min(lead_zero, c.size())));
  if (c.size() < 2) return roots;
  const std::size_t n = c.size() - 1;
  const Complex lead = c.back();
  for (auto& v : c) v /= lead;
  std::vector<Complex> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * Float(static_cast<long>(i)));

  Float radius = pow(abs(c[0]), Float(1) / Float(static_cast<long>(n)));
  if (radius == 0) radius = 1;
  const Float pi = boost::math::constants::pi<Float>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Float ang = 2 * pi * Float(static_cast<long>(k)) / Float(static_cast<long>(n)) + Float("0.4");
    z[k] = Complex(radius * cos(ang), radius * sin(ang));
  }
  const Float tol("1e-46");
  for (int it = 0; it < 5000; ++it) {
    Float worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex p = horner(c, z[k]);
      if (abs(p) == 0) continue;
      const Complex ratio = p / horner(dc, z[k]);
      Complex s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex w = ratio / (Complex(1) - ratio * s);
      z[k] -= w;
      const Float rel = abs(w) / std::max(abs(z[k]), Float("1e-30"));
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

SingularityReport dominant_root(const BivarPoly& den, const Rational& x0) {
  if (den.is_zero()) throw SingularityError("zero denominator");
  std::vector<Rational> q = den.at_x(x0);
  while (!q.empty() && q.back() == 0) q.pop_back();
  if (q.size() < 2) throw SingularityError("denominator is constant in t at x = " + to_string(x0));
  if (q[0] == 0) throw SingularityError("denominator vanishes at t = 0");
  auto roots = poly_roots(coeffs_at(den, x0));
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) { return abs(a) < abs(b); });
  SingularityReport rep;
  rep.x0 = x0;
  rep.r = roots[0];
  const Float rm = abs(rep.r);
  const Float cluster = rm * Float("1e-12");
  int mult = 0;
  std::optional<Float> next;
  for (const auto& z : roots) {
    if (abs(z - rep.r) <= cluster)
      ++mult;
    else if (!next)
      next = abs(z);
  }
  if (abs(rep.r.imag()) <= rm * Float("1e-30")) {
    rep.r = Complex(rep.r.real(), 0);
    rep.r_exact = recognize_rational_root(q, rep.r.real());
  }
  if (rep.r_exact) {
    // Exact multiplicity from successive derivatives.
    mult = 0;
    auto d = q;
    while (!d.empty() && eval_q(d, *rep.r_exact) == 0) {
      ++mult;
      d = poly_derivative(d);
    }
  }
  rep.multiplicity = mult;
  rep.simple = mult == 1;
  bool tie = false;
  for (const auto& z : roots)
    if (abs(z - rep.r) > cluster && abs(abs(z) - rm) <= cluster) tie = true;
  rep.unique = !tie;
  rep.separation = next ? (*next - rm) / rm : Float(0);
  return rep;
}

SingularityReport mean_variance_at(const BivarPoly& den, const Rational& x0) {
  SingularityReport rep = dominant_root(den, x0);
  if (!rep.unique) throw SingularityError("tie in minimum modulus at x = " + to_string(x0));
  if (!rep.simple) throw SingularityError("dominant root is not simple at x = " + to_string(x0));
  if (rep.r.imag() != 0) throw SingularityError("dominant root is not real at x = " + to_string(x0));
  const BivarPoly bt = den.d_dt(), bx = den.d_dx();
  const BivarPoly btt = bt.d_dt(), bxt = bx.d_dt(), bxx = bx.d_dx();

  if (rep.r_exact) {
    const Rational r = *rep.r_exact;
    const Rational vt = eval_bivar(bt, x0, r);
    if (vt == 0) throw SingularityError("B_t vanishes at the dominant root");
    const Rational r1 = -eval_bivar(bx, x0, r) / vt;
    const Rational r2 = -(eval_bivar(bxx, x0, r) + 2 * eval_bivar(bxt, x0, r) * r1 + eval_bivar(btt, x0, r) * r1 * r1) / vt;
    const Rational mu = -x0 * r1 / r;
    const Rational dmu = -r1 / r - x0 * (r2 / r - r1 * r1 / (r * r));
    rep.mu_exact = mu;
    rep.sigma2_exact = x0 * dmu;
    rep.mu = to_float(mu);
    rep.sigma2 = to_float(*rep.sigma2_exact);
  } else {
    const Float x = to_float(x0), r = rep.r.real();
    const Float vt = eval_bivar(bt, x, r);
    if (vt == 0) throw SingularityError("B_t vanishes at the dominant root");
    const Float r1 = -eval_bivar(bx, x, r) / vt;
    const Float r2 = -(eval_bivar(bxx, x, r) + 2 * eval_bivar(bxt, x, r) * r1 + eval_bivar(btt, x, r) * r1 * r1) / vt;
    rep.mu = -x * r1 / r;
    rep.sigma2 = x * (-r1 / r - x * (r2 / r - r1 * r1 / (r * r)));
  }

  // Central differences on r(x) tracked by Newton from the dominant root.
  const Float x = to_float(x0);
  const Float h = Float("1e-10") * std::max(Float(1), abs(x));
  const Float r0 = rep.r.real();
  auto root_at = [&](const Float& xv) { return newton_root(den, bt, xv, r0); };
  auto mu_at = [&](const Float& xv) { return -xv * (root_at(xv + h) - root_at(xv - h)) / (2 * h * root_at(xv)); };
  rep.mu_fd = mu_at(x);
  rep.sigma2_fd = x * (mu_at(x + h) - mu_at(x - h)) / (2 * h);
  auto rel = [](const Float& a, const Float& b) {
    const Float scale = std::max(abs(a), abs(b));
    return scale < Float("1e-30") ? abs(a - b) : abs(a - b) / scale;
  };
  rep.fd_rel_error = std::max(rel(rep.mu, rep.mu_fd), rel(rep.sigma2, rep.sigma2_fd));
  rep.has_moments = true;
  return rep;
}

bool aperiodic_on_circle(const BivarPoly& den, const Rational& x0, int samples) {
  const SingularityReport base = dominant_root(den, x0);
  const Float rm = abs(base.r);
  const Float pi = boost::math::constants::pi<Float>();
  const Float xm = to_float(x0);
  for (int s = 1; s < samples; ++s) {
    const Float th = 2 * pi * Float(s) / Float(samples);
    const Complex x(xm * cos(th), xm * sin(th));
    std::vector<Complex> c;
    for (const auto& p : den.coeffs()) c.push_back(eval_laurent(p, x));
    Float best = -1;
    for (const auto& z : poly_roots(c))
      if (best < 0 || abs(z) < best) best = abs(z);
    if (best >= 0 && best <= rm * (1 + Float("1e-12"))) return false;
  }
  return true;
}

std::string SingularityReport::str() const {
  std::ostringstream os;
  os << "x0 = " << to_string(x0) << "\n";
  os << "r = " << (r_exact ? to_string(*r_exact) : float_str(r.real(), 30));
  if (!r_exact && r.imag() != 0) os << " + " << float_str(r.imag(), 30) << "i";
  os << "\nmultiplicity = " << multiplicity << (unique ? ", unique" : ", tie") << ", separation = "
     << float_str(separation, 12) << "\n";
  if (has_moments) {
    os << "mu = " << (mu_exact ? to_string(*mu_exact) : float_str(mu, 30)) << "\n";
    os << "sigma2 = " << (sigma2_exact ? to_string(*sigma2_exact) : float_str(sigma2, 30)) << "\n";
    os << "central difference: mu = " << float_str(mu_fd, 20) << ", sigma2 = " << float_str(sigma2_fd, 20)
       << ", relative error = " << float_str(fd_rel_error, 3) << "\n";
  }
  return os.str();
}

DistStats dist_stats(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("dist_stats: zero polynomial");
  if (!p.nonnegative()) throw std::invalid_argument("dist_stats: negative coefficient");
  DistStats s;
  s.total = p.sum_coeffs();
  const LaurentPoly d1 = p.derivative();
  const Rational m1 = d1.eval(1), m2 = d1.derivative().eval(1);
  s.mean = m1 / s.total;
  s.variance = m2 / s.total + s.mean - s.mean * s.mean;
  s.low = p.low();
  s.high = p.high();
  for (const auto& c : p.dense()) s.normalized.push_back(Rational(c / s.total).get_d());
  return s;
}

double ks_to_normal(const LaurentPoly& p, double mean, double var) {
  if (!(var > 0)) throw std::invalid_argument("ks_to_normal: variance must be positive");
  const DistStats s = dist_stats(p);
  const double sd = std::sqrt(var);
  double cdf = 0, worst = 0;
  for (std::size_t i = 0; i < s.normalized.size(); ++i) {
    cdf += s.normalized[i];
    const double k = s.low + static_cast<double>(i);
    const double phi = 0.5 * std::erfc(-(k + 0.5 - mean) / (sd * std::sqrt(2.0)));
    worst = std::max(worst, std::fabs(std::min(cdf, 1.0) - phi));
  }
  return worst;
}

Rational tv_distance(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("tv_distance: zero polynomial");
  if (!p.nonnegative() || !q.nonnegative()) throw std::invalid_argument("tv_distance: negative coefficient");
  const Rational tp = p.sum_coeffs(), tq = q.sum_coeffs();
  const int lo = std::min(p.low(), q.low()), hi = std::max(p.high(), q.high());
  Rational sum = 0;
  for (int e = lo; e <= hi; ++e) sum += abs(p.coeff(e) / tp - q.coeff(e) / tq);
  return sum / 2;
}

LocalLimit local_limit_estimate(int n, int g) {
  if (n <= 0 || g <= 0 || 2 * g >= n) throw std::invalid_argument("local_limit_estimate: need 0 < g/n < 1/2");
  const Float ratio = Float(2 * g) / Float(n);
  const Float t = 1 / (1 - ratio);
  const Float pi = boost::math::constants::pi<Float>();
  LocalLimit out;
  out.t = static_cast<double>(t);
  out.log_value = log(t / 3) + log(2 * t * (t * t - 1) / (pi * n)) / 2 + Float(g) * log(3 / (t * t - 1)) +
                  Float(n) * log(2 * (1 + t));
  out.value = exp(out.log_value);
  return out;
}

std::vector<NormalityRow> normality_report(const std::vector<LaurentPoly>& series, const std::vector<int>& ns,
                                           double mu, double sigma2) {
  std::vector<NormalityRow> rows;
  for (int n : ns) {
    if (n < 1 || n > static_cast<int>(series.size()))
      throw std::invalid_argument("normality_report: n = " + std::to_string(n) + " outside the series");
    const DistStats s = dist_stats(series[static_cast<std::size_t>(n - 1)]);
    NormalityRow r;
    r.n = n;
    r.mean = s.mean.get_d();
    r.variance = s.variance.get_d();
    r.target_mean = mu * n;
    r.target_variance = sigma2 * n;
    r.ks = ks_to_normal(series[static_cast<std::size_t>(n - 1)], r.target_mean, r.target_variance);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace gdist
