#include "gdist/bivar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gdist {

BivarPoly::BivarPoly(std::vector<LaurentPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

BivarPoly BivarPoly::monomial_t(const LaurentPoly& c, int k) {
  std::vector<LaurentPoly> v(static_cast<std::size_t>(k + 1));
  v[static_cast<std::size_t>(k)] = c;
  return BivarPoly(std::move(v));
}

void BivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const LaurentPoly& BivarPoly::operator[](std::size_t k) const { return c_.at(k); }

LaurentPoly BivarPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

void BivarPoly::set(int k, const LaurentPoly& v) {
  if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k + 1));
  c_[static_cast<std::size_t>(k)] = v;
  trim();
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BivarPoly(std::move(out));
}

BivarPoly operator*(const LaurentPoly& s, const BivarPoly& b) {
  std::vector<LaurentPoly> out = b.c_;
  for (auto& c : out) c = s * c;
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::truncated(int n) const {
  if (n < 0) return {};
  std::vector<LaurentPoly> v(c_.begin(), c_.begin() + std::min<long>(n + 1, static_cast<long>(c_.size())));
  return BivarPoly(std::move(v));
}

std::vector<Rational> BivarPoly::at_x(const Rational& x0) const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.eval(x0));
  return out;
}

BivarPoly BivarPoly::d_dt() const {
  std::vector<LaurentPoly> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Rational(static_cast<long>(k)));
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::d_dx() const {
  std::vector<LaurentPoly> out;
  for (const auto& c : c_) out.push_back(c.derivative());
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::x_shifted(int k) const {
  std::vector<LaurentPoly> out;
  for (const auto& c : c_) out.push_back(c.shifted(k));
  return BivarPoly(std::move(out));
}

bool BivarPoly::x_polynomial() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

std::string BivarPoly::str(const std::string& tvar, const std::string& xvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str(xvar) << ")";
    if (k >= 1) os << "*" << tvar;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

BivarPoly pow(const BivarPoly& p, unsigned k) {
  BivarPoly r = BivarPoly::constant(LaurentPoly(1)), b = p;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

namespace {

struct BivarParser {
  const std::string& s;
  std::string tvar, xvar;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bivariate parse error (" + what + ") in: " + s);
  }
  BivarPoly expr() {
    BivarPoly acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      BivarPoly t = product();
      if (neg)
        acc -= t;
      else
        acc += t;
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return acc;
  }
  BivarPoly product() {
    BivarPoly acc = power();
    while (true) {
      ws();
      if (eat('*')) {
        acc = acc * power();
      } else if (i < s.size() && (s[i] == '(' || s.compare(i, tvar.size(), tvar) == 0 ||
                                  s.compare(i, xvar.size(), xvar) == 0)) {
        acc = acc * power();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }
  BivarPoly power() {
    BivarPoly base = atom();
    if (eat('^')) {
      ws();
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i) fail("exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(s.substr(st, i - st))));
    }
    return base;
  }
  BivarPoly atom() {
    ws();
    if (eat('(')) {
      BivarPoly e = expr();
      if (!eat(')')) fail("missing )");
      return e;
    }
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t st = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      return BivarPoly::constant(LaurentPoly(parse_rational(s.substr(st, i - st))));
    }
    if (s.compare(i, tvar.size(), tvar) == 0) {
      i += tvar.size();
      return BivarPoly::monomial_t(LaurentPoly(1), 1);
    }
    if (s.compare(i, xvar.size(), xvar) == 0) {
      i += xvar.size();
      return BivarPoly::constant(LaurentPoly::x());
    }
    fail("unexpected token");
  }
};

}  // namespace

BivarPoly parse_bivar(const std::string& text, const std::string& tvar, const std::string& xvar) {
  BivarParser p{text, tvar, xvar};
  BivarPoly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

RationalGF::RationalGF(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalGF: zero denominator");
}

std::vector<LaurentPoly> RationalGF::expand(int n) const {
  const LaurentPoly& d0 = den_[0];
  if (d0.is_zero() || d0.term_count() != 1)
    throw std::domain_error("RationalGF::expand: denominator constant term is not a monomial");
  const LaurentPoly inv = LaurentPoly::monomial(Rational(1) / d0.coeff(d0.low()), -d0.low());
  std::vector<LaurentPoly> out(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    LaurentPoly acc = num_.coeff(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j)
      acc -= den_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * inv;
  }
  return out;
}

SeriesPrefix RationalGF::series(int n) const {
  auto full = expand(n);
  return SeriesPrefix(full.begin() + 1, full.end());
}

bool RationalGF::equivalent(const RationalGF& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalGF::str(const std::string& tvar) const {
  return "[" + num_.str(tvar) + "] / [" + den_.str(tvar) + "]";
}

}  // namespace gdist
