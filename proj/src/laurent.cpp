#include "gdist/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gdist {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly::LaurentPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = e;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  while (c_.back() == 0) c_.pop_back();
}

Rational LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return Rational(0);
  return c_[static_cast<std::size_t>(e - low_)];
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace(low_ + static_cast<int>(i), c_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& v : c_) n += (v != 0);
  return n;
}

void LaurentPoly::add_term(const Rational& c, int e) {
  if (c == 0) return;
  if (is_zero()) {
    low_ = e;
    c_.assign(1, c);
    return;
  }
  if (e < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - e), Rational(0));
    low_ = e;
  } else if (e > high()) {
    c_.resize(static_cast<std::size_t>(e - low_ + 1));
  }
  c_[static_cast<std::size_t>(e - low_)] += c;
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& q) {
  if (q == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& v : c_) v *= q;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.low_ == b.low_ && a.c_ == b.c_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Rational LaurentPoly::eval(const Rational& at) const {
  if (is_zero()) return Rational(0);
  if (at == 0 && low_ < 0) throw std::domain_error("Laurent polynomial evaluated at 0");
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  if (low_ > 0) {
    Rational p(1);
    for (int i = 0; i < low_; ++i) p *= at;
    acc *= p;
  } else if (low_ < 0) {
    Rational p(1);
    for (int i = 0; i < -low_; ++i) p *= at;
    acc /= p;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k = 0");
  LaurentPoly r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.add_term(c_[i], (low_ + static_cast<int>(i)) * k);
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    if (e != 0 && c_[i] != 0) r.add_term(c_[i] * e, e - 1);
  }
  return r;
}

Rational LaurentPoly::sum_coeffs() const {
  Rational s(0);
  for (const auto& v : c_) s += v;
  return s;
}

bool LaurentPoly::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& v : c_)
    if (v < 0) return false;
  return true;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                         LaurentPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("divmod needs polynomials");
  q = LaurentPoly();
  r = a;
  const int db = b.high();
  const Rational lead = b.c_.back();
  while (!r.is_zero() && r.high() >= db) {
    LaurentPoly t = monomial(r.c_.back() / lead, r.high() - db);
    q += t;
    r -= t * b;
  }
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Normalize both to polynomials, divide, shift back.
  LaurentPoly a0 = shifted(-low_), b0 = b.shifted(-b.low_);
  LaurentPoly q, r;
  divmod(a0, b0, q, r);
  if (!r.is_zero()) throw std::domain_error("divexact: not divisible");
  return q.shifted(low_ - b.low_);
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    int e = low_ + static_cast<int>(i);
    Rational mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r(1), b = p;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::string var;
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
  bool at_var() {
    ws();
    return s.compare(i, var.size(), var) == 0;
  }
  std::string number() {
    ws();
    std::size_t st = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (st == i) throw std::invalid_argument("expected number in polynomial: " + s);
    return s.substr(st, i - st);
  }
  int exponent() {
    ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    std::string n = number();
    int e = std::stoi(n);
    return neg ? -e : e;
  }
  LaurentPoly term() {
    Rational c(1);
    int e = 0;
    bool have = false;
    ws();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = parse_rational(number());
      have = true;
      if (eat('*')) have = false;
    }
    if (!have || at_var()) {
      if (!at_var()) throw std::invalid_argument("expected variable in polynomial: " + s);
      i += var.size();
      e = 1;
      if (eat('^')) {
        if (eat('(')) {
          e = exponent();
          if (!eat(')')) throw std::invalid_argument("unbalanced exponent: " + s);
        } else {
          e = exponent();
        }
      }
    }
    return LaurentPoly::monomial(c, e);
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::string& var) {
  PolyParser p{text, var};
  LaurentPoly acc;
  p.ws();
  if (p.i == text.size()) throw std::invalid_argument("empty polynomial");
  bool neg = false;
  if (p.eat('-'))
    neg = true;
  else
    p.eat('+');
  while (true) {
    LaurentPoly t = p.term();
    acc += neg ? -t : t;
    p.ws();
    if (p.i == text.size()) break;
    if (p.eat('+'))
      neg = false;
    else if (p.eat('-'))
      neg = true;
    else
      throw std::invalid_argument("unexpected character in polynomial: " + text);
  }
  return acc;
}

}  // namespace gdist
