#include "qhaar/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qhaar {

LaurentPoly LaurentPoly::monomial(Rational coef, int exp) {
  LaurentPoly out;
  if (coef != 0) {
    out.min_exp_ = exp;
    out.c_.push_back(std::move(coef));
  }
  return out;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && min_exp_ == 0 && c_[0] == 1;
}

int LaurentPoly::lowest() const { return min_exp_; }
int LaurentPoly::highest() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }

Rational LaurentPoly::coeff(int exp) const {
  int i = exp - min_exp_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

int LaurentPoly::term_count() const {
  int n = 0;
  for (const auto& c : c_)
    if (c != 0) ++n;
  return n;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += k;
  return out;
}

std::optional<std::pair<Rational, int>> LaurentPoly::as_monomial() const {
  if (term_count() != 1) return std::nullopt;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return std::make_pair(c_[i], min_exp_ + static_cast<int>(i));
  return std::nullopt;
}

void LaurentPoly::trim() {
  size_t lo = 0, hi = c_.size();
  while (lo < hi && c_[lo] == 0) ++lo;
  while (hi > lo && c_[hi - 1] == 0) --hi;
  if (lo == hi) {
    c_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0) c_.erase(c_.begin(), c_.begin() + lo);
  c_.resize(hi - lo);
  min_exp_ += static_cast<int>(lo);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.min_exp_, b.min_exp_);
  int hi = std::max(a.highest(), b.highest());
  LaurentPoly out;
  out.min_exp_ = lo;
  out.c_.assign(hi - lo + 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out.c_[a.min_exp_ - lo + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out.c_[b.min_exp_ - lo + i] += b.c_[i];
  out.trim();
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.min_exp_ = a.min_exp_ + b.min_exp_;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
}

void LaurentPoly::scale(const Rational& c) {
  if (c == 0) {
    c_.clear();
    min_exp_ = 0;
    return;
  }
  for (auto& x : c_) x *= c;
}

Rational LaurentPoly::eval(const Rational& p0) const {
  if (is_zero()) return 0;
  if (min_exp_ < 0 && p0 == 0) throw std::domain_error("evaluation of p^negative at 0");
  // Horner over the dense range, then the power of p0 for the offset.
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p0 + *it;
  if (min_exp_ != 0) {
    Rational pw = 1;
    int e = min_exp_ < 0 ? -min_exp_ : min_exp_;
    Rational base = p0;
    for (int i = 0; i < e; ++i) pw *= base;
    if (min_exp_ < 0) acc /= pw;
    else acc *= pw;
  }
  return acc;
}

namespace {

// poly division: a, b with lowest exponent >= 0 viewed in Q[p]; returns remainder
LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
  while (!a.is_zero() && a.highest() >= b.highest()) {
    Rational f = a.coeff(a.highest()) / b.coeff(b.highest());
    a = a - (b.shifted(a.highest() - b.highest()) * LaurentPoly::monomial(f, 0));
  }
  return a;
}

// monic gcd in Q[p] of polynomials with lowest exponent >= 0
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Rational lead = a.coeff(a.highest());
    a.scale(Rational(1) / lead);
  }
  return a;
}

}  // namespace

Scalar::Scalar(int v) : num_(LaurentPoly::monomial(v, 0)) {}
Scalar::Scalar(const Rational& v) : num_(LaurentPoly::monomial(v, 0)) {}

Scalar Scalar::from_poly(LaurentPoly num) {
  Scalar s;
  s.num_ = std::move(num);
  s.canonicalize();
  return s;
}

Scalar Scalar::fraction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.canonicalize();
  return s;
}

Scalar Scalar::p_pow(int k) { return from_poly(LaurentPoly::monomial(1, k)); }
Scalar Scalar::q_pow(int k) { return p_pow(2 * k); }

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // make the denominator a polynomial with nonzero constant term
  int dshift = den_.lowest();
  if (dshift != 0) {
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);
  }
  if (!den_.is_one()) {
    if (auto m = den_.as_monomial()) {  // constant denominator: fold into numerator
      num_.scale(Rational(1) / m->first);
      den_ = LaurentPoly::one();
    } else {
      int nshift = num_.lowest();
      LaurentPoly npoly = num_.shifted(-nshift);
      LaurentPoly g = poly_gcd(npoly, den_);
      if (!(g.term_count() == 1 && g.highest() == 0)) {
        // exact division by g
        LaurentPoly q1, q2;
        {
          LaurentPoly a = npoly;
          while (!a.is_zero()) {
            Rational f = a.coeff(a.highest()) / g.coeff(g.highest());
            int sh = a.highest() - g.highest();
            q1 = q1 + LaurentPoly::monomial(f, sh);
            a = a - (g.shifted(sh) * LaurentPoly::monomial(f, 0));
          }
        }
        {
          LaurentPoly a = den_;
          while (!a.is_zero()) {
            Rational f = a.coeff(a.highest()) / g.coeff(g.highest());
            int sh = a.highest() - g.highest();
            q2 = q2 + LaurentPoly::monomial(f, sh);
            a = a - (g.shifted(sh) * LaurentPoly::monomial(f, 0));
          }
        }
        num_ = q1.shifted(nshift);
        den_ = q2;
      }
    }
  }
  if (den_.is_one()) return;
  // integer coprime coefficients, positive leading coefficient
  Integer denlcm = 1;
  den_.for_each_term([&](int, const Rational& c) { denlcm = lcm(denlcm, c.get_den()); });
  Integer content = 0;
  den_.for_each_term([&](int, const Rational& c) {
    Integer v = c.get_num() * denlcm / c.get_den();
    content = gcd(content, v);
  });
  Rational factor(denlcm, content);
  if (den_.coeff(den_.highest()) < 0) factor = -factor;
  den_.scale(factor);
  num_.scale(factor);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar s;
  if (a.den_.is_one() && b.den_.is_one()) {
    s.num_ = a.num_ + b.num_;
    return s;
  }
  s.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  s.den_ = a.den_ * b.den_;
  s.canonicalize();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Scalar s;
  s.num_ = a.num_ * b.num_;
  if (a.den_.is_one() && b.den_.is_one()) return s;
  s.den_ = a.den_ * b.den_;
  s.canonicalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.canonicalize();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Rational Scalar::eval(const Rational& p0) const {
  Rational d = den_.eval(p0);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.eval(p0) / d;
}

namespace {

void print_poly(std::ostream& os, const LaurentPoly& poly) {
  if (poly.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  poly.for_each_term([&](int exp, const Rational& c) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (exp == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "p";
      if (exp != 1) os << "^" << exp;
    }
  });
}

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(i) + ": " + what);
  }
  Integer parse_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return Integer(s.substr(start, i - start));
  }
  int parse_int() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    Integer v = parse_uint();
    if (!v.fits_sint_p()) fail("exponent out of range");
    int out = static_cast<int>(v.get_si());
    return neg ? -out : out;
  }

  LaurentPoly parse_poly() {
    LaurentPoly out;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (eat('+')) sign = 1;
      else if (!first) break;
      skip_ws();
      if (i >= s.size()) fail("unexpected end");
      Rational coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        Integer numi = parse_uint();
        Integer deni = 1;
        size_t save = i;
        if (eat('/')) {
          skip_ws();
          if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            deni = parse_uint();
          } else {
            i = save;  // the '/' belongs to the enclosing fraction
          }
        }
        coef = Rational(numi, deni);
        coef.canonicalize();
        have_coef = true;
        eat('*');
      }
      int exp = 0;
      skip_ws();
      if (i < s.size() && s[i] == 'p') {
        ++i;
        exp = 1;
        if (eat('^')) exp = parse_int();
      } else if (!have_coef) {
        fail("expected coefficient or p");
      }
      out = out + LaurentPoly::monomial(sign * coef, exp);
      first = false;
    }
    return out;
  }

  Scalar parse_scalar() {
    skip_ws();
    if (eat('(')) {
      LaurentPoly num = parse_poly();
      if (!eat(')')) fail("expected ')'");
      if (eat('/')) {
        if (!eat('(')) fail("expected '('");
        LaurentPoly den = parse_poly();
        if (!eat(')')) fail("expected ')'");
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return Scalar::fraction(std::move(num), std::move(den));
      }
      skip_ws();
      if (i != s.size()) fail("trailing input");
      return Scalar::from_poly(std::move(num));
    }
    LaurentPoly num = parse_poly();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return Scalar::from_poly(std::move(num));
  }
};

}  // namespace

std::string Scalar::to_string() const {
  std::ostringstream os;
  // display clears negative exponents by scaling both sides by p^k
  int shift = 0;
  if (!num_.is_zero() && num_.lowest() < 0) shift = -num_.lowest();
  if (den_.is_one() && shift == 0) {
    print_poly(os, num_);
    return os.str();
  }
  os << "(";
  print_poly(os, num_.shifted(shift));
  os << ")/(";
  print_poly(os, den_.shifted(shift));
  os << ")";
  return os.str();
}

Scalar Scalar::parse(const std::string& text) {
  Parser parser(text);
  return parser.parse_scalar();
}

Scalar q_int(int k) {
  // (q^k - 1)/(q - 1) with q = p^2
  LaurentPoly num = LaurentPoly::monomial(1, 2 * k) - LaurentPoly::one();
  LaurentPoly den = LaurentPoly::monomial(1, 2) - LaurentPoly::one();
  return Scalar::fraction(std::move(num), std::move(den));
}

Scalar q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial of negative");
  Scalar out = 1;
  for (int k = 1; k <= n; ++k) out *= q_int(k);
  return out;
}

}  // namespace qhaar
