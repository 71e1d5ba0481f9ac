#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhaar/rational.hpp"

namespace qhaar {

// Laurent polynomial in p with rational coefficients.
// Dense storage from the lowest exponent; both ends trimmed, zero = empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(Rational coef, int exp);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int lowest() const;   // requires nonzero
  int highest() const;  // requires nonzero
  Rational coeff(int exp) const;
  int term_count() const;

  LaurentPoly shifted(int k) const;  // multiply by p^k
  // true when the poly is a single term c*p^k
  std::optional<std::pair<Rational, int>> as_monomial() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  void scale(const Rational& c);
  Rational eval(const Rational& p0) const;  // p0 != 0 when negative exponents present

  template <typename F>
  void for_each_term(F&& f) const {  // f(exp, coef), ascending, nonzero only
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) f(min_exp_ + static_cast<int>(i), c_[i]);
  }

 private:
  int min_exp_ = 0;
  std::vector<Rational> c_;
  void trim();
  friend class Scalar;
};

// Element of Q(p), the exact coefficient field.  q = p^2 throughout.
// Canonical form: fraction reduced, denominator a polynomial with nonzero
// constant term, integer coprime coefficients and positive leading coefficient.
class Scalar {
 public:
  Scalar() = default;                       // zero
  Scalar(int v);                            // NOLINT: implicit by design
  Scalar(const Rational& v);                // NOLINT
  static Scalar from_poly(LaurentPoly num);
  static Scalar fraction(LaurentPoly num, LaurentPoly den);
  static Scalar p_pow(int k);               // p^k
  static Scalar q_pow(int k);               // p^{2k}

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on zero divisor
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
  Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
  Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
  Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;  // throws on zero

  // Canonical text form, exponents ascending, e.g. "(-1 + p^2)/(p^4)".
  std::string to_string() const;
  static Scalar parse(const std::string& text);  // throws std::invalid_argument

  Rational eval(const Rational& p0) const;  // throws if the denominator vanishes

 private:
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::one();
  void canonicalize();
};

Scalar q_int(int k);               // [k]_q = (q^k - 1)/(q - 1), any integer k
Scalar q_factorial(int n);         // [n]_q!, n >= 0

}  // namespace qhaar
