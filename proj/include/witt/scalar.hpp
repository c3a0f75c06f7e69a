#pragma once

#include <map>
#include <ostream>
#include <string>

#include "witt/poly.hpp"

namespace witt {

/// Element of the rational function field Q(symbols): num/den with
/// gcd(num, den) = 1 and den of leading coefficient 1.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}
  Scalar(const Poly& p) : num_(p), den_(1) {}
  static Scalar fraction(const Poly& num, const Poly& den);
  static Scalar symbol(Var v) { return Scalar(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// True when the value is a rational number.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const;
  bool depends_on(Var v) const { return num_.contains(v) || den_.contains(v); }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend bool operator==(const Scalar& l, const Scalar& r) { return l.num_ == r.num_ && l.den_ == r.den_; }

 private:
  Poly num_;
  Poly den_;
};

Scalar pow(const Scalar& s, int e);
Scalar derivative(const Scalar& s, Var v);
Scalar substitute(const Poly& f, const std::map<Var, Scalar>& values);
Scalar substitute(const Scalar& s, const std::map<Var, Scalar>& values);

std::string to_string(const Scalar& s);
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace witt
