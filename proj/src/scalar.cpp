#include "witt/scalar.hpp"

#include <stdexcept>

namespace witt {

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  Scalar s;
  if (num.is_zero()) return s;
  if (den.is_constant()) {
    s.num_ = num.scaled(1 / den.leading_term().coeff);
    return s;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : *divide_exact(num, g);
  Poly d = g.is_constant() ? den : *divide_exact(den, g);
  Rational lc = d.leading_term().coeff;
  s.num_ = n.scaled(1 / lc);
  s.den_ = d.scaled(1 / lc);
  return s;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not a rational number: " + to_string(*this));
  return num_.constant_term() / den_.constant_term();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return fraction(den_, num_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      return *this;
    }
    return *this = fraction(num_ + o.num_, den_);
  }
  if (o.den_.is_constant()) return *this = fraction(num_ + o.num_ * den_, den_);
  if (den_.is_constant()) return *this = fraction(num_ * o.den_ + o.num_, o.den_);
  Poly g = gcd(den_, o.den_);
  Poly l = *divide_exact(den_, g);
  Poly r = *divide_exact(o.den_, g);
  return *this = fraction(num_ * r + o.num_ * l, l * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = fraction(num_ * o.num_, den_ * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar pow(const Scalar& s, int e) {
  if (e < 0) return pow(s.inverse(), -e);
  return Scalar::fraction(pow(s.num(), static_cast<unsigned>(e)), pow(s.den(), static_cast<unsigned>(e)));
}

Scalar derivative(const Scalar& s, Var v) {
  if (s.den().is_constant()) return Scalar(derivative(s.num(), v));
  Poly n = derivative(s.num(), v) * s.den() - s.num() * derivative(s.den(), v);
  return Scalar::fraction(n, s.den() * s.den());
}

Scalar substitute(const Poly& f, const std::map<Var, Scalar>& values) {
  bool polynomial = true;
  for (const auto& [v, s] : values) polynomial = polynomial && s.is_polynomial();
  if (polynomial) {
    std::map<Var, Poly> polys;
    for (const auto& [v, s] : values)
      if (f.contains(v)) polys.emplace(v, s.num());
    return Scalar(substitute(f, polys));
  }
  std::map<std::pair<Var, std::uint32_t>, Scalar> powers;
  Scalar result;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> keep;
    Scalar term(1);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        keep.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, pow(it->second, static_cast<int>(e))).first;
      term *= pit->second;
    }
    result += term * Scalar(Poly::monomial(Monomial::from_factors(std::move(keep)), t.coeff));
  }
  return result;
}

Scalar substitute(const Scalar& s, const std::map<Var, Scalar>& values) {
  Scalar n = substitute(s.num(), values);
  if (s.den().is_constant()) return n * Scalar(1 / s.den().constant_term());
  return n / substitute(s.den(), values);
}

std::string to_string(const Scalar& s) {
  if (s.den().is_constant()) return to_string(s.num());
  return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

}  // namespace witt
