#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/symbols.hpp"

namespace witt {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// A power product of registry symbols, stored sparsely with increasing Var.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t e = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Drops v from the power product and returns it with v's exponent.
  std::pair<Monomial, std::uint32_t> split(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order; among equal degrees, a > b > g1 > ... .
std::strong_ordering grlex(const Monomial& lhs, const Monomial& rhs);

struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const { return grlex(l, r) > 0; }
};

/// Multivariate polynomial over the rationals in canonical form: terms sorted
/// by decreasing grlex, no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  static Poly variable(Var v, std::uint32_t e = 1);
  static Poly monomial(const Monomial& m, const Rational& c);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool contains(Var v) const;
  std::vector<Var> variables() const;

  /// Coefficients of f viewed as a polynomial in v; index is the exponent.
  std::vector<Poly> coefficients_in(Var v) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(const Poly& l, const Poly& r);
  friend bool operator==(const Poly& l, const Poly& r);

 private:
  std::vector<Term> terms_;
};

Poly pow(const Poly& f, unsigned e);
Poly derivative(const Poly& f, Var v);
Poly substitute(const Poly& f, Var v, const Poly& value);
Poly substitute(const Poly& f, const std::map<Var, Poly>& values);

/// q with num == q * den, or nullopt when den does not divide num.
std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

/// Greatest common divisor, normalised to leading coefficient 1 (zero if both are zero).
Poly gcd(const Poly& f, const Poly& g);

/// f divided by its leading coefficient.
Poly monic(const Poly& f);

std::string to_string(const Poly& f);

}  // namespace witt
