#include "witt/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace witt {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.factors_.emplace_back(v, e);
    m.degree_ = e;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
    if (w > v) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial m;
  auto j = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    if (j != other.factors_.end() && j->first < v) return std::nullopt;
    if (j != other.factors_.end() && j->first == v) {
      if (j->second > e) return std::nullopt;
      if (j->second < e) m.factors_.emplace_back(v, e - j->second);
      ++j;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  if (j != other.factors_.end()) return std::nullopt;
  m.degree_ = degree_ - other.degree_;
  return m;
}

std::pair<Monomial, std::uint32_t> Monomial::split(Var v) const {
  Monomial m;
  std::uint32_t ev = 0;
  for (const auto& f : factors_) {
    if (f.first == v) {
      ev = f.second;
    } else {
      m.factors_.push_back(f);
    }
  }
  m.degree_ = degree_ - ev;
  return {std::move(m), ev};
}

std::strong_ordering grlex(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() <=> rhs.degree();
  const auto& l = lhs.factors();
  const auto& r = rhs.factors();
  std::size_t i = 0;
  for (; i < l.size() && i < r.size(); ++i) {
    if (l[i].first != r[i].first) {
      return l[i].first < r[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (l[i].second != r[i].second) return l[i].second <=> r[i].second;
  }
  if (i < l.size()) return std::strong_ordering::greater;
  if (i < r.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Poly

namespace {

void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& l, const Poly::Term& r) { return grlex(l.mono, r.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// c * m * f; multiplying by a monomial preserves the term order.
Poly mul_term(const Poly& f, const Monomial& m, const Rational& c) {
  std::vector<Poly::Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.mono * m, t.coeff * c});
  return Poly::from_terms(std::move(out));
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(Var v, std::uint32_t e) { return monomial(Monomial::of(v, e), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

bool Poly::contains(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exponent(v) > 0; });
}

std::vector<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.first);
  return {vs.begin(), vs.end()};
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    auto [rest, e] = t.mono.split(v);
    buckets[e].push_back({std::move(rest), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    if (i == terms_.end()) {
      out.push_back(*j++);
      continue;
    }
    auto c = grlex(i->mono, j->mono);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (s != 0) out.push_back({std::move(i->mono), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& l, const Poly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  if (l.terms_.size() == 1) return mul_term(r, l.terms_[0].mono, l.terms_[0].coeff);
  if (r.terms_.size() == 1) return mul_term(l, r.terms_[0].mono, r.terms_[0].coeff);
  std::vector<Poly::Term> out;
  out.reserve(l.terms_.size() * r.terms_.size());
  for (const auto& s : l.terms_)
    for (const auto& t : r.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(std::move(out));
}

bool operator==(const Poly& l, const Poly& r) {
  if (l.terms_.size() != r.terms_.size()) return false;
  for (std::size_t i = 0; i < l.terms_.size(); ++i) {
    if (!(l.terms_[i].mono == r.terms_[i].mono) || l.terms_[i].coeff != r.terms_[i].coeff) return false;
  }
  return true;
}

Poly pow(const Poly& f, unsigned e) {
  Poly result(1);
  Poly base = f;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly derivative(const Poly& f, Var v) {
  std::vector<Poly::Term> out;
  for (const auto& t : f.terms()) {
    auto [rest, e] = t.mono.split(v);
    if (e == 0) continue;
    out.push_back({rest * Monomial::of(v, e - 1), t.coeff * e});
  }
  return Poly::from_terms(std::move(out));
}

Poly substitute(const Poly& f, Var v, const Poly& value) {
  if (!f.contains(v)) return f;
  auto coeffs = f.coefficients_in(v);
  Poly result = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    result *= value;
    result += coeffs[i];
  }
  return result;
}

Poly substitute(const Poly& f, const std::map<Var, Poly>& values) {
  std::map<std::pair<Var, std::uint32_t>, Poly> powers;
  auto power = [&](Var v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(values.at(v), e)).first;
    return it->second;
  };
  std::vector<Poly::Term> untouched;
  Poly result;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> keep;
    std::vector<Monomial::Factor> bound;
    for (const auto& fac : t.mono.factors()) {
      (values.count(fac.first) ? bound : keep).push_back(fac);
    }
    if (bound.empty()) {
      untouched.push_back(t);
      continue;
    }
    Poly term = Poly::monomial(Monomial::from_factors(std::move(keep)), t.coeff);
    for (const auto& [v, e] : bound) term *= power(v, e);
    result += term;
  }
  return result + Poly::from_terms(std::move(untouched));
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return Poly{};
  if (den.is_constant()) return num.scaled(1 / den.leading_term().coeff);
  const auto& lead = den.leading_term();
  std::vector<Poly::Term> quotient;
  Poly rem = num;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    auto m = lt.mono.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = lt.coeff / lead.coeff;
    quotient.push_back({*m, c});
    rem -= mul_term(den, *m, c);
  }
  return Poly::from_terms(std::move(quotient));
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f.scaled(1 / f.leading_term().coeff);
}

namespace {

Poly gcd_list(const std::vector<Poly>& ps);

Poly content_in(const Poly& f, Var v) {
  std::vector<Poly> nz;
  for (auto& c : f.coefficients_in(v))
    if (!c.is_zero()) nz.push_back(std::move(c));
  return gcd_list(nz);
}

Poly primitive_part(const Poly& f, Var v) {
  if (f.is_zero()) return f;
  auto q = divide_exact(f, content_in(f, v));
  return monic(*q);
}

// Sparse pseudo-remainder of a by b with respect to v, made monic to curb
// coefficient growth (units do not matter for gcds).
Poly pseudo_remainder(Poly a, const Poly& b, Var v) {
  const std::uint32_t n = b.degree(v);
  if (n == 0) return {};
  const Poly lcb = b.coefficients_in(v).back();
  while (!a.is_zero() && a.contains(v) && a.degree(v) >= n) {
    const std::uint32_t d = a.degree(v);
    Poly lca = a.coefficients_in(v).back();
    a = lcb * a - lca * Poly::variable(v, d - n) * b;
    a = monic(a);
  }
  return a;
}

Poly gcd_list(const std::vector<Poly>& ps) {
  if (ps.empty()) return {};
  Poly g = monic(ps.front());
  for (std::size_t i = 1; i < ps.size() && !g.is_constant(); ++i) g = gcd(g, ps[i]);
  return g;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  if (f.is_constant() || g.is_constant()) return Poly(1);
  if (f == g) return monic(f);

  for (Var v : f.variables())
    if (!g.contains(v)) return gcd(content_in(f, v), g);
  for (Var v : g.variables())
    if (!f.contains(v)) return gcd(f, content_in(g, v));

  // Same variable set from here on; recurse on the first one.
  const Var v = f.variables().front();
  Poly cf = content_in(f, v);
  Poly cg = content_in(g, v);
  Poly c = gcd(cf, cg);
  Poly p = monic(*divide_exact(f, cf));
  Poly q = monic(*divide_exact(g, cg));
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? Poly{} : primitive_part(r, v);
  }
  return monic(c * primitive_part(p, v));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    std::string mono;
    for (const auto& [v, e] : t.mono.factors()) {
      if (!mono.empty()) mono += "*";
      mono += symbol_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace witt
