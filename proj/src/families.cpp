#include "witt/families.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace witt {

// ---------------------------------------------------------------- FamilySpec

FamilySpec FamilySpec::V(const Scalar& alpha, const Scalar& beta) {
  FamilySpec f;
  f.p1 = alpha;
  f.p2 = beta;
  return f;
}

namespace {

FamilySpec projective(FamilySpec::Kind kind, const Scalar& x, const Scalar& y) {
  if (x.is_zero() && y.is_zero()) throw std::invalid_argument("[x:y] must be a point of P^1");
  FamilySpec f;
  f.kind = kind;
  f.p1 = x;
  f.p2 = y;
  return f;
}

}  // namespace

FamilySpec FamilySpec::A(const Scalar& x, const Scalar& y) { return projective(Kind::A, x, y); }
FamilySpec FamilySpec::B(const Scalar& x, const Scalar& y) { return projective(Kind::B, x, y); }

FamilySpec FamilySpec::Atilde(std::optional<Scalar> aprime) {
  FamilySpec f;
  f.kind = Kind::Atilde;
  f.aprime = std::move(aprime);
  return f;
}

FamilySpec FamilySpec::Btilde(std::optional<Scalar> aprime) {
  FamilySpec f = Atilde(std::move(aprime));
  f.kind = Kind::Btilde;
  return f;
}

FamilySpec FamilySpec::P(const Scalar& x, const Scalar& y, Chart chart) {
  FamilySpec f = projective(Kind::P, x, y);
  f.chart = chart;
  f.resolved_chart();
  return f;
}

FamilySpec FamilySpec::Q(const Scalar& x, const Scalar& y, Chart chart) {
  FamilySpec f = P(x, y, chart);
  f.kind = Kind::Q;
  return f;
}

FamilySpec FamilySpec::Dual(const FamilySpec& inner) {
  FamilySpec f;
  f.kind = Kind::Dual;
  f.inner = std::make_shared<const FamilySpec>(inner);
  return f;
}

Chart FamilySpec::resolved_chart() const {
  switch (chart) {
    case Chart::Auto:
      return p1.is_zero() ? Chart::Y : Chart::X;
    case Chart::X:
      if (p1.is_zero()) throw std::invalid_argument("chart x needs x != 0");
      return Chart::X;
    case Chart::Y:
      if (p2.is_zero()) throw std::invalid_argument("chart y needs y != 0");
      return Chart::Y;
  }
  return Chart::X;
}

std::string to_string(const FamilySpec& f) {
  auto two = [&](const char* name, const char* sep) {
    return std::string(name) + (f.kind == FamilySpec::Kind::V ? "(" : "[") + to_string(f.p1) + sep +
           to_string(f.p2) + (f.kind == FamilySpec::Kind::V ? ")" : "]");
  };
  auto tilde = [&](const char* name) {
    return std::string(name) + "(" + (f.aprime ? to_string(*f.aprime) : std::string("inf")) + ")";
  };
  auto pq = [&](const char* name) {
    std::string chart = f.chart == Chart::Auto ? "" : (f.chart == Chart::X ? ";chart=x" : ";chart=y");
    return std::string(name) + "[" + to_string(f.p1) + ":" + to_string(f.p2) + chart + "]";
  };
  switch (f.kind) {
    case FamilySpec::Kind::V:
      return two("V", ",");
    case FamilySpec::Kind::A:
      return two("A", ":");
    case FamilySpec::Kind::B:
      return two("B", ":");
    case FamilySpec::Kind::Atilde:
      return tilde("Atilde");
    case FamilySpec::Kind::Btilde:
      return tilde("Btilde");
    case FamilySpec::Kind::P:
      return pq("P");
    case FamilySpec::Kind::Q:
      return pq("Q");
    case FamilySpec::Kind::Dual:
      return "Dual(" + to_string(*f.inner) + ")";
  }
  return "?";
}

bool same_family(const FamilySpec& l, const FamilySpec& r) {
  if (l.kind != r.kind) return false;
  switch (l.kind) {
    case FamilySpec::Kind::V:
      return l.p1 == r.p1 && l.p2 == r.p2;
    case FamilySpec::Kind::A:
    case FamilySpec::Kind::B:
    case FamilySpec::Kind::P:
    case FamilySpec::Kind::Q:
      return (l.p1 * r.p2 - l.p2 * r.p1).is_zero();
    case FamilySpec::Kind::Atilde:
    case FamilySpec::Kind::Btilde:
      return l.aprime == r.aprime;
    case FamilySpec::Kind::Dual:
      return same_family(*l.inner, *r.inner);
  }
  return false;
}

// ---------------------------------------------------------------- ModVec

Scalar ModVec::coefficient(const Gamma& g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void ModVec::add(const Gamma& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

ModVec ModVec::scaled(const Scalar& c) const {
  ModVec v;
  for (const auto& [g, x] : coeffs_) v.add(g, x * c);
  return v;
}

ModVec& ModVec::operator+=(const ModVec& o) {
  for (const auto& [g, c] : o.coeffs_) add(g, c);
  return *this;
}

std::string to_string(const ModVec& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : v.coeffs()) {
    std::string basis = "v(" + (g.rank() == 1 ? std::to_string(g[0]) : to_string(g).substr(1, to_string(g).size() - 2)) + ")";
    std::string term;
    if (c == Scalar(1)) {
      term = basis;
    } else if (c == Scalar(-1)) {
      term = "-" + basis;
    } else if (c.num().terms().size() == 1 && c.den().is_constant()) {
      term = to_string(c) + "*" + basis;
    } else if (c.den().is_constant()) {
      term = "(" + to_string(c) + ")*" + basis;
    } else {
      term = to_string(c) + "*" + basis;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------- P(q), Q(q)

namespace {

Scalar at(const Scalar& f, long a, long b) { return substitute(f, {{var::a, Scalar(a)}, {var::b, Scalar(b)}}); }

Scalar directional(const FamilySpec& f, const Scalar& poly, long a, long b) {
  Scalar d = f.p1 * at(derivative(poly, var::a), a, b) + f.p2 * at(derivative(poly, var::b), a, b);
  return d / (f.resolved_chart() == Chart::X ? f.p1 : f.p2);
}

}  // namespace

Scalar pq_reduce(const FamilySpec& f, const Gamma& gamma, const Scalar& poly) {
  if (f.kind == FamilySpec::Kind::P) {
    Scalar value = at(poly, 0, 0);
    if (gamma.is_zero()) return value;
    if (!value.is_zero())
      throw std::domain_error("P(q): component at degree " + to_string(gamma) + " is not in I(0,0): " + to_string(poly));
    return directional(f, poly, 0, 0);
  }
  if (f.kind == FamilySpec::Kind::Q) {
    Scalar value = at(poly, 0, 1);
    if (!gamma.is_zero()) return value;
    if (!value.is_zero()) throw std::domain_error("Q(q): degree 0 component is not in I(0,1): " + to_string(poly));
    return directional(f, poly, 0, 1);
  }
  throw std::invalid_argument("pq_reduce needs a P or Q family");
}

SkewElt pq_representative(const FamilySpec& f, const Gamma& gamma) {
  const bool chart_x = f.resolved_chart() == Chart::X;
  const Poly a = Poly::variable(var::a), b = Poly::variable(var::b);
  if (f.kind == FamilySpec::Kind::P) {
    if (gamma.is_zero()) return {gamma, Scalar(1)};
    return {gamma, Scalar(chart_x ? a : b)};
  }
  if (f.kind == FamilySpec::Kind::Q) {
    if (!gamma.is_zero()) return {gamma, Scalar(1)};
    return {gamma, Scalar(chart_x ? a : b - Poly(1))};
  }
  throw std::invalid_argument("pq_representative needs a P or Q family");
}

// ---------------------------------------------------------------- actions

Scalar coefficient(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& nu) {
  const Embedding& emb = env.embedding();
  const Gamma sum = mu + nu;
  auto iota = [&](const Gamma& g) { return emb.scalar(g); };
  auto tilde_factor = [&]() {
    Scalar m1 = iota(mu) + Scalar(1);
    return f.aprime ? Scalar(1) + m1 * *f.aprime : m1;
  };
  switch (f.kind) {
    case FamilySpec::Kind::V:
      return f.p1 + f.p2 * iota(mu) + iota(nu);
    case FamilySpec::Kind::A:
      if (sum.is_zero()) return {};
      if (nu.is_zero()) return f.p1 + f.p2 * iota(mu);
      return iota(nu);
    case FamilySpec::Kind::B:
      if (nu.is_zero()) return {};
      if (sum.is_zero()) return f.p1 + f.p2 * iota(mu);
      return iota(sum);
    case FamilySpec::Kind::Atilde:
      if (!nu.is_zero()) return iota(sum);
      return iota(mu) * tilde_factor();
    case FamilySpec::Kind::Btilde:
      if (!sum.is_zero()) return iota(nu);
      return -iota(mu) * tilde_factor();
    case FamilySpec::Kind::P:
    case FamilySpec::Kind::Q: {
      // Right multiplication by Φ(e_μ) realises the left action.
      SkewElt w = env.ring().mul(pq_representative(f, nu), env.phi_generator(mu));
      return pq_reduce(f, sum, w.component(sum));
    }
    case FamilySpec::Kind::Dual:
      return -coefficient(env, *f.inner, mu, -nu - mu);
  }
  return {};
}

ModVec act(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const ModVec& v) {
  ModVec out;
  for (const auto& [nu, c] : v.coeffs()) out.add(mu + nu, c * coefficient(env, f, mu, nu));
  return out;
}

ModVec act_u(const Enveloping& env, const FamilySpec& f, const UElt& u, const ModVec& v) {
  ModVec out;
  for (const auto& [m, c] : u.terms()) {
    ModVec w = v;
    for (auto it = m.rbegin(); it != m.rend() && !w.is_zero(); ++it) w = act(env, f, *it, w);
    out += w.scaled(c);
  }
  return out;
}

Scalar adjoint_act(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& gamma) {
  return -coefficient(env, f, mu, -gamma - mu);
}

Scalar module_axiom_defect(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& nu,
                           const Gamma& gamma) {
  Scalar lhs = coefficient(env, f, nu, gamma) * coefficient(env, f, mu, nu + gamma) -
               coefficient(env, f, mu, gamma) * coefficient(env, f, nu, mu + gamma);
  Scalar rhs = (env.embedding().scalar(nu) - env.embedding().scalar(mu)) * coefficient(env, f, mu + nu, gamma);
  return lhs - rhs;
}

ActionTable action_table(const Enveloping& env, const FamilySpec& f, int box) {
  ActionTable t;
  auto gs = gamma_box(env.embedding().rank(), box);
  for (const auto& mu : gs)
    for (const auto& nu : gs) t.emplace(std::make_pair(mu, nu), coefficient(env, f, mu, nu));
  return t;
}

// ---------------------------------------------------------------- isomorphisms

std::optional<Rescaling> solve_rescaling(const ActionTable& t1, const ActionTable& t2) {
  // Edge ν -> μ+ν with λ_{μ+ν} = (c2/c1) λ_ν.
  struct Edge {
    Gamma to;
    Scalar ratio;
  };
  std::map<Gamma, std::vector<Edge>> graph;
  std::set<Gamma> nodes;
  for (const auto& [key, c1] : t1) {
    auto it = t2.find(key);
    if (it == t2.end()) continue;
    const Scalar& c2 = it->second;
    const auto& [mu, nu] = key;
    const Gamma sum = mu + nu;
    nodes.insert(nu);
    nodes.insert(sum);
    if (c1.is_zero() != c2.is_zero()) return std::nullopt;
    if (c1.is_zero()) continue;
    Scalar r = c2 / c1;
    graph[nu].push_back({sum, r});
    graph[sum].push_back({nu, r.inverse()});
  }
  Rescaling lambda;
  auto propagate = [&](const Gamma& root) {
    lambda.emplace(root, Scalar(1));
    std::deque<Gamma> queue{root};
    while (!queue.empty()) {
      Gamma g = queue.front();
      queue.pop_front();
      for (const auto& e : graph[g]) {
        if (lambda.count(e.to)) continue;
        lambda.emplace(e.to, lambda.at(g) * e.ratio);
        queue.push_back(e.to);
      }
    }
  };
  if (!nodes.empty()) {
    Gamma zero(nodes.begin()->rank());
    if (nodes.count(zero)) propagate(zero);
  }
  for (const auto& g : nodes)
    if (!lambda.count(g)) propagate(g);
  for (const auto& [key, c1] : t1) {
    auto it = t2.find(key);
    if (it == t2.end()) continue;
    const auto& [mu, nu] = key;
    if (!(lambda.at(mu + nu) * c1 == it->second * lambda.at(nu))) return std::nullopt;
  }
  return lambda;
}

std::optional<Rescaling> iso_check(const Enveloping& env, const FamilySpec& f1, const FamilySpec& f2, int box) {
  if (box < 1) throw std::invalid_argument("box must be >= 1");
  return solve_rescaling(action_table(env, f1, box), action_table(env, f2, box));
}

ShiftReport shift_check(const Enveloping& env, const Scalar& alpha, const Scalar& beta, const Gamma& nu, int box) {
  FamilySpec base = FamilySpec::V(alpha, beta);
  FamilySpec moved = FamilySpec::V(alpha + env.embedding().scalar(nu), beta);
  ShiftReport rep;
  auto gs = gamma_box(env.embedding().rank(), box);
  for (const auto& mu : gs)
    for (const auto& g : gs) {
      Scalar shifted = coefficient(env, base, mu, g + nu);
      Scalar direct = coefficient(env, moved, mu, g);
      if (!(shifted == direct)) {
        rep.pass = false;
        rep.mismatches.push_back({{mu, g}, {shifted, direct}});
      }
    }
  return rep;
}

namespace {

std::optional<Scalar> entry(const ActionTable& t, const Gamma& mu, const Gamma& nu) {
  auto it = t.find({mu, nu});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::optional<Rescaling> matches(const Enveloping& env, const ActionTable& table, const FamilySpec& f) {
  ActionTable model;
  for (const auto& [key, c] : table) model.emplace(key, coefficient(env, f, key.first, key.second));
  return solve_rescaling(model, table);
}

}  // namespace

Classification classify(const Enveloping& env, const ActionTable& table) {
  Classification out;
  if (table.empty()) return out;
  const int rank = table.begin()->first.first.rank();
  const Gamma zero(rank);
  const Gamma mu = Gamma::unit(rank, 0);
  const Gamma mu2 = mu * 2;
  const Scalar iota = env.embedding().scalar(mu);
  auto attempt = [&](const FamilySpec& f) {
    if (auto lambda = matches(env, table, f)) {
      out.family = f;
      out.rescaling = std::move(*lambda);
      return true;
    }
    return false;
  };

  // V: e_0 v_0 = α and e_μ v_0 = α + β ι(μ).
  if (auto c00 = entry(table, zero, zero), c10 = entry(table, mu, zero); c00 && c10) {
    if (attempt(FamilySpec::V(*c00, (*c10 - *c00) / iota))) return out;
  }

  // A: (x + 2yι) c(μ,0) c(μ,μ) = (x + yι) ι c(2μ,0).
  if (auto c10 = entry(table, mu, zero), c11 = entry(table, mu, mu), c20 = entry(table, mu2, zero);
      c10 && c11 && c20) {
    Scalar p = *c10 * *c11, q = *c20;
    Scalar x = iota * (Scalar(2) * p - iota * q), y = iota * q - p;
    if (!(x.is_zero() && y.is_zero()) && attempt(FamilySpec::A(x, y))) return out;
  }

  // B: (x + 2yι) c(μ,-2μ) c(μ,-μ) = -(x + yι) ι c(2μ,-2μ).
  if (auto c1 = entry(table, mu, -mu2), c2 = entry(table, mu, -mu), c3 = entry(table, mu2, -mu2); c1 && c2 && c3) {
    Scalar p = *c1 * *c2, q = *c3;
    Scalar x = -iota * iota * q - Scalar(2) * iota * p, y = iota * q + p;
    if (!(x.is_zero() && y.is_zero()) && attempt(FamilySpec::B(x, y))) return out;
  }
  return out;
}

}  // namespace witt
