#include "witt/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

#include "witt/families.hpp"

namespace witt {

// ---------------------------------------------------------------- UElt

UElt::UElt(const Scalar& c) { add({}, c); }

UElt::UElt(const PbwMonomial& m, const Scalar& c) { add(m, c); }

Scalar UElt::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void UElt::add(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UElt UElt::operator-() const {
  UElt u = *this;
  for (auto& [m, c] : u.terms_) c = -c;
  return u;
}

UElt& UElt::operator+=(const UElt& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UElt& UElt::operator-=(const UElt& o) { return *this += -o; }

UElt UElt::scaled(const Scalar& c) const {
  UElt u;
  for (const auto& [m, x] : terms_) u.add(m, x * c);
  return u;
}

bool is_sorted_monomial(const PbwMonomial& m) { return std::is_sorted(m.begin(), m.end()); }

namespace {

std::string generator_name(const Gamma& g) {
  if (g.rank() == 1) return "e(" + std::to_string(g[0]) + ")";
  return "e" + to_string(g);
}

std::string monomial_string(const PbwMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!s.empty()) s += "*";
    s += generator_name(m[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

std::string to_string(const UElt& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : u.terms()) {
    std::string term;
    if (m.empty()) {
      term = to_string(c);
      if (c.num().terms().size() > 1 && c.den().is_constant()) term = "(" + term + ")";
    } else if (c == Scalar(1)) {
      term = monomial_string(m);
    } else if (c == Scalar(-1)) {
      term = "-" + monomial_string(m);
    } else if (c.num().terms().size() == 1 && c.den().is_constant()) {
      term = to_string(c) + "*" + monomial_string(m);
    } else if (c.den().is_constant()) {
      term = "(" + to_string(c) + ")*" + monomial_string(m);
    } else {
      term = to_string(c) + "*" + monomial_string(m);
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

// ---------------------------------------------------------------- Enveloping

UElt Enveloping::generator(const Gamma& g) const {
  emb_.check(g);
  return UElt({g}, Scalar(1));
}

UElt Enveloping::bracket(const Gamma& mu, const Gamma& nu) const {
  return UElt({mu + nu}, Scalar(emb_(nu) - emb_(mu)));
}

UElt Enveloping::normal_form(std::map<PbwMonomial, Scalar> pending, RewriteStrategy s) const {
  // Processing longer words first lets the shorter words produced by
  // rewriting merge in `pending` before they are expanded.
  std::map<PbwMonomial, Scalar, PbwOrder> work;
  for (auto& [w, c] : pending)
    if (!c.is_zero()) work[w] += c;
  UElt out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    PbwMonomial w = std::move(node.key());
    Scalar c = std::move(node.mapped());
    if (c.is_zero()) continue;
    std::ptrdiff_t pos = -1;
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    if (s == RewriteStrategy::LeftmostFirst) {
      for (std::ptrdiff_t i = 0; i + 1 < n; ++i)
        if (w[i + 1] < w[i]) {
          pos = i;
          break;
        }
    } else {
      for (std::ptrdiff_t i = n - 2; i >= 0; --i)
        if (w[i + 1] < w[i]) {
          pos = i;
          break;
        }
    }
    if (pos < 0) {
      for (const auto& g : w) emb_.check(g);
      out.add(w, c);
      continue;
    }
    const Gamma nu = w[pos];
    const Gamma mu = w[pos + 1];
    PbwMonomial swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work[swapped] += c;
    Scalar k = Scalar(emb_(mu) - emb_(nu));
    if (!k.is_zero()) {
      PbwMonomial shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(mu + nu);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      work[shorter] += c * k;
    }
  }
  return out;
}

UElt Enveloping::word(const PbwMonomial& w, RewriteStrategy s) const { return normal_form({{w, Scalar(1)}}, s); }

UElt Enveloping::mul(const UElt& u, const UElt& v, RewriteStrategy s) const {
  std::map<PbwMonomial, Scalar> pending;
  for (const auto& [m1, c1] : u.terms())
    for (const auto& [m2, c2] : v.terms()) {
      PbwMonomial w = m1;
      w.insert(w.end(), m2.begin(), m2.end());
      pending[w] += c1 * c2;
    }
  return normal_form(std::move(pending), s);
}

UElt Enveloping::pow(const UElt& u, unsigned e) const {
  UElt r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, u);
  return r;
}

SkewElt Enveloping::phi_generator(const Gamma& g) const {
  return {g, Scalar(Poly::variable(var::a) + Poly::variable(var::b) * emb_(g))};
}

SkewElt Enveloping::phi(const UElt& u) const {
  SkewElt out;
  for (const auto& [m, c] : u.terms()) {
    SkewElt p = ring_.scalar(c);
    for (auto it = m.rbegin(); it != m.rend(); ++it) p = ring_.mul(p, phi_generator(*it));
    out += p;
  }
  return out;
}

SkewElt Enveloping::phi_prime(const UElt& u) const {
  if (!emb_.numeric()) throw std::invalid_argument("PhiPrime requires the integer embedding (rank 1)");
  SkewElt out;
  for (const auto& [m, c] : u.terms()) {
    SkewElt p = ring_.scalar(c);
    for (const auto& g : m) p = ring_.mul(p, phi_generator(g).scaled(Scalar(-1)));
    out += p;
  }
  return out;
}

bool kernel_test(const Enveloping& env, const UElt& u) {
  bool by_phi = env.phi(u).is_zero();
  FamilySpec v = FamilySpec::V(Scalar::symbol(var::alpha), Scalar::symbol(var::beta));
  ModVec v0;
  v0.add(env.embedding().zero(), Scalar(1));
  bool by_module = act_u(env, v, u, v0).is_zero();
  if (by_phi != by_module)
    throw std::logic_error("kernel criteria disagree on " + to_string(u) + ": Phi(u) " +
                           (by_phi ? "= 0" : "!= 0") + ", u.v0 " + (by_module ? "= 0" : "!= 0"));
  return by_phi;
}

// ---------------------------------------------------------------- T'

TPrimeImages TPrimeImages::printed(const SkewRing& ring) {
  Gamma one = Gamma::unit(1, 0);
  Poly a = Poly::variable(var::a), b = Poly::variable(var::b);
  return {SkewElt(one, Scalar(b - a)), ring.t(one), SkewElt(one, Scalar(b)), "u->(b-a)t, v->t, w->bt"};
}

TPrimeImages TPrimeImages::corrected(const SkewRing& ring) {
  Gamma one = Gamma::unit(1, 0);
  Poly a = Poly::variable(var::a), b = Poly::variable(var::b);
  return {SkewElt(one, Scalar(-a - b)), ring.t(one), SkewElt(one, Scalar(b)), "u->(-a-b)t, v->t, w->bt"};
}

bool BridgeReport::relations_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const BridgeCase& c) { return c.equal; });
}

bool BridgeReport::triangle_pass() const {
  return std::all_of(triangle.begin(), triangle.end(), [](const BridgeCase& c) { return c.equal; });
}

BridgeReport tprime_bridge_check(const Enveloping& env, int range, const TPrimeImages& im) {
  if (!env.embedding().numeric()) throw std::invalid_argument("the T' bridge requires the integer embedding (rank 1)");
  const SkewRing& T = env.ring();
  auto m = [&](const SkewElt& x, const SkewElt& y) { return T.mul(x, y); };
  BridgeReport rep;
  auto relation = [&](const std::string& name, const SkewElt& value) {
    rep.relations.push_back({name, value, SkewElt(), value.is_zero()});
  };
  relation("uv-vu-v^2", m(im.u, im.v) - m(im.v, im.u) - m(im.v, im.v));
  relation("uw-wu-wv", m(im.u, im.w) - m(im.w, im.u) - m(im.w, im.v));
  relation("vw-wv", m(im.v, im.w) - m(im.w, im.v));
  for (int n = -range; n <= range; ++n) {
    SkewElt lhs = m(im.u - im.w.scaled(Scalar(n - 1)), T.pow(im.v, n - 1));
    SkewElt rhs = env.phi_prime(env.generator(Gamma{n}));
    rep.triangle.push_back({"n=" + std::to_string(n), lhs, rhs, lhs == rhs});
  }
  return rep;
}

}  // namespace witt
