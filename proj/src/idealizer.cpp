#include "witt/idealizer.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace witt {

namespace {

Poly a_poly() { return Poly::variable(var::a); }
Poly b_poly() { return Poly::variable(var::b); }
Poly bb_poly() { return b_poly() * (Poly(1) - b_poly()); }

void record(WitnessReport& rep, const SkewElt& computed, const SkewElt& expected) {
  rep.computed.push_back(computed);
  rep.expected.push_back(expected);
  rep.pass = rep.pass && computed == expected;
  ++rep.cases;
}

void require_nonzero(const Gamma& g, const char* what) {
  if (g.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
}

}  // namespace

UElt p_mu(const Enveloping& env, const Gamma& mu) {
  require_nonzero(mu, "mu");
  UElt u = env.word({mu, mu * 3});
  u -= env.word({mu * 2, mu * 2});
  u -= env.generator(mu * 4).scaled(env.embedding().scalar(mu));
  return u;
}

SkewElt bb(const SkewRing& ring, const Gamma& nu) {
  ring.embedding().check(nu);
  return {nu, Scalar(bb_poly())};
}

WitnessReport pmu_check(const Enveloping& env, const Gamma& mu) {
  WitnessReport rep;
  rep.claim = "pmu";
  rep.statement = "Phi(p_mu) = mu^2 b(1-b) t^(4mu)";
  rep.inputs = {{"mu", to_string(mu)}};
  Scalar m = env.embedding().scalar(mu);
  record(rep, env.phi(p_mu(env, mu)), bb(env.ring(), mu * 4).scaled(m * m));
  return rep;
}

WitnessReport ideal_witness(const Enveloping& env, const Gamma& nu, const Gamma& mu) {
  require_nonzero(mu, "mu");
  const SkewRing& T = env.ring();
  WitnessReport rep;
  rep.claim = "ideal";
  rep.statement = "Phi(e_(nu-4mu)) b(1-b)t^(4mu) - b(1-b)t^(4mu) Phi(e_(nu-4mu)) = -4mu b(1-b) t^nu";
  rep.inputs = {{"nu", to_string(nu)}, {"mu", to_string(mu)}};
  SkewElt x = bb(T, mu * 4);
  SkewElt f = env.phi_generator(nu - mu * 4);
  SkewElt comm = T.mul(f, x) - T.mul(x, f);
  record(rep, comm, bb(T, nu).scaled(Scalar(-4) * env.embedding().scalar(mu)));
  return rep;
}

WitnessReport saturation_check(const Enveloping& env, int n_max, int m_max, const std::vector<Gamma>& degrees) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("bounds must be >= 0");
  const SkewRing& T = env.ring();
  const Gamma s = Gamma::unit(env.embedding().rank(), 0);
  const Scalar is = env.embedding().scalar(s);
  const SkewElt phi_a = env.phi_generator(env.embedding().zero());
  const SkewElt phi_s = env.phi_generator(s);
  const SkewElt pm = env.phi(p_mu(env, s));  // ι(s)^2 b(1-b) t^{4s}

  std::map<std::tuple<int, int, Gamma>, SkewElt> memo;
  // W(n, m, ν) = b(1-b) b^n a^m t^ν, built inside B·Φ(p_s)·B.
  std::function<SkewElt(int, int, const Gamma&)> w = [&](int n, int m, const Gamma& nu) -> SkewElt {
    auto key = std::make_tuple(n, m, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SkewElt out;
    if (n == 0 && m == 0) {
      SkewElt f = env.phi_generator(nu - s * 4);
      out = (T.mul(f, pm) - T.mul(pm, f)).scaled((Scalar(-4) * is * is * is).inverse());
    } else if (n == 0) {
      out = T.mul(phi_a, w(0, m - 1, nu));
    } else {
      // Φ(e_s)·b(1-b)b^{n-1}(a-s)^m t^{ν-s} - a·W(n-1,m,ν) = s·W(n,m,ν).
      SkewElt shifted;
      Scalar binom(1);
      for (int j = m; j >= 0; --j) {
        shifted += w(n - 1, j, nu - s).scaled(binom * pow(-is, m - j));
        binom = binom * Scalar(j) / Scalar(m - j + 1);
      }
      out = (T.mul(phi_s, shifted) - T.mul(phi_a, w(n - 1, m, nu))).scaled(is.inverse());
    }
    memo.emplace(key, out);
    return out;
  };

  WitnessReport rep;
  rep.claim = "saturation";
  rep.statement = "b(1-b) b^n a^m t^nu lies in the two-sided ideal generated by Phi(p_mu) in B";
  rep.inputs = {{"n_max", std::to_string(n_max)}, {"m_max", std::to_string(m_max)}};
  std::string ds;
  for (const auto& d : degrees) ds += (ds.empty() ? "" : " ") + to_string(d);
  rep.inputs.emplace_back("degrees", ds);
  for (const auto& nu : degrees)
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= m_max; ++m) {
        SkewElt target(nu, Scalar(bb_poly() * pow(b_poly(), static_cast<unsigned>(n)) * pow(a_poly(), static_cast<unsigned>(m))));
        record(rep, w(n, m, nu), target);
      }
  rep.notes.push_back("recipe: W(0,0,nu) = [Phi(e_(nu-4s)), Phi(p_s)]/(-4 s^3); W(0,m,nu) = a W(0,m-1,nu); "
                      "W(n,m,nu) = (Phi(e_s) sum_j C(m,j)(-s)^(m-j) W(n-1,j,nu-s) - a W(n-1,m,nu))/s");
  return rep;
}

namespace {

Scalar random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Poly p;
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; i + j <= 2; ++j)
      p += Poly::monomial(Monomial::from_factors({{var::a, i}, {var::b, j}}), Rational(coeff(rng)));
  if (p.is_zero()) p = Poly(1);
  return Scalar(p);
}

// Degrees ν_1..ν_l with Σ ν_i = target; nullopt when the monoid
// restriction cannot be met.
std::optional<std::vector<Gamma>> random_degrees(std::mt19937_64& rng, int l, const Gamma& target, bool monoid) {
  std::uniform_int_distribution<int> coord(monoid ? 1 : -3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Gamma> nus;
    Gamma rest = target;
    for (int i = 0; i + 1 < l; ++i) {
      Gamma g(target.rank());
      for (int k = 0; k < target.rank(); ++k) g[k] = coord(rng);
      nus.push_back(g);
      rest -= g;
    }
    nus.push_back(rest);
    if (!monoid) return nus;
    bool positive = true;
    for (int k = 0; k < rest.rank(); ++k) positive = positive && rest[k] > 0;
    if (positive) return nus;
  }
  return std::nullopt;
}

enum class WordSide { Left, Right };

// component = b(1-b) g with g vanishing at the given point.
bool has_shape(const Scalar& f, const Scalar& alpha, const Scalar& beta) {
  if (f.is_zero()) return true;
  auto g = divide_exact(f.num(), bb_poly());
  if (!g) return false;
  return substitute(Scalar::fraction(*g, f.den()), {{var::a, alpha}, {var::b, beta}}).is_zero();
}

WitnessReport nonfg_check(const Enveloping& env, const NonFgOptions& opt, WordSide side) {
  const SkewRing& T = env.ring();
  const Embedding& emb = env.embedding();
  emb.check(opt.test_degree);
  for (const auto& g : opt.generator_degrees)
    if (g == opt.test_degree) throw std::invalid_argument("test degree must differ from the generator degrees");
  if (opt.word_len < 1) throw std::invalid_argument("word length must be >= 1");

  const bool left = side == WordSide::Left;
  const Scalar alpha = left ? Scalar() : -emb.scalar(opt.test_degree);
  const Scalar beta = left ? Scalar() : Scalar(1);

  WitnessReport rep;
  rep.claim = left ? "nonfg-left" : "nonfg-right";
  rep.statement = left ? "(B (I_mu1 + ... + I_muk))_mu lies in (a,b) b(1-b) t^mu"
                       : "((I_mu1 + ... + I_muk) B)_mu lies in (a+mu,b-1) b(1-b) t^mu";
  std::string gens;
  for (const auto& g : opt.generator_degrees) gens += (gens.empty() ? "" : " ") + to_string(g);
  rep.inputs = {{"generator_degrees", gens},
                {"test_degree", to_string(opt.test_degree)},
                {"samples", std::to_string(opt.samples)},
                {"word_len", std::to_string(opt.word_len)},
                {"seed", std::to_string(opt.seed)},
                {"monoid", opt.monoid ? "true" : "false"}};
  if (opt.generator_degrees.empty()) {
    rep.notes.push_back("no generators: vacuous");
    return rep;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, opt.generator_degrees.size() - 1);
  std::uniform_int_distribution<int> length(1, opt.word_len);
  std::size_t skipped = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Gamma lambda = opt.generator_degrees[pick(rng)];
    const int l = length(rng);
    auto nus = random_degrees(rng, l, opt.test_degree - lambda, opt.monoid);
    if (!nus) {
      ++skipped;
      continue;
    }
    SkewElt x = T.mul(SkewElt(emb.zero(), random_poly(rng)), bb(T, lambda));
    SkewElt word = T.one();
    for (const auto& nu : *nus) word = T.mul(word, env.phi_generator(nu));
    SkewElt product = left ? T.mul(word, x) : T.mul(x, word);
    Scalar f = product.component(opt.test_degree);
    ++rep.cases;
    if (!has_shape(f, alpha, beta)) {
      rep.pass = false;
      rep.computed.push_back(SkewElt(opt.test_degree, f));
    }
  }
  if (skipped) rep.notes.push_back(std::to_string(skipped) + " samples had no admissible degree decomposition");

  if (opt.span_word_bound >= 0) {
    std::vector<SkewElt> generators;
    for (const auto& lambda : opt.generator_degrees)
      for (const Poly& p : {Poly(1), a_poly(), b_poly()}) generators.emplace_back(lambda, Scalar(p * bb_poly()));
    std::vector<SkewElt> multipliers;
    for (const auto& g : gamma_box(emb.rank(), 3)) {
      bool positive = true;
      for (int k = 0; k < g.rank(); ++k) positive = positive && g[k] > 0;
      if (!opt.monoid || positive) multipliers.push_back(env.phi_generator(g));
    }
    auto span = ideal_component(T, generators, multipliers, left ? Side::Left : Side::Right, opt.test_degree,
                                opt.span_word_bound, opt.degree_cap);
    for (const auto& f : span) {
      ++rep.cases;
      if (!has_shape(f, alpha, beta)) {
        rep.pass = false;
        rep.computed.push_back(SkewElt(opt.test_degree, f));
      }
    }
    rep.notes.push_back("ideal_component span at word bound " + std::to_string(opt.span_word_bound) + ": dimension " +
                        std::to_string(span.size()));
  }
  return rep;
}

}  // namespace

WitnessReport nonfg_left_check(const Enveloping& env, const NonFgOptions& opt) {
  return nonfg_check(env, opt, WordSide::Left);
}

WitnessReport nonfg_right_check(const Enveloping& env, const NonFgOptions& opt) {
  return nonfg_check(env, opt, WordSide::Right);
}

SkewElt quotient_beta(const SkewElt& u, const Scalar& beta) {
  SkewElt out;
  for (const auto& [g, f] : u.components()) out.add(g, substitute(f, {{var::b, beta}}));
  return out;
}

WitnessReport beta_witness(const Enveloping& env, const Scalar& beta, const Gamma& mu, const Gamma& nu) {
  require_nonzero(mu, "mu");
  require_nonzero(nu, "nu");
  const SkewRing& T = env.ring();
  const Embedding& emb = env.embedding();
  auto q = [&](const Gamma& g) { return quotient_beta(env.phi_generator(g), beta); };
  const Gamma sum = mu + nu;
  SkewElt computed = T.mul(q(mu), q(nu)) - T.mul(q(emb.zero()), q(sum)) - q(sum).scaled(emb.scalar(mu));
  SkewElt expected(sum, beta * emb.scalar(mu) * emb.scalar(nu) * (beta - Scalar(1)));
  WitnessReport rep;
  rep.claim = "beta";
  rep.statement = "(a+beta mu)t^mu (a+beta nu)t^nu - a(a+beta(mu+nu))t^(mu+nu) - mu(a+beta(mu+nu))t^(mu+nu) = "
                  "beta mu nu (beta-1) t^(mu+nu)";
  rep.inputs = {{"beta", to_string(beta)}, {"mu", to_string(mu)}, {"nu", to_string(nu)}};
  record(rep, computed, expected);
  rep.degenerate = (beta * (beta - Scalar(1))).is_zero();
  if (rep.degenerate) rep.notes.push_back("beta(beta-1) = 0: the witness is zero");
  return rep;
}

bool beta_membership(const SkewRing& ring, const SkewElt& u, BetaSubring which) {
  for (const auto& [g, f] : u.components()) {
    if (f.depends_on(var::b)) throw std::invalid_argument("element of k[a]⋊Γ expected, got b in " + to_string(f));
    if (g.is_zero()) continue;
    Scalar root = which == BetaSubring::B0 ? Scalar() : -ring.embedding().scalar(g);
    if (!substitute(f, {{var::a, root}}).is_zero()) return false;
  }
  return true;
}

std::optional<SkewElt> conjugate_by_a(const SkewRing& ring, const SkewElt& u) {
  SkewElt out;
  for (const auto& [g, f] : u.components()) {
    Poly shifted = f.num() * (a_poly() + ring.embedding()(g));
    auto q = divide_exact(shifted, a_poly());
    if (!q) return std::nullopt;
    out.add(g, Scalar::fraction(*q, f.den()));
  }
  return out;
}

SkewElt support_reduction(const SkewRing& ring, const SkewElt& c, const Gamma& mu0) {
  SkewElt shift(ring.embedding().zero(), Scalar(a_poly() + ring.embedding()(mu0)));
  return ring.mul(c, ring.a()) - ring.mul(shift, c);
}

}  // namespace witt
