#include "witt/skew.hpp"

#include <algorithm>

namespace witt {

namespace {

void require_ab_free_den(const Scalar& f) {
  if (f.den().contains(var::a) || f.den().contains(var::b))
    throw std::invalid_argument("component is not a polynomial in a, b: " + to_string(f));
}

bool vanishes_at(const Scalar& f, const Scalar& alpha, const Scalar& beta) {
  return substitute(f, {{var::a, alpha}, {var::b, beta}}).is_zero();
}

}  // namespace

// ---------------------------------------------------------------- SkewElt

SkewElt::SkewElt(const Gamma& g, const Scalar& f) { add(g, f); }

SkewElt SkewElt::from_components(Components comps) {
  SkewElt u;
  for (auto& [g, f] : comps) u.add(g, f);
  return u;
}

Scalar SkewElt::component(const Gamma& g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? Scalar() : it->second;
}

void SkewElt::add(const Gamma& g, const Scalar& f) {
  if (f.is_zero()) return;
  require_ab_free_den(f);
  auto [it, inserted] = comps_.emplace(g, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) comps_.erase(it);
}

SkewElt SkewElt::operator-() const {
  SkewElt u = *this;
  for (auto& [g, f] : u.comps_) f = -f;
  return u;
}

SkewElt& SkewElt::operator+=(const SkewElt& o) {
  for (const auto& [g, f] : o.comps_) add(g, f);
  return *this;
}

SkewElt& SkewElt::operator-=(const SkewElt& o) { return *this += -o; }

SkewElt SkewElt::scaled(const Scalar& c) const {
  SkewElt u;
  for (const auto& [g, f] : comps_) u.add(g, f * c);
  return u;
}

std::string degree_suffix(const Gamma& g) {
  if (g.rank() == 1) {
    if (g[0] == 1) return "t";
    if (g[0] < 0) return "t^(" + std::to_string(g[0]) + ")";
    return "t^" + std::to_string(g[0]);
  }
  return "t^" + to_string(g);
}

std::string to_string(const SkewElt& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [g, f] : u.components()) {
    std::string term;
    if (g.is_zero()) {
      term = to_string(f);
      if (f.num().terms().size() > 1 && f.den().is_constant()) term = "(" + term + ")";
    } else if (f == Scalar(1)) {
      term = degree_suffix(g);
    } else if (f == Scalar(-1)) {
      term = "-" + degree_suffix(g);
    } else if (f.num().terms().size() == 1 && f.den().is_constant()) {
      term = to_string(f) + "*" + degree_suffix(g);
    } else if (f.den().is_constant()) {
      term = "(" + to_string(f) + ")*" + degree_suffix(g);
    } else {
      term = to_string(f) + "*" + degree_suffix(g);
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

// ---------------------------------------------------------------- SkewRing

SkewElt SkewRing::t(const Gamma& g) const {
  emb_.check(g);
  return {g, Scalar(1)};
}

Scalar SkewRing::shift(const Scalar& f, const Gamma& g) const {
  if (g.is_zero() || !f.num().contains(var::a)) return f;
  Poly shifted = substitute(f.num(), var::a, Poly::variable(var::a) + emb_(g));
  return Scalar::fraction(shifted, f.den());
}

SkewElt SkewRing::mul(const SkewElt& u, const SkewElt& v) const {
  SkewElt out;
  for (const auto& [g, f] : u.components())
    for (const auto& [d, h] : v.components()) out.add(g + d, f * shift(h, g));
  return out;
}

SkewElt SkewRing::pow(const SkewElt& u, int e) const {
  if (e < 0) {
    const auto& comps = u.components();
    if (comps.size() != 1 || comps.begin()->second.depends_on(var::a) || comps.begin()->second.depends_on(var::b))
      throw std::domain_error("only c*t^g with c free of a, b can be inverted");
    const auto& [g, c] = *comps.begin();
    return {-g * static_cast<std::int32_t>(-e), witt::pow(c, e)};
  }
  SkewElt result = one();
  for (int i = 0; i < e; ++i) result = mul(result, u);
  return result;
}

// ---------------------------------------------------------------- points

PointSpec PointSpec::affine(const Scalar& alpha, const Scalar& beta) {
  PointSpec p;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

PointSpec PointSpec::infinitely_near(const Scalar& alpha, const Scalar& beta, const Scalar& x, const Scalar& y) {
  if (x.is_zero() && y.is_zero()) throw std::invalid_argument("direction [x:y] must be nonzero");
  PointSpec p = affine(alpha, beta);
  p.kind = Kind::InfinitelyNear;
  p.x = x;
  p.y = y;
  return p;
}

bool operator==(const PointSpec& l, const PointSpec& r) {
  if (l.kind != r.kind || !(l.alpha == r.alpha) || !(l.beta == r.beta)) return false;
  if (l.is_affine()) return true;
  return (l.x * r.y - l.y * r.x).is_zero();
}

std::string to_string(const PointSpec& p) {
  std::string s = "(" + to_string(p.alpha) + "," + to_string(p.beta);
  if (!p.is_affine()) s += ";[" + to_string(p.x) + ":" + to_string(p.y) + "]";
  return s + ")";
}

IdealizerSpec IdealizerSpec::S(const PointSpec& p0) {
  if (!p0.is_affine()) throw std::invalid_argument("S(p0) needs an affine point");
  IdealizerSpec s;
  s.p0 = p0;
  return s;
}

IdealizerSpec IdealizerSpec::R(const PointSpec& p0, const PointSpec& p1) {
  if (!p0.is_affine() || !p1.is_affine()) throw std::invalid_argument("R(p0,p1) needs affine points");
  if (p0 == p1) throw std::invalid_argument("R(p0,p1) needs p0 != p1");
  IdealizerSpec s;
  s.kind = Kind::R;
  s.p0 = p0;
  s.p1 = p1;
  return s;
}

std::string to_string(const IdealizerSpec& s) {
  auto pt = [](const PointSpec& p) { return to_string(p.alpha) + "," + to_string(p.beta); };
  if (s.kind == IdealizerSpec::Kind::S) return "S(" + pt(s.p0) + ")";
  return "R(" + pt(s.p0) + ";" + pt(s.p1) + ")";
}

bool poly_in_point_ideal(const Scalar& f, const PointSpec& p) {
  require_ab_free_den(f);
  if (!vanishes_at(f, p.alpha, p.beta)) return false;
  if (p.is_affine()) return true;
  Scalar dir = p.x * derivative(f, var::a) + p.y * derivative(f, var::b);
  return vanishes_at(dir, p.alpha, p.beta);
}

bool in_right_point_ideal(const SkewElt& u, const PointSpec& p) {
  return std::all_of(u.components().begin(), u.components().end(),
                     [&](const auto& c) { return poly_in_point_ideal(c.second, p); });
}

bool in_left_point_ideal(const SkewRing& ring, const SkewElt& u, const PointSpec& p) {
  if (!p.is_affine()) throw std::invalid_argument("left point ideals are taken at affine points");
  for (const auto& [g, f] : u.components())
    if (!vanishes_at(f, p.alpha - ring.embedding().scalar(g), p.beta)) return false;
  return true;
}

bool in_idealizer(const SkewRing& ring, const SkewElt& u, const IdealizerSpec& spec) {
  for (const auto& [g, f] : u.components()) {
    if (g.is_zero()) continue;
    if (!poly_in_point_ideal(f, spec.p0)) return false;
    if (spec.kind == IdealizerSpec::Kind::R &&
        !vanishes_at(f, spec.p1.alpha - ring.embedding().scalar(g), spec.p1.beta))
      return false;
  }
  return true;
}

bool orbits_may_coincide(const SkewRing& ring, const PointSpec& p0, const PointSpec& p1) {
  Scalar db = p1.beta - p0.beta;
  if (db.is_rational() && !db.is_zero()) return false;
  Scalar da = p1.alpha - p0.alpha;
  if (!da.is_rational()) return true;
  Rational q = da.rational_value();
  if (ring.embedding().numeric()) return q.get_den() == 1;
  // Generic symbols: ι(Γ) meets Q only in 0.
  return q == 0;
}

std::map<AbExponent, Scalar> ab_coefficients(const Scalar& f) {
  require_ab_free_den(f);
  std::map<AbExponent, std::vector<Poly::Term>> buckets;
  for (const auto& t : f.num().terms()) {
    auto [r1, ea] = t.mono.split(var::a);
    auto [rest, eb] = r1.split(var::b);
    buckets[{ea, eb}].push_back({rest, t.coeff});
  }
  std::map<AbExponent, Scalar> out;
  for (auto& [k, terms] : buckets) out.emplace(k, Scalar::fraction(Poly::from_terms(std::move(terms)), f.den()));
  return out;
}

std::uint32_t ab_degree(const Scalar& f) {
  std::uint32_t d = 0;
  for (const auto& t : f.num().terms()) d = std::max(d, t.mono.exponent(var::a) + t.mono.exponent(var::b));
  return d;
}

namespace {

// Products of at most `bound` multipliers, grouped by length.
std::vector<std::vector<SkewElt>> words(const SkewRing& ring, const std::vector<SkewElt>& mults, int bound) {
  std::vector<std::vector<SkewElt>> out(bound + 1);
  out[0].push_back(ring.one());
  for (int len = 1; len <= bound; ++len)
    for (const auto& w : out[len - 1])
      for (const auto& m : mults) out[len].push_back(ring.mul(w, m));
  return out;
}

}  // namespace

std::vector<Scalar> ideal_component(const SkewRing& ring, const std::vector<SkewElt>& generators,
                                    const std::vector<SkewElt>& multipliers, Side side, const Gamma& degree,
                                    int word_bound, std::optional<std::uint32_t> degree_cap) {
  if (word_bound < 0) throw std::invalid_argument("word bound must be >= 0");
  ring.embedding().check(degree);
  std::uint32_t cap = 0;
  if (degree_cap) {
    cap = *degree_cap;
  } else {
    for (const auto& g : generators)
      for (const auto& [d, f] : g.components()) cap = std::max(cap, ab_degree(f));
    cap += static_cast<std::uint32_t>(word_bound);
  }
  auto w = words(ring, multipliers, word_bound);
  EchelonBasis<AbExponent> basis;
  std::vector<Scalar> out;
  auto consider = [&](const Scalar& f) {
    if (f.is_zero()) return;
    if (ab_degree(f) > cap)
      throw DegreeCapExceeded("a,b-degree " + std::to_string(ab_degree(f)) + " exceeds cap " + std::to_string(cap));
    auto c = ab_coefficients(f);
    if (basis.insert(SparseVec<AbExponent>(c.begin(), c.end()))) out.push_back(f);
  };
  for (const auto& x : generators) {
    for (int i = 0; i <= word_bound; ++i) {
      if (side == Side::Right && i > 0) break;
      for (const auto& l : w[i]) {
        SkewElt lx = ring.mul(l, x);
        for (int j = 0; i + j <= word_bound; ++j) {
          if (side == Side::Left && j > 0) break;
          for (const auto& r : w[j]) consider(ring.mul(lx, r).component(degree));
        }
      }
    }
  }
  return out;
}

bool in_span(const std::vector<Scalar>& span, const Scalar& f) {
  EchelonBasis<AbExponent> basis;
  for (const auto& s : span) {
    auto c = ab_coefficients(s);
    basis.insert(SparseVec<AbExponent>(c.begin(), c.end()));
  }
  auto c = ab_coefficients(f);
  return basis.contains(SparseVec<AbExponent>(c.begin(), c.end()));
}

}  // namespace witt
