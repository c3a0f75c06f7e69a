#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "witt/skew.hpp"

using namespace witt;
using th::G;
using th::S;
using th::T;

namespace {

const SkewRing& ring() {
  static const SkewRing r(Embedding::integer());
  return r;
}

oracle::Skew to_oracle(const SkewElt& u) {
  oracle::Skew out;
  for (const auto& [g, f] : u.components()) out[g[0]] = *oracle::from_scalar(f);
  return out;
}

SkewElt random_skew(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-3, 3), c(-2, 2), n(1, 3);
  SkewElt u;
  for (int k = n(rng); k > 0; --k) {
    Poly p;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) p += Poly::variable(var::a, i) * Poly::variable(var::b, j) * Poly(c(rng));
    u.add(G(deg(rng)), Scalar(p));
  }
  return u;
}

oracle::BiPoly random_bipoly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> c(-2, 2);
  oracle::BiPoly p;
  for (int i = 0; i <= max_deg; ++i)
    for (int j = 0; i + j <= max_deg; ++j)
      if (int v = c(rng)) p[{i, j}] = v;
  return p;
}

Scalar to_scalar(const oracle::BiPoly& p) {
  Poly out;
  for (const auto& [k, c] : p)
    out += Poly::variable(var::a, static_cast<unsigned>(k.first)) * Poly::variable(var::b, static_cast<unsigned>(k.second)) *
           Poly(Rational(c));
  return Scalar(out);
}

}  // namespace

TEST_CASE("multiplication follows the shift rule") {
  CHECK(ring().mul(T("t"), T("a")) == T("(a+1)*t"));
  CHECK(ring().mul(T("(a+2*b)*t^2"), T("(a+b)*t")) == T("(a+2*b)*(a+2+b)*t^3"));
  SkewElt u = T("(a+2*b)*t^2 - b*t^(-1)");
  CHECK(ring().mul(u, ring().one()) == u);
  CHECK(ring().mul(ring().one(), u) == u);
  CHECK(ring().pow(T("2*t"), -2) == T("1/4*t^(-2)"));
  CHECK_THROWS(ring().pow(T("a*t"), -1));
}

TEST_CASE("multiplication agrees with the oracle and is associative") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    SkewElt u = random_skew(rng), v = random_skew(rng), w = random_skew(rng);
    CHECK(to_oracle(ring().mul(u, v)) == oracle::skew_mul(to_oracle(u), to_oracle(v)));
    CHECK(ring().mul(ring().mul(u, v), w) == ring().mul(u, ring().mul(v, w)));
    CHECK(ring().mul(u, v + w) == ring().mul(u, v) + ring().mul(u, w));
  }
}

TEST_CASE("shift") {
  CHECK(ring().shift(S("a"), G(2)) == S("a+2"));
  CHECK(ring().shift(S("b"), G(-7)) == S("b"));
  CHECK(ring().shift(S("a+b*mu"), G(5)) == S("a+5+b*mu"));
  SkewRing r2(Embedding::symbolic(2));
  CHECK(r2.shift(S("a", 2), Gamma{1, -2}) == S("a+g1-2*g2", 2));
}

TEST_CASE("components") {
  SkewElt u = T("a*t + b*t^2");
  CHECK(u.component(G(2)) == S("b"));
  CHECK(u.component(G(5)).is_zero());
  CHECK(ring().mul(T("t"), T("a*t")).component(G(2)) == S("a+1"));
  CHECK_THROWS(SkewElt(G(1), S("1") / S("a")));
  CHECK(to_string(T("(b-b^2)*t^4")) == "(-b^2 + b)*t^4");
  CHECK(to_string(T("t^(-3)")) == "t^(-3)");
  CHECK(to_string(T("t(1,-2)", 2)) == "t^(1,-2)");
}

TEST_CASE("point ideals") {
  const Scalar al = Scalar::symbol(var::alpha), be = Scalar::symbol(var::beta);
  const Scalar x = Scalar::symbol(var::x), y = Scalar::symbol(var::y);
  CHECK(poly_in_point_ideal(S("a"), PointSpec::affine(0, 0)));
  CHECK(poly_in_point_ideal(S("y*(a-alpha) - x*(b-beta)"), PointSpec::infinitely_near(al, be, x, y)));
  CHECK(poly_in_point_ideal(S("2*a-b"), PointSpec::infinitely_near(0, 0, 1, 2)));
  CHECK_FALSE(poly_in_point_ideal(S("a-b"), PointSpec::infinitely_near(0, 0, 1, 2)));
  CHECK(poly_in_point_ideal(S("a^2"), PointSpec::infinitely_near(0, 0, 1, 2)));
  CHECK(PointSpec::infinitely_near(0, 0, 1, 2) == PointSpec::infinitely_near(0, 0, 3, 6));
  CHECK_FALSE(PointSpec::infinitely_near(0, 0, 1, 2) == PointSpec::infinitely_near(0, 0, 2, 1));
}

TEST_CASE("point ideal membership agrees with the generator-expansion oracle") {
  std::mt19937_64 rng(99);
  const std::vector<std::pair<int, int>> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  const std::vector<std::pair<int, int>> points = {{0, 0}, {0, 1}, {2, -1}};
  int positives = 0;
  for (const auto& [al, be] : points)
    for (int trial = 0; trial < 40; ++trial) {
      const auto& [dx, dy] = dirs[static_cast<std::size_t>(trial) % dirs.size()];
      const bool near = trial % 5 != 4;
      std::optional<std::pair<mpq_class, mpq_class>> dir;
      if (near) dir = std::make_pair(mpq_class(dx), mpq_class(dy));
      // Alternate between random polynomials and random ideal elements.
      oracle::BiPoly f;
      if (trial % 2 == 0) {
        f = random_bipoly(rng, 4);
      } else {
        for (const auto& g : oracle::point_generators(al, be, dir))
          f = oracle::add(f, oracle::mul(g, random_bipoly(rng, 2)));
      }
      const bool want = oracle::in_point_ideal(f, al, be, dir);
      positives += want ? 1 : 0;
      const PointSpec p = near ? PointSpec::infinitely_near(al, be, dx, dy) : PointSpec::affine(al, be);
      CHECK(poly_in_point_ideal(to_scalar(f), p) == want);
    }
  CHECK(positives >= 50);
}

TEST_CASE("right and left point ideals") {
  const PointSpec origin = PointSpec::affine(0, 0), p01 = PointSpec::affine(0, 1);
  CHECK(in_right_point_ideal(T("a*t^5"), origin));
  CHECK_FALSE(in_right_point_ideal(T("(a+1)"), origin));
  for (int mu = -3; mu <= 3; ++mu) {
    SkewElt phi = T("(a+" + std::to_string(mu) + "*b)*t^(" + std::to_string(mu) + ")");
    CHECK(in_right_point_ideal(phi, origin));
    CHECK(in_left_point_ideal(ring(), phi, p01));
  }
  CHECK(in_left_point_ideal(ring(), T("b"), origin));
  CHECK_FALSE(in_left_point_ideal(ring(), T("a*t"), p01));
}

TEST_CASE("idealizers") {
  const auto R = IdealizerSpec::R(PointSpec::affine(0, 0), PointSpec::affine(0, 1));
  for (int mu = -3; mu <= 3; ++mu)
    CHECK(in_idealizer(ring(), T("(a+" + std::to_string(mu) + "*b)*t^(" + std::to_string(mu) + ")"), R));
  CHECK_FALSE(in_idealizer(ring(), T("t"), R));
  CHECK(in_idealizer(ring(), T("a^3 - 7*b + 2"), R));
  CHECK(in_idealizer(ring(), T("a*t^2"), IdealizerSpec::S(PointSpec::affine(0, 0))));
  CHECK_FALSE(in_idealizer(ring(), T("t^2"), IdealizerSpec::S(PointSpec::affine(0, 0))));
  CHECK_THROWS(IdealizerSpec::R(PointSpec::affine(0, 0), PointSpec::affine(0, 0)));
  CHECK_FALSE(orbits_may_coincide(ring(), PointSpec::affine(0, 0), PointSpec::affine(0, 1)));
  CHECK(orbits_may_coincide(ring(), PointSpec::affine(0, 0), PointSpec::affine(3, 0)));
}

TEST_CASE("ideal components") {
  std::vector<SkewElt> mults;
  for (int g = -3; g <= 3; ++g) mults.push_back(T("(a+" + std::to_string(g) + "*b)*t^(" + std::to_string(g) + ")"));
  const std::vector<SkewElt> gens = {T("(b-b^2)*t^4")};
  auto span0 = ideal_component(ring(), gens, mults, Side::TwoSided, G(0), 2);
  CHECK(in_span(span0, S("b*(1-b)")));
  auto span4 = ideal_component(ring(), gens, mults, Side::TwoSided, G(4), 0);
  REQUIRE(span4.size() == 1);
  CHECK(in_span(span4, S("b-b^2")));
  CHECK_FALSE(in_span(span4, S("b")));
  CHECK(ideal_component(ring(), {}, mults, Side::Left, G(0), 2).empty());
  CHECK_THROWS_AS(ideal_component(ring(), gens, mults, Side::Left, G(0), 2, 1u), DegreeCapExceeded);
}
