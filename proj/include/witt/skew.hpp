#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "witt/gamma.hpp"
#include "witt/linalg.hpp"
#include "witt/scalar.hpp"

namespace witt {

/// Element Σ f_γ(a,b) t^γ of T = k[a,b]⋊Γ. Each component is a Scalar whose
/// denominator is free of a and b.
class SkewElt {
 public:
  using Components = std::map<Gamma, Scalar>;

  SkewElt() = default;
  SkewElt(const Gamma& g, const Scalar& f);
  static SkewElt from_components(Components comps);

  const Components& components() const { return comps_; }
  Scalar component(const Gamma& g) const;
  bool is_zero() const { return comps_.empty(); }
  void add(const Gamma& g, const Scalar& f);

  SkewElt operator-() const;
  SkewElt& operator+=(const SkewElt& o);
  SkewElt& operator-=(const SkewElt& o);
  SkewElt scaled(const Scalar& c) const;
  friend SkewElt operator+(SkewElt l, const SkewElt& r) { return l += r; }
  friend SkewElt operator-(SkewElt l, const SkewElt& r) { return l -= r; }
  friend bool operator==(const SkewElt&, const SkewElt&) = default;

 private:
  Components comps_;
};

/// "(a + 1)*t + b*t^(-2)"; rank 1 degrees print as t^n, higher ranks as t^(i,j).
std::string to_string(const SkewElt& u);
std::string degree_suffix(const Gamma& g);

class SkewRing {
 public:
  explicit SkewRing(Embedding emb) : emb_(emb) {}
  const Embedding& embedding() const { return emb_; }

  SkewElt one() const { return {emb_.zero(), Scalar(1)}; }
  SkewElt t(const Gamma& g) const;
  SkewElt a() const { return {emb_.zero(), Scalar::symbol(var::a)}; }
  SkewElt b() const { return {emb_.zero(), Scalar::symbol(var::b)}; }
  SkewElt scalar(const Scalar& f) const { return {emb_.zero(), f}; }

  /// f(a + ι(γ), b).
  Scalar shift(const Scalar& f, const Gamma& g) const;
  SkewElt mul(const SkewElt& u, const SkewElt& v) const;
  /// Negative exponents only for c·t^γ with c free of a and b.
  SkewElt pow(const SkewElt& u, int e) const;

 private:
  Embedding emb_;
};

struct PointSpec {
  enum class Kind { Affine, InfinitelyNear };
  Kind kind = Kind::Affine;
  Scalar alpha, beta, x, y;

  static PointSpec affine(const Scalar& alpha, const Scalar& beta);
  static PointSpec infinitely_near(const Scalar& alpha, const Scalar& beta, const Scalar& x, const Scalar& y);
  bool is_affine() const { return kind == Kind::Affine; }
  PointSpec base() const { return affine(alpha, beta); }

  // Infinitely near points compare equal when the directions are proportional.
  friend bool operator==(const PointSpec& l, const PointSpec& r);
};

std::string to_string(const PointSpec& p);

struct IdealizerSpec {
  enum class Kind { S, R };
  Kind kind = Kind::S;
  PointSpec p0, p1;

  static IdealizerSpec S(const PointSpec& p0);
  static IdealizerSpec R(const PointSpec& p0, const PointSpec& p1);
};

std::string to_string(const IdealizerSpec& s);

/// Membership of f ∈ k[a,b] in I(p) or I(q). An infinitely near point q at
/// (α,β) with direction [x:y] contains f iff f(α,β) = 0 and
/// x f_a(α,β) + y f_b(α,β) = 0.
bool poly_in_point_ideal(const Scalar& f, const PointSpec& p);
bool in_right_point_ideal(const SkewElt& u, const PointSpec& p);
/// u ∈ T·I(p): every component at γ vanishes at (α - ι(γ), β).
bool in_left_point_ideal(const SkewRing& ring, const SkewElt& u, const PointSpec& p);
bool in_idealizer(const SkewRing& ring, const SkewElt& u, const IdealizerSpec& spec);
/// False only when p0 and p1 provably lie on different Γ-orbits.
bool orbits_may_coincide(const SkewRing& ring, const PointSpec& p0, const PointSpec& p1);

using AbExponent = std::pair<std::uint32_t, std::uint32_t>;
/// Coefficients of f as a polynomial in a, b over the remaining symbols.
std::map<AbExponent, Scalar> ab_coefficients(const Scalar& f);
std::uint32_t ab_degree(const Scalar& f);

struct DegreeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right, TwoSided };

/// Spanning set of the degree-γ part of the (left, right or two-sided) ideal
/// generated by `generators`, using products with at most `word_bound`
/// factors from `multipliers`. Returned elements are linearly independent
/// over the Scalar field. Throws DegreeCapExceeded when a candidate has
/// a,b-degree above the cap (default: max generator degree + word_bound).
std::vector<Scalar> ideal_component(const SkewRing& ring, const std::vector<SkewElt>& generators,
                                    const std::vector<SkewElt>& multipliers, Side side, const Gamma& degree,
                                    int word_bound, std::optional<std::uint32_t> degree_cap = std::nullopt);

bool in_span(const std::vector<Scalar>& span, const Scalar& f);

}  // namespace witt
