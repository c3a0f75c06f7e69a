#pragma once

#include <map>
#include <string>
#include <vector>

#include "witt/gamma.hpp"
#include "witt/skew.hpp"

namespace witt {

/// e_{γ1} ⋯ e_{γk}; in normal form the γi are non-decreasing.
using PbwMonomial = std::vector<Gamma>;

/// Longer monomials first, then lexicographic.
struct PbwOrder {
  bool operator()(const PbwMonomial& l, const PbwMonomial& r) const {
    if (l.size() != r.size()) return l.size() > r.size();
    return l < r;
  }
};

class UElt {
 public:
  using Terms = std::map<PbwMonomial, Scalar, PbwOrder>;

  UElt() = default;
  explicit UElt(const Scalar& c);
  UElt(const PbwMonomial& m, const Scalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const PbwMonomial& m) const;
  void add(const PbwMonomial& m, const Scalar& c);

  UElt operator-() const;
  UElt& operator+=(const UElt& o);
  UElt& operator-=(const UElt& o);
  UElt scaled(const Scalar& c) const;
  friend UElt operator+(UElt l, const UElt& r) { return l += r; }
  friend UElt operator-(UElt l, const UElt& r) { return l -= r; }
  friend bool operator==(const UElt&, const UElt&) = default;

 private:
  Terms terms_;
};

/// "e(1)*e(3) - e(2)^2 - e(4)"; longer monomials first.
std::string to_string(const UElt& u);
bool is_sorted_monomial(const PbwMonomial& m);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// U(W_Γ) with [e_μ, e_ν] = (ι(ν) - ι(μ)) e_{μ+ν}.
class Enveloping {
 public:
  explicit Enveloping(Embedding emb) : emb_(emb), ring_(emb) {}
  const Embedding& embedding() const { return emb_; }
  const SkewRing& ring() const { return ring_; }

  UElt one() const { return UElt(Scalar(1)); }
  UElt generator(const Gamma& g) const;
  UElt bracket(const Gamma& mu, const Gamma& nu) const;
  /// Normal form of the (unsorted) word e_{w1} ⋯ e_{wk}.
  UElt word(const PbwMonomial& w, RewriteStrategy s = RewriteStrategy::LeftmostFirst) const;
  UElt mul(const UElt& u, const UElt& v, RewriteStrategy s = RewriteStrategy::LeftmostFirst) const;
  UElt pow(const UElt& u, unsigned e) const;

  /// Normal form of a linear combination of arbitrary words. Each rewrite
  /// replaces an adjacent pair e_ν e_μ with ν > μ by e_μ e_ν + (ι(μ) - ι(ν)) e_{μ+ν}.
  UElt normal_form(std::map<PbwMonomial, Scalar> pending, RewriteStrategy s) const;

  /// Φ(e_μ) = (a + b ι(μ)) t^μ, extended as a unital anti-homomorphism.
  SkewElt phi(const UElt& u) const;
  SkewElt phi_generator(const Gamma& g) const;
  /// Φ'(e_n) = (-a - b n) t^n, extended as a homomorphism. Integer embedding only.
  SkewElt phi_prime(const UElt& u) const;

 private:
  Embedding emb_;
  SkewRing ring_;
};

/// Φ(u) = 0, cross-checked against u·v_0 = 0 in V(α,β) with symbolic α, β.
/// Throws std::logic_error when the two criteria disagree.
bool kernel_test(const Enveloping& env, const UElt& u);

/// Images in T of the generators u, v, w of T' under a candidate map α.
struct TPrimeImages {
  SkewElt u, v, w;
  std::string label;
  /// u -> (b - a)t, v -> t, w -> bt.
  static TPrimeImages printed(const SkewRing& ring);
  /// u -> (-a - b)t, v -> t, w -> bt.
  static TPrimeImages corrected(const SkewRing& ring);
};

struct BridgeCase {
  std::string name;
  SkewElt lhs;
  SkewElt rhs;
  bool equal = false;
};

struct BridgeReport {
  std::vector<BridgeCase> relations;  // image of each relation vs 0
  std::vector<BridgeCase> triangle;   // α(φ̂(e_n)) vs Φ'(e_n)
  bool relations_pass() const;
  bool triangle_pass() const;
};

/// Checks uv - vu - v², uw - wu - wv, vw - wv map to 0 and that
/// α((u - (n-1)w) v^(n-1)) = Φ'(e_n) for |n| <= range.
BridgeReport tprime_bridge_check(const Enveloping& env, int range, const TPrimeImages& images);

}  // namespace witt
