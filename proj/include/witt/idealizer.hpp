#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/enveloping.hpp"

namespace witt {

struct WitnessReport {
  std::string claim;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<SkewElt> computed;
  std::vector<SkewElt> expected;
  bool pass = true;
  bool degenerate = false;
  std::size_t cases = 0;
  std::vector<std::string> notes;
};

/// p_μ = e_μ e_{3μ} - e_{2μ}^2 - ι(μ) e_{4μ}.
UElt p_mu(const Enveloping& env, const Gamma& mu);
/// b(1-b) t^ν.
SkewElt bb(const SkewRing& ring, const Gamma& nu);

/// Φ(p_μ) = ι(μ)^2 b(1-b) t^{4μ}.
WitnessReport pmu_check(const Enveloping& env, const Gamma& mu);

/// [Φ(e_{ν-4μ}), b(1-b)t^{4μ}] = -4 ι(μ) b(1-b) t^ν.
WitnessReport ideal_witness(const Enveloping& env, const Gamma& nu, const Gamma& mu);

/// Builds b(1-b) b^n a^m t^ν for n <= n_max, m <= m_max, ν in `degrees`
/// from Φ(p_μ) using only left multiplication by Φ(e_0) = a and Φ(e_s),
/// commutators and linear combinations (s = μ = first unit vector).
WitnessReport saturation_check(const Enveloping& env, int n_max, int m_max, const std::vector<Gamma>& degrees);

struct NonFgOptions {
  std::size_t samples = 200;
  int word_len = 4;
  std::vector<Gamma> generator_degrees;
  Gamma test_degree;
  std::uint64_t seed = 1;
  /// Restrict multiplier degrees to positive ones (submonoid variant).
  bool monoid = false;
  /// Also compare ideal_component spans at this word bound (negative: skip).
  int span_word_bound = 2;
  std::optional<std::uint32_t> degree_cap;
};

/// Every degree-μ element of B·(Σ I_{μ_i}) has the form b(1-b) g with
/// g(0,0) = 0 (left), resp. g(-ι(μ), 1) = 0 for (Σ I_{μ_i})·B (right).
WitnessReport nonfg_left_check(const Enveloping& env, const NonFgOptions& opt);
WitnessReport nonfg_right_check(const Enveloping& env, const NonFgOptions& opt);

/// b -> β in every component.
SkewElt quotient_beta(const SkewElt& u, const Scalar& beta);

/// (a+βμ)t^μ (a+βν)t^ν - a(a+β(μ+ν))t^{μ+ν} - ι(μ)(a+β(μ+ν))t^{μ+ν} = β ι(μ) ι(ν) (β-1) t^{μ+ν}.
WitnessReport beta_witness(const Enveloping& env, const Scalar& beta, const Gamma& mu, const Gamma& nu);

enum class BetaSubring { B0, B1 };

/// B0 = k + a(k[a]⋊Γ), B1 = k + (k[a]⋊Γ)a, tested componentwise.
bool beta_membership(const SkewRing& ring, const SkewElt& u, BetaSubring which);

/// u' with u a = a u', or nullopt when a does not divide.
std::optional<SkewElt> conjugate_by_a(const SkewRing& ring, const SkewElt& u);

/// c a - (a + ι(μ0)) c; removes the t^{μ0} term of c ∈ k⋊Γ.
SkewElt support_reduction(const SkewRing& ring, const SkewElt& c, const Gamma& mu0);

}  // namespace witt
