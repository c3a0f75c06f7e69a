#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/enveloping.hpp"

namespace witt {

/// Basis of P(q) / Q(q) used to read off coefficients: chart X needs x != 0,
/// chart Y needs y != 0; Auto picks X whenever x is nonzero.
enum class Chart { Auto, X, Y };

struct FamilySpec {
  enum class Kind { V, A, B, Atilde, Btilde, P, Q, Dual };
  Kind kind = Kind::V;
  Scalar p1, p2;                 // (α, β) for V, (x, y) for A, B, P, Q
  std::optional<Scalar> aprime;  // tilde families; nullopt is a' = ∞
  Chart chart = Chart::Auto;
  std::shared_ptr<const FamilySpec> inner;

  static FamilySpec V(const Scalar& alpha, const Scalar& beta);
  static FamilySpec A(const Scalar& x, const Scalar& y);
  static FamilySpec B(const Scalar& x, const Scalar& y);
  static FamilySpec Atilde(std::optional<Scalar> aprime);
  static FamilySpec Btilde(std::optional<Scalar> aprime);
  /// P(q) for q infinitely near (0,0) in direction [x:y].
  static FamilySpec P(const Scalar& x, const Scalar& y, Chart chart = Chart::Auto);
  /// Q(q) for q infinitely near (0,1) in direction [x:y].
  static FamilySpec Q(const Scalar& x, const Scalar& y, Chart chart = Chart::Auto);
  static FamilySpec Dual(const FamilySpec& f);

  /// Resolved chart of a P or Q family.
  Chart resolved_chart() const;
};

std::string to_string(const FamilySpec& f);
/// Structural equality; A and B parameters compare projectively.
bool same_family(const FamilySpec& l, const FamilySpec& r);

/// Finite combination of the basis vectors v_γ of a family.
class ModVec {
 public:
  const std::map<Gamma, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(const Gamma& g) const;
  void add(const Gamma& g, const Scalar& c);
  ModVec scaled(const Scalar& c) const;
  ModVec& operator+=(const ModVec& o);
  friend ModVec operator+(ModVec l, const ModVec& r) { return l += r; }
  friend bool operator==(const ModVec&, const ModVec&) = default;

 private:
  std::map<Gamma, Scalar> coeffs_;
};

std::string to_string(const ModVec& v);

/// c(μ,ν) with e_μ v_ν = c(μ,ν) v_{μ+ν}.
Scalar coefficient(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& nu);
ModVec act(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const ModVec& v);
/// Left action of u; the rightmost PBW factor acts first.
ModVec act_u(const Enveloping& env, const FamilySpec& f, const UElt& u, const ModVec& v);
/// Coefficient of v'_{γ+μ} in e_μ v'_γ on the restricted dual.
Scalar adjoint_act(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& gamma);

/// e_μ(e_ν v_γ) - e_ν(e_μ v_γ) - (ι(ν) - ι(μ)) e_{μ+ν} v_γ, as a coefficient of v_{μ+ν+γ}.
Scalar module_axiom_defect(const Enveloping& env, const FamilySpec& f, const Gamma& mu, const Gamma& nu,
                           const Gamma& gamma);

/// Coefficient of the class of f t^γ in the chosen basis of P(q) or Q(q).
/// Throws std::domain_error when f t^γ is not in the numerator of the quotient.
Scalar pq_reduce(const FamilySpec& f, const Gamma& gamma, const Scalar& poly);
/// Representative in T of the basis vector v_γ of P(q) or Q(q).
SkewElt pq_representative(const FamilySpec& f, const Gamma& gamma);

using ActionTable = std::map<std::pair<Gamma, Gamma>, Scalar>;
ActionTable action_table(const Enveloping& env, const FamilySpec& f, int box);

using Rescaling = std::map<Gamma, Scalar>;

/// Nonzero λ with λ_{μ+ν} c1(μ,ν) = c2(μ,ν) λ_ν on every listed pair,
/// normalised to λ_0 = 1 (else λ = 1 at the smallest index of each
/// connected block). nullopt when no such λ exists.
std::optional<Rescaling> solve_rescaling(const ActionTable& t1, const ActionTable& t2);
std::optional<Rescaling> iso_check(const Enveloping& env, const FamilySpec& f1, const FamilySpec& f2, int box);

struct ShiftReport {
  bool pass = true;
  std::vector<std::pair<std::pair<Gamma, Gamma>, std::pair<Scalar, Scalar>>> mismatches;
};

/// The regrading V(α,β)(ν) agrees with V(α+ι(ν), β) on the box.
ShiftReport shift_check(const Enveloping& env, const Scalar& alpha, const Scalar& beta, const Gamma& nu, int box);

struct Classification {
  std::optional<FamilySpec> family;  // nullopt: Unknown
  Rescaling rescaling;
};

/// Tries V, then A, then B; each candidate must match the whole table up
/// to rescaling. Pairs missing from the table are not constrained.
Classification classify(const Enveloping& env, const ActionTable& table);

}  // namespace witt
