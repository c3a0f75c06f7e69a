#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

/// Element of Γ ≅ Z^n, n = rank <= kMaxRank.
class Gamma {
 public:
  static constexpr int kMaxRank = var::kMaxGenerators;

  Gamma() = default;
  explicit Gamma(int rank);
  Gamma(std::initializer_list<std::int32_t> coords);
  static Gamma from_vector(const std::vector<std::int32_t>& coords);
  static Gamma unit(int rank, int i);

  int rank() const { return rank_; }
  std::int32_t operator[](int i) const { return c_[i]; }
  std::int32_t& operator[](int i) { return c_[i]; }
  bool is_zero() const;

  Gamma operator-() const;
  Gamma& operator+=(const Gamma& o);
  Gamma& operator-=(const Gamma& o);
  friend Gamma operator+(Gamma l, const Gamma& r) { return l += r; }
  friend Gamma operator-(Gamma l, const Gamma& r) { return l -= r; }
  Gamma operator*(std::int32_t k) const;

  // Rank first, then lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const Gamma& l, const Gamma& r);
  friend bool operator==(const Gamma& l, const Gamma& r) = default;

 private:
  int rank_ = 1;
  std::array<std::int32_t, kMaxRank> c_{};
};

/// Lexicographic comparison; throws std::invalid_argument on rank mismatch.
std::strong_ordering gamma_compare(const Gamma& l, const Gamma& r);

/// "3" in rank 1, "(1,-2)" otherwise.
std::string to_string(const Gamma& g);

/// All elements with coordinates in [-radius, radius], in increasing order.
std::vector<Gamma> gamma_box(int rank, int radius);

/// The inclusion ι: Γ -> k. Symbolic: ι(γ) = Σ γ_i g_i with independent
/// symbols g_i. Integer: rank 1 and ι(γ) = γ_1.
class Embedding {
 public:
  enum class Mode { Symbolic, NumericRank1 };

  Embedding() = default;
  Embedding(int rank, Mode mode);
  static Embedding symbolic(int rank) { return {rank, Mode::Symbolic}; }
  static Embedding integer() { return {1, Mode::NumericRank1}; }

  int rank() const { return rank_; }
  Mode mode() const { return mode_; }
  bool numeric() const { return mode_ == Mode::NumericRank1; }

  Poly operator()(const Gamma& g) const;
  Scalar scalar(const Gamma& g) const { return Scalar((*this)(g)); }
  Gamma zero() const { return Gamma(rank_); }
  void check(const Gamma& g) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  int rank_ = 1;
  Mode mode_ = Mode::NumericRank1;
};

}  // namespace witt
