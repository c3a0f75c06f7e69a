#include "witt/gamma.hpp"

#include <stdexcept>

namespace witt {

Gamma::Gamma(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank must be in 1.." + std::to_string(kMaxRank));
}

Gamma::Gamma(std::initializer_list<std::int32_t> coords) : Gamma(static_cast<int>(coords.size())) {
  int i = 0;
  for (auto c : coords) c_[i++] = c;
}

Gamma Gamma::from_vector(const std::vector<std::int32_t>& coords) {
  Gamma g(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) g.c_[i] = coords[i];
  return g;
}

Gamma Gamma::unit(int rank, int i) {
  Gamma g(rank);
  g.c_.at(i) = 1;
  return g;
}

bool Gamma::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Gamma Gamma::operator-() const {
  Gamma g = *this;
  for (int i = 0; i < rank_; ++i) g.c_[i] = -g.c_[i];
  return g;
}

Gamma& Gamma::operator+=(const Gamma& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Gamma& Gamma::operator-=(const Gamma& o) { return *this += -o; }

Gamma Gamma::operator*(std::int32_t k) const {
  Gamma g = *this;
  for (int i = 0; i < rank_; ++i) g.c_[i] *= k;
  return g;
}

std::strong_ordering operator<=>(const Gamma& l, const Gamma& r) {
  if (l.rank_ != r.rank_) return l.rank_ <=> r.rank_;
  for (int i = 0; i < l.rank_; ++i)
    if (l.c_[i] != r.c_[i]) return l.c_[i] <=> r.c_[i];
  return std::strong_ordering::equal;
}

std::strong_ordering gamma_compare(const Gamma& l, const Gamma& r) {
  if (l.rank() != r.rank()) throw std::invalid_argument("rank mismatch");
  return l <=> r;
}

std::string to_string(const Gamma& g) {
  if (g.rank() == 1) return std::to_string(g[0]);
  std::string s = "(";
  for (int i = 0; i < g.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

std::vector<Gamma> gamma_box(int rank, int radius) {
  std::vector<Gamma> out;
  Gamma g(rank);
  for (int i = 0; i < rank; ++i) g[i] = -radius;
  while (true) {
    out.push_back(g);
    int i = rank - 1;
    while (i >= 0 && g[i] == radius) g[i--] = -radius;
    if (i < 0) break;
    ++g[i];
  }
  return out;
}

Embedding::Embedding(int rank, Mode mode) : rank_(rank), mode_(mode) {
  if (rank < 1 || rank > Gamma::kMaxRank) throw std::invalid_argument("rank must be in 1.." + std::to_string(Gamma::kMaxRank));
  if (mode == Mode::NumericRank1 && rank != 1)
    throw std::invalid_argument("integer embedding requires rank 1; use the symbolic embedding for rank >= 2");
}

void Embedding::check(const Gamma& g) const {
  if (g.rank() != rank_)
    throw std::invalid_argument("rank mismatch: expected rank " + std::to_string(rank_) + ", got " + to_string(g));
}

Poly Embedding::operator()(const Gamma& g) const {
  check(g);
  if (numeric()) return Poly(static_cast<long>(g[0]));
  Poly p;
  for (int i = 0; i < rank_; ++i)
    if (g[i] != 0) p += Poly::monomial(Monomial::of(var::g(i + 1)), Rational(g[i]));
  return p;
}

}  // namespace witt
