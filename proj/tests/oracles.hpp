#pragma once

// Reference implementations for the tests. They use only GMP rationals and
// standard containers, never the library's Poly, Scalar or rewriting code.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "witt/scalar.hpp"
#include "witt/symbols.hpp"

namespace oracle {

/// Dense polynomial in a, b: (i, j) -> coefficient of a^i b^j.
using BiPoly = std::map<std::pair<int, int>, mpq_class>;

inline void prune(BiPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline BiPoly add(BiPoly l, const BiPoly& r) {
  for (const auto& [k, c] : r) l[k] += c;
  prune(l);
  return l;
}

inline BiPoly scale(BiPoly p, const mpq_class& c) {
  for (auto& [k, v] : p) v *= c;
  prune(p);
  return p;
}

/// Term-by-term distributive expansion.
inline BiPoly mul(const BiPoly& l, const BiPoly& r) {
  BiPoly out;
  for (const auto& [kl, cl] : l)
    for (const auto& [kr, cr] : r) out[{kl.first + kr.first, kl.second + kr.second}] += cl * cr;
  prune(out);
  return out;
}

inline mpq_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(r);
}

inline mpq_class power(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// p(a + s, b) by binomial expansion.
inline BiPoly shift(const BiPoly& p, const mpq_class& s) {
  BiPoly out;
  for (const auto& [k, c] : p)
    for (int j = 0; j <= k.first; ++j) out[{j, k.second}] += c * binom(k.first, j) * power(s, k.first - j);
  prune(out);
  return out;
}

inline mpq_class eval(const BiPoly& p, const mpq_class& a, const mpq_class& b) {
  mpq_class r = 0;
  for (const auto& [k, c] : p) r += c * power(a, k.first) * power(b, k.second);
  return r;
}

/// Library Scalar (polynomial in a, b with rational coefficients) as a BiPoly.
inline std::optional<BiPoly> from_scalar(const witt::Scalar& s) {
  if (!s.den().is_constant()) return std::nullopt;
  const mpq_class d = s.den().constant_term();
  BiPoly out;
  for (const auto& t : s.num().terms()) {
    for (const auto& [v, e] : t.mono.factors())
      if (v != witt::var::a && v != witt::var::b) return std::nullopt;
    out[{static_cast<int>(t.mono.exponent(witt::var::a)), static_cast<int>(t.mono.exponent(witt::var::b))}] +=
        t.coeff / d;
  }
  prune(out);
  return out;
}

/// Rank-1 skew element: degree -> coefficient polynomial.
using Skew = std::map<int, BiPoly>;

/// (f t^g)(h t^d) = f h(a + g, b) t^(g+d).
inline Skew skew_mul(const Skew& l, const Skew& r) {
  Skew out;
  for (const auto& [g, f] : l)
    for (const auto& [d, h] : r) {
      BiPoly& slot = out[g + d];
      slot = add(slot, mul(f, shift(h, g)));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

/// Φ(e_n) = (a + n b) t^n, integer embedding.
inline Skew phi_gen(int n) {
  BiPoly f;
  f[{1, 0}] = 1;
  if (n != 0) f[{0, 1}] = n;
  return {{n, f}};
}

/// Φ(e_{w1} ⋯ e_{wk}) = Φ(e_{wk}) ⋯ Φ(e_{w1}).
inline Skew phi_word(const std::vector<int>& w) {
  Skew acc{{0, BiPoly{{{0, 0}, 1}}}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = skew_mul(acc, phi_gen(*it));
  return acc;
}

/// PBW normal form in U(W), integer embedding, by recursive insertion:
/// e_g · (e_{m1} ⋯ e_{mk}) with m sorted.
using Word = std::vector<int>;
using UPoly = std::map<Word, mpq_class>;

inline void accumulate(UPoly& acc, const UPoly& p, const mpq_class& c) {
  for (const auto& [w, v] : p) {
    acc[w] += c * v;
    if (acc[w] == 0) acc.erase(w);
  }
}

inline UPoly insert(int g, const Word& sorted) {
  if (sorted.empty() || g <= sorted.front()) {
    Word w{g};
    w.insert(w.end(), sorted.begin(), sorted.end());
    return {{w, 1}};
  }
  // e_g e_m = e_m e_g + (m - g) e_{g+m}, m = sorted.front() < g.
  const int m = sorted.front();
  Word rest(sorted.begin() + 1, sorted.end());
  UPoly out;
  // Brackets inside insert(g, rest) can produce degrees below m, so e_m is
  // inserted again rather than prepended.
  for (const auto& [w, c] : insert(g, rest)) accumulate(out, insert(m, w), c);
  if (m - g != 0) accumulate(out, insert(g + m, rest), mpq_class(m - g));
  return out;
}

inline UPoly normal_form(const Word& w) {
  UPoly cur{{Word{}, 1}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    UPoly next;
    for (const auto& [s, c] : cur) accumulate(next, insert(*it, s), c);
    cur = std::move(next);
  }
  return cur;
}

/// Reduced row echelon membership test over Q: is `target` in the span of `rows`?
inline bool in_span(std::vector<BiPoly> rows, const BiPoly& target) {
  std::vector<std::pair<std::pair<int, int>, BiPoly>> basis;  // pivot key, row
  auto reduce = [&](BiPoly v) {
    for (const auto& [key, row] : basis) {
      auto it = v.find(key);
      if (it == v.end()) continue;
      const mpq_class c = it->second / row.at(key);
      v = add(v, scale(row, -c));
    }
    return v;
  };
  for (auto& r : rows) {
    BiPoly v = reduce(r);
    if (v.empty()) continue;
    const auto key = v.begin()->first;
    for (auto& [k2, row] : basis) {
      auto it = row.find(key);
      if (it != row.end()) row = add(row, scale(v, -it->second / v.at(key)));
    }
    basis.emplace_back(key, v);
  }
  return reduce(target).empty();
}

inline BiPoly monomial(int i, int j, const mpq_class& c = 1) { return {{{i, j}, c}}; }

/// Degree <= d part of the ideal generated by `gens`, as a spanning list of
/// monomial multiples (the generators used below are Gröbner bases for a
/// degree order, so truncation is exact).
inline std::vector<BiPoly> expand(const std::vector<BiPoly>& gens, int d) {
  std::vector<BiPoly> out;
  for (const auto& g : gens)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) out.push_back(mul(g, monomial(i, j)));
  return out;
}

/// Generators of the ideal of (α, β), or of the infinitely near point at
/// (α, β) with direction [x:y]: m^2 and y(a-α) - x(b-β).
inline std::vector<BiPoly> point_generators(const mpq_class& al, const mpq_class& be,
                                            std::optional<std::pair<mpq_class, mpq_class>> dir) {
  BiPoly A = add(monomial(1, 0), monomial(0, 0, -al));
  BiPoly B = add(monomial(0, 1), monomial(0, 0, -be));
  if (!dir) return {A, B};
  return {mul(A, A), mul(A, B), mul(B, B), add(scale(A, dir->second), scale(B, -dir->first))};
}

inline int total_degree(const BiPoly& p) {
  int d = 0;
  for (const auto& [k, c] : p) d = std::max(d, k.first + k.second);
  return d;
}

inline bool in_point_ideal(const BiPoly& f, const mpq_class& al, const mpq_class& be,
                           std::optional<std::pair<mpq_class, mpq_class>> dir) {
  const int d = std::max(total_degree(f), 2);
  return in_span(expand(point_generators(al, be, dir), d), f);
}

}  // namespace oracle
