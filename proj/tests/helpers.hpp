#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "witt/session.hpp"

namespace th {

inline const witt::Session& session(int rank = 1) {
  static const witt::Session integer(witt::Embedding::integer());
  static const witt::Session sym2(witt::Embedding::symbolic(2));
  return rank == 1 ? integer : sym2;
}

/// Element of T parsed in the integer (rank 1) or symbolic rank-2 session.
inline witt::SkewElt T(const std::string& text, int rank = 1) {
  const auto& s = session(rank);
  return s.skew(*s.parse(text));
}

/// Polynomial in a, b (and parameters), i.e. the degree-0 part of T.
inline witt::Scalar S(const std::string& text, int rank = 1) {
  const auto& s = session(rank);
  witt::Value v = s.eval(text);
  if (auto* sc = std::get_if<witt::Scalar>(&v)) return *sc;
  const auto& u = std::get<witt::SkewElt>(v);
  REQUIRE(u.components().size() <= 1);
  return u.component(s.embedding().zero());
}

inline witt::UElt U(const std::string& text, int rank = 1) {
  const auto& s = session(rank);
  return s.uelt(*s.parse(text));
}

inline witt::Gamma G(int n) { return witt::Gamma{n}; }

}  // namespace th
