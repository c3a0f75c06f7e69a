#pragma once

#include <map>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

/// Incremental row space over the Scalar field, kept in reduced echelon form
/// (pivot = smallest key of each row, pivots eliminated from all other rows).
template <class Key>
class EchelonBasis {
 public:
  /// Adds v; returns false when v is already in the span.
  bool insert(SparseVec<Key> v) {
    reduce(v);
    if (v.empty()) return false;
    Key pivot = v.begin()->first;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    for (auto& row : rows_) {
      auto it = row.second.find(pivot);
      if (it == row.second.end()) continue;
      Scalar c = it->second;
      axpy(row.second, -c, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(SparseVec<Key> v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, SparseVec<Key>>& rows() const { return rows_; }

 private:
  static void axpy(SparseVec<Key>& y, const Scalar& c, const SparseVec<Key>& x) {
    for (const auto& [k, xv] : x) {
      auto it = y.find(k);
      if (it == y.end()) {
        y.emplace(k, c * xv);
      } else {
        it->second += c * xv;
        if (it->second.is_zero()) y.erase(it);
      }
    }
  }

  void reduce(SparseVec<Key>& v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Scalar c = it->second;
      axpy(v, -c, row);
    }
  }

  std::map<Key, SparseVec<Key>> rows_;
};

}  // namespace witt
