#pragma once

/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over any field type with +, -, *, / and is_zero().
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

inline bool is_zero_value(const Rat& q) { return sgn(q) == 0; }
template <class T>
bool is_zero_value(const T& x) {
  return x.is_zero();
}

/// Incrementally tracks the span of added vectors. add() either records a new independent
/// vector or returns the coefficients expressing it in terms of the earlier ones.
template <class T>
class SpanReducer {
 public:
  SpanReducer(T zero, T one) : zero_(std::move(zero)), one_(std::move(one)) {}

  /// Coefficients c with v = sum c_i * added_i if v is in the span (without recording it);
  /// nullopt otherwise.
  std::optional<std::vector<T>> express(const std::vector<T>& v) const {
    std::vector<T> r = v;
    std::vector<T> comb(count_, zero_);
    reduce(r, comb);
    for (const auto& x : r)
      if (!is_zero_value(x)) return std::nullopt;
    // r = v - sum comb_i * added_i = 0
    return comb;
  }

  /// Adds v; returns its expression in the earlier vectors if dependent (then v is not recorded).
  std::optional<std::vector<T>> add(const std::vector<T>& v) {
    std::vector<T> r = v;
    std::vector<T> comb(count_, zero_);
    reduce(r, comb);
    std::size_t pivot = r.size();
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!is_zero_value(r[i])) {
        pivot = i;
        break;
      }
    if (pivot == r.size()) return comb;
    // Row r = v - sum comb_i added_i; store normalized with its combination.
    T inv = one_ / r[pivot];
    for (auto& x : r) x = x * inv;
    std::vector<T> rowcomb(count_ + 1, zero_);
    for (std::size_t i = 0; i < count_; ++i) rowcomb[i] = zero_ - comb[i] * inv;
    rowcomb[count_] = inv;
    for (auto& row : rows_) row.comb.resize(count_ + 1, zero_);
    rows_.push_back({pivot, std::move(r), std::move(rowcomb)});
    ++count_;
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<T> v;     // echelon row, v[pivot] = 1
    std::vector<T> comb;  // v = sum comb_i * added_i
  };

  void reduce(std::vector<T>& r, std::vector<T>& comb) const {
    for (const auto& row : rows_) {
      if (row.pivot >= r.size() || is_zero_value(r[row.pivot])) continue;
      T f = r[row.pivot];
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!is_zero_value(row.v[i])) r[i] = r[i] - f * row.v[i];
      for (std::size_t i = 0; i < row.comb.size(); ++i)
        if (!is_zero_value(row.comb[i])) comb[i] = comb[i] + f * row.comb[i];
    }
  }

  T zero_, one_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

/// Basis of the right null space of M (rows x cols).
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> m, const T& zero, const T& one) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_value(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    T inv = one / m[r][c];
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_value(m[i][c])) continue;
      T f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<T>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, zero);
    v[free] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cyclo
