#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pcurves/poly/rational.hpp"

namespace pcurves {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

/// Row echelon reduction in place over a field; returns pivot columns.
template <typename F>
std::vector<std::size_t> echelon(Matrix<F>& m, std::size_t cols, bool reduced) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = reduced ? 0 : r + 1; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <typename F>
int rank_of(Matrix<F> m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, m[0].size(), false).size());
}

/// Basis of the right null space.
template <typename F>
std::vector<std::vector<F>> kernel(Matrix<F> m, std::size_t cols) {
  auto piv = echelon(m, cols, true);
  std::vector<std::vector<F>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    bool is_piv = false;
    for (std::size_t p : piv) is_piv |= p == c;
    if (is_piv) continue;
    std::vector<F> v(cols, F(0));
    v[c] = F(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution of A x = b, if the system is consistent (any one when not unique).
template <typename F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = echelon(aug, cols + 1, true);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

}  // namespace pcurves
