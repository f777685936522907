#pragma once

#include <optional>
#include <vector>

#include "lctpoly/rational.hpp"

namespace lctpoly {

// Reduced row echelon form with leading entries 1, computed over the
// rationals. Pivot columns are chosen left to right, so the result is a
// canonical basis of the row space. Zero rows are dropped.
struct Rref {
  std::vector<RatVec> rows;
  std::vector<int> pivots;  // pivot column of each row
};

inline Rref rref(std::vector<RatVec> rows) {
  Rref out;
  if (rows.empty()) return out;
  const std::size_t cols = rows[0].size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    const Rational lead = rows[next][col];
    for (auto& x : rows[next]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[next][j];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

// Canonical coset representative of v modulo the row space: subtracts
// multiples of the basis rows until every pivot column entry is zero.
inline RatVec reduce_mod(const Rref& basis, RatVec v) {
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    const Rational f = v[basis.pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[i][j];
  }
  return v;
}

inline int rank_of(const std::vector<RatVec>& rows) {
  return static_cast<int>(rref(rows).rows.size());
}

// Solves A x = b by Gauss-Jordan elimination, free variables set to zero.
// Returns nullopt for inconsistent systems.
inline std::optional<RatVec> solve_linear(std::vector<RatVec> a, RatVec b) {
  const std::size_t m = a.size();
  if (m == 0) return RatVec{};
  const std::size_t n = a[0].size();
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  const Rref sys = rref(std::move(a));
  RatVec x(n, Rational(0));
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (sys.pivots[i] == static_cast<int>(n)) return std::nullopt;
    x[sys.pivots[i]] = sys.rows[i][n];
  }
  return x;
}

}  // namespace lctpoly
