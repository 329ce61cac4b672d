#pragma once

// Exact linear algebra over Z and Q: sparse integer matrices, Smith normal
// form, fraction-free rank, and flag-respecting column reductions used for
// filtration bookkeeping.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace khoma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using DenseInt = std::vector<std::vector<Int>>;

namespace linalg {

// Smith normal form: returns the nonzero invariant factors d_1 | d_2 | ...,
// all positive.  Destroys its argument.
inline std::vector<Int> snf_invariant_factors(DenseInt a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<Int> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // smallest-magnitude pivot in the trailing block
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          Int mag = abs(a[i][j]);
          if (pi == -1 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
    if (pi == -1) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        if (q != 0)
          for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder becomes the new, smaller pivot
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the block
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

// Rank over Q by fraction-free (Bareiss) elimination.  Destroys its argument.
inline int rank_q(DenseInt a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    Int best;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        Int mag = abs(a[i][col]);
        if (piv == -1 || mag < best) {
          best = mag;
          piv = i;
        }
      }
    if (piv == -1) continue;
    std::swap(a[rank], a[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Determinant by Bareiss, for square matrices.
inline Int det(DenseInt a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv == -1) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Column echelon over Q with pivots at the bottom-most possible positions:
// after the call, the nonzero columns have pairwise distinct positions of
// their last nonzero coordinate.  Used to intersect a span with the flag of
// coordinate prefixes.  Returns the echelonized nonzero columns.
inline std::vector<std::vector<Rat>> bottom_echelon(std::vector<std::vector<Rat>> cols) {
  const int dim = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  auto last_nonzero = [&](const std::vector<Rat>& v) {
    for (int i = dim - 1; i >= 0; --i)
      if (v[i] != 0) return i;
    return -1;
  };
  std::map<int, std::vector<Rat>> by_pivot;  // bottom position -> column
  for (auto& col : cols) {
    std::vector<Rat> v = std::move(col);
    int p = last_nonzero(v);
    while (p >= 0) {
      auto it = by_pivot.find(p);
      if (it == by_pivot.end()) {
        by_pivot.emplace(p, std::move(v));
        break;
      }
      Rat factor = v[p] / it->second[p];
      for (int i = 0; i <= p; ++i) v[i] -= factor * it->second[i];
      p = last_nonzero(v);
    }
  }
  std::vector<std::vector<Rat>> out;
  out.reserve(by_pivot.size());
  for (auto& [p, v] : by_pivot) out.push_back(std::move(v));
  return out;
}

// Basis of the kernel of an integer matrix (columns = input coordinates),
// over Q.  Rows index equations.  Returns kernel vectors of length cols.
inline std::vector<std::vector<Rat>> kernel_q(const DenseInt& a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    std::swap(m[r], m[piv]);
    Rat lead = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= lead;
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c];
        for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> kernel;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols);
    v[c] = 1;
    for (int rr = 0; rr < static_cast<int>(pivot_col.size()); ++rr) v[pivot_col[rr]] = -m[rr][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Factor n > 1 into prime powers, ascending.  Desk-scale trial division.
inline std::vector<Int> prime_power_factors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      Int pk = 1;
      while (n % p == 0) {
        pk *= p;
        n /= p;
      }
      out.push_back(pk);
    }
  }
  if (n > 1) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linalg
}  // namespace khoma
