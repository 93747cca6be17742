#pragma once

// Test-side reference implementations. These stay independent of the library
// paths they check: divisor enumeration by trial division, convolution as a
// literal double loop over component divisors, the inverse through a dense
// linear solve, and Moebius by factorization.

#include <cstdint>
#include <vector>

#include "mdir/arith_function.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/rational.hpp"

namespace oracles {

inline std::vector<std::uint64_t> divisors_by_trial(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int moebius(std::uint64_t n) {
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++factors;
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

// (f*g)(n) summed over an explicit cartesian product of coordinate divisors.
inline mdir::Rational convolve_at(const mdir::ArithFunction& f, const mdir::ArithFunction& g,
                                  const mdir::MultiIndex& n) {
  const int k = n.arity();
  std::vector<std::vector<std::uint64_t>> divs;
  for (int j = 0; j < k; ++j) divs.push_back(divisors_by_trial(n[j]));
  std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
  mdir::Rational acc(0);
  while (true) {
    mdir::MultiIndex::Storage a, b;
    for (int j = 0; j < k; ++j) {
      const auto d = divs[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
      a.push_back(static_cast<mdir::Coord>(d));
      b.push_back(static_cast<mdir::Coord>(n[j] / d));
    }
    acc += f.value(mdir::MultiIndex(a)) * g.value(mdir::MultiIndex(b));
    int j = k - 1;
    while (j >= 0) {
      auto& p = pos[static_cast<std::size_t>(j)];
      if (++p < divs[static_cast<std::size_t>(j)].size()) break;
      p = 0;
      --j;
    }
    if (j < 0) break;
  }
  return acc;
}

// Dense Gaussian elimination for f*h = I over all box indices. Unlike the
// library recursion this never orders by coordinate sum; it pivots the full
// matrix.
inline mdir::ArithFunction invert_by_dense_solve(const mdir::ArithFunction& f,
                                                 const mdir::Box& box) {
  const int k = f.arity();
  const mdir::BoxIndexer ix(k, box);
  const auto m = static_cast<std::size_t>(ix.size());
  std::vector<std::vector<mdir::Rational>> mat(m, std::vector<mdir::Rational>(m + 1, 0));
  for (std::size_t row = 0; row < m; ++row) {
    const mdir::MultiIndex n = ix.index_at(row);
    const int kk = n.arity();
    std::vector<std::vector<std::uint64_t>> divs;
    for (int j = 0; j < kk; ++j) divs.push_back(divisors_by_trial(n[j]));
    std::vector<std::size_t> pos(static_cast<std::size_t>(kk), 0);
    while (true) {
      mdir::MultiIndex::Storage a, b;
      for (int j = 0; j < kk; ++j) {
        const auto d = divs[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
        a.push_back(static_cast<mdir::Coord>(d));
        b.push_back(static_cast<mdir::Coord>(n[j] / d));
      }
      mat[row][static_cast<std::size_t>(*ix.rank_of(mdir::MultiIndex(b)))] +=
          f.value(mdir::MultiIndex(a));
      int j = kk - 1;
      while (j >= 0) {
        auto& p = pos[static_cast<std::size_t>(j)];
        if (++p < divs[static_cast<std::size_t>(j)].size()) break;
        p = 0;
        --j;
      }
      if (j < 0) break;
    }
    mat[row][m] = n.is_all_ones() ? mdir::Rational(1) : mdir::Rational(0);
  }
  for (std::size_t col = 0, row = 0; col < m && row < m; ++col) {
    std::size_t pr = row;
    while (pr < m && mat[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(mat[row], mat[pr]);
    const mdir::Rational inv = mdir::Rational(1) / mat[row][col];
    for (std::size_t c = col; c <= m; ++c) mat[row][c] *= inv;
    for (std::size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == row || mat[r2][col] == 0) continue;
      const mdir::Rational factor = mat[r2][col];
      for (std::size_t c = col; c <= m; ++c) mat[r2][c] -= factor * mat[row][c];
    }
    ++row;
  }
  mdir::ArithFunctionBuilder h(k, box);
  for (std::size_t r = 0; r < m; ++r) {
    // After full elimination each row is a pivot row (units are nonsingular).
    std::size_t col = 0;
    while (col < m && mat[r][col] == 0) ++col;
    if (col < m && mat[r][m] != 0) h.set(ix.index_at(col), mat[r][m]);
  }
  return std::move(h).build();
}

inline bool same_function(const mdir::ArithFunction& a, const mdir::ArithFunction& b) {
  return a.keys() == b.keys() && a.values() == b.values();
}

}  // namespace oracles
