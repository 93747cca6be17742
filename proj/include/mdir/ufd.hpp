#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/rational.hpp"

namespace mdir {

// N(f) = min of n_1*...*n_k over the support, 0 for the zero function. On a
// finite box only the restriction is visible; `box_limited` flags the zero
// case, where larger support outside the box cannot be excluded.
struct NormResult {
  std::uint64_t value = 0;
  bool box_limited = false;
};

inline NormResult norm(const ArithFunction& f) {
  if (f.is_zero()) return NormResult{0, true};
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& n : f.keys()) best = std::min(best, n.product());
  return NormResult{best, false};
}

inline bool is_unit(const ArithFunction& f) { return f.is_unit(); }

// h with f*h = g on the box, for f in the unit group.
inline ArithFunction divide_by_unit(const ArithFunction& g, const ArithFunction& f,
                                    const Box& box) {
  if (!f.is_unit()) throw NotAUnitError("divide_by_unit: divisor is not a unit");
  return convolve(invert(f, box), g, box);
}

// ---- Box-local divisibility certificates ------------------------------------

enum class Solvability { solvable_on_box, inconsistent };

// Outcome of the exact linear system g(n) = sum_{a*b=n} f(a) h(b) over all n
// in the box. `inconsistent` disproves global divisibility (the equations are
// necessary); `solvable_on_box` is NOT a global proof, only a certificate at
// this truncation.
struct DivisionCertificate {
  Solvability status = Solvability::inconsistent;
  std::optional<ArithFunction> quotient;  // particular solution, free unknowns 0
};

inline DivisionCertificate divides_on_box(const ArithFunction& f, const ArithFunction& g,
                                          const Box& box) {
  detail::require_same_arity(f, g);
  detail::require_covers(f, box);
  detail::require_covers(g, box);
  const int k = f.arity();
  const BoxIndexer ix(k, box);
  const auto m = static_cast<std::size_t>(ix.size());
  const auto slots_f = detail::support_slots(f, ix);
  const auto dtab = divisor_table(ix.max_coordinate());

  // Row n: sum over b | n of f(n/b) h(b) = g(n). Unknown b indexed by rank.
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t row = 0; row < m; ++row) {
    const MultiIndex n = ix.index_at(row);
    detail::for_each_divisor_tuple(ix, dtab, n, [&](std::uint64_t ra, std::uint64_t rb) {
      const std::uint32_t sa = slots_f.slot(ra);
      if (sa == detail::kNoSlot) return;
      mat[row][static_cast<std::size_t>(rb)] += f.values()[sa];
    });
    mat[row][m] = g.value(n);
  }

  // Exact Gauss-Jordan; free unknowns stay 0.
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t pr = row;
    while (pr < m && mat[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(mat[row], mat[pr]);
    const Rational inv = Rational(1) / mat[row][col];
    for (std::size_t c = col; c <= m; ++c) mat[row][c] *= inv;
    for (std::size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == row || mat[r2][col] == 0) continue;
      const Rational factor = mat[r2][col];
      for (std::size_t c = col; c <= m; ++c) mat[r2][c] -= factor * mat[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r2 = row; r2 < m; ++r2)
    if (mat[r2][m] != 0) return DivisionCertificate{Solvability::inconsistent, std::nullopt};

  ArithFunctionBuilder h(k, box);
  for (std::size_t r2 = 0; r2 < row; ++r2)
    if (mat[r2][m] != 0)
      h.set(ix.index_at(pivot_col_of_row[r2]), mat[r2][m]);
  return DivisionCertificate{Solvability::solvable_on_box, std::move(h).build()};
}

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<ArithFunction> unit_witness;  // epsilon with f = epsilon * g, when both are units
};

inline EquivalenceResult equivalent_on_box(const ArithFunction& f, const ArithFunction& g,
                                           const Box& box) {
  if (f.is_unit() && g.is_unit())
    return EquivalenceResult{true, convolve(f, invert(g, box), box)};
  const bool fg = divides_on_box(f, g, box).status == Solvability::solvable_on_box;
  const bool gf = fg && divides_on_box(g, f, box).status == Solvability::solvable_on_box;
  return EquivalenceResult{fg && gf, std::nullopt};
}

// ---- Prime certificate -------------------------------------------------------

enum class PrimeCertificate { certified_prime, unknown };

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// A prime norm certifies primality in the function ring; a composite norm
// certifies nothing (the criterion is sufficient, not necessary).
inline PrimeCertificate norm_prime_certificate(const ArithFunction& f) {
  if (f.is_zero()) throw DomainError("norm_prime_certificate: zero function");
  if (f.is_unit()) throw DomainError("norm_prime_certificate: unit");
  return detail::is_prime_u64(norm(f).value) ? PrimeCertificate::certified_prime
                                             : PrimeCertificate::unknown;
}

// ---- Support-condition subrings ---------------------------------------------

enum class SupportRing { euler_zagier, star, mordell_tornheim, apostol_vu };

inline bool subring_membership(const ArithFunction& f, SupportRing which) {
  auto chain = [](const MultiIndex& n, bool strict) {
    for (int j = 1; j < n.arity(); ++j)
      if (strict ? !(n[j - 1] < n[j]) : !(n[j - 1] <= n[j])) return false;
    return true;
  };
  auto mt_ok = [](const MultiIndex& n) {
    std::uint64_t s = 0;
    for (int j = 0; j + 1 < n.arity(); ++j) s += n[j];
    return !(static_cast<std::uint64_t>(n[n.arity() - 1]) < s);
  };
  for (const auto& n : f.keys()) {
    switch (which) {
      case SupportRing::euler_zagier:
        if (!chain(n, true)) return false;
        break;
      case SupportRing::star:
        if (!chain(n, false)) return false;
        break;
      case SupportRing::mordell_tornheim:
        if (!mt_ok(n)) return false;
        break;
      case SupportRing::apostol_vu:
        if (!chain(n, true) || !mt_ok(n)) return false;
        break;
    }
  }
  return true;
}

}  // namespace mdir
