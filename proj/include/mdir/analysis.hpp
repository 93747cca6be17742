#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/rational.hpp"

namespace mdir {

using ComplexVec = std::vector<std::complex<double>>;
using AlphaVector = std::vector<double>;

// ---- Outward rounding --------------------------------------------------------
//
// True directed rounding is not portable here; instead every floating chain is
// inflated outward by kUlpStep (one unit in the last place, relative) per
// operation. `ops` counts the operations in the chain.

constexpr double kUlpStep = 0x1p-52;
constexpr double kPoleGuard = 1e-6;
constexpr std::uint64_t kDefaultZetaTerms = 10000;

inline double inflate_up(double x, double ops) { return x + ops * kUlpStep * std::fabs(x); }
inline double inflate_down(double x, double ops) { return x - ops * kUlpStep * std::fabs(x); }

// A closed interval certified to contain the target quantity.
struct Enclosure {
  double lower = 0;
  double upper = 0;
  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

namespace detail {

// Kahan sum of n^-a over 2 <= n <= terms, with a certified float-error bound
// relative to that small remainder (the n = 1 term is exact and added by the
// callers, which keeps enclosures tight near 1).
struct RestSum {
  double value = 0;
  double slack = 0;
};

inline RestSum zeta_rest_sum(double a, std::uint64_t terms) {
  double sum = 0, comp = 0, abs_sum = 0;
  for (std::uint64_t n = terms; n >= 2; --n) {
    const double term = std::pow(static_cast<double>(n), -a);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += term;
  }
  // 2 ulps per pow plus the compensated-summation bound.
  return RestSum{sum, inflate_up(abs_sum * 8 * kUlpStep, 4)};
}

}  // namespace detail

// Certified enclosure of the partial sum of n^-a through `terms` (no pole
// restriction: the sum is finite for any a).
inline Enclosure zeta_partial_enclosure(double a, std::uint64_t terms) {
  if (terms < 1) throw InputError("zeta partial sum: need at least one term");
  const auto rest = detail::zeta_rest_sum(a, terms);
  return Enclosure{std::nextafter(1 + (rest.value - rest.slack), 0.0),
                   std::nextafter(1 + (rest.value + rest.slack),
                                  std::numeric_limits<double>::infinity())};
}

// [partial sum, partial sum + tail bound] around zeta(a). Convexity of x^-a
// gives n^-a <= integral over [n-1/2, n+1/2], so the tail past T is at most
// (T+1/2)^(1-a)/(a-1).
inline Enclosure zeta_enclosure(double a, std::uint64_t terms = kDefaultZetaTerms) {
  if (!(a > 1 + kPoleGuard))
    throw PoleGuardError("zeta_enclosure: exponent " + std::to_string(a) +
                         " within pole guard of 1");
  const auto partial = zeta_partial_enclosure(a, terms);
  const double tail =
      inflate_up(std::pow(static_cast<double>(terms) + 0.5, 1 - a) / (a - 1), 8);
  return Enclosure{partial.lower,
                   std::nextafter(partial.upper + tail, std::numeric_limits<double>::infinity())};
}

// ---- Growth bounds -----------------------------------------------------------

// Certificate |f(n)| <= C * prod n_j^{r_j} for all n != (1,...,1). C = 0 is
// admitted and certifies support concentrated at (1,...,1) exactly.
struct GrowthBound {
  double C = 1;
  std::vector<double> exponents;  // r_1..r_k

  static GrowthBound uniform(int k, double C, double r) {
    return GrowthBound{C, std::vector<double>(static_cast<std::size_t>(k), r)};
  }
};

namespace detail {

inline double bound_rhs(const MultiIndex& n, double C, const std::vector<double>& r) {
  double rhs = C;
  for (int j = 0; j < n.arity(); ++j)
    rhs *= std::pow(static_cast<double>(n[j]), r[static_cast<std::size_t>(j)]);
  return inflate_up(rhs, 4.0 * n.arity() + 2);
}

}  // namespace detail

// Checks the bound at every box index except (1,...,1): exact left side,
// upward-rounded right side. Absent indices are zero and satisfy the bound
// trivially, so only the stored support is scanned.
inline bool verify_growth_bound(const ArithFunction& f, const GrowthBound& b) {
  if (static_cast<int>(b.exponents.size()) != f.arity())
    throw InputError("growth bound arity mismatch");
  if (b.C < 0) throw InputError("growth bound needs C >= 0");
  for (std::size_t i = 0; i < f.keys().size(); ++i) {
    const MultiIndex& n = f.keys()[i];
    if (n.is_all_ones()) continue;
    const Rational lhs = abs(f.values()[i]);
    if (lhs > rational_from_double(detail::bound_rhs(n, b.C, b.exponents))) return false;
  }
  return true;
}

// ---- Exponent search for the inverse growth bound -----------------------------

struct AlphaSearch {
  AlphaVector alpha;          // r_j + t per coordinate
  double offset = 0;          // the uniform t
  double zeta_product_upper;  // certified product of zeta upper bounds at alpha_j - r_j
  double threshold;           // 1 + |f(1)| / C, rounded down
};

// Smallest uniform offset t on a 1e-6 grid in (1, 64] whose certified product
// prod zeta_up(t)^k stays within 1 + f1_abs/C. The upper enclosure is
// monotone nonincreasing in t, so bisection applies.
inline AlphaSearch find_alpha(const GrowthBound& b, double f1_abs,
                              std::uint64_t zeta_terms = kDefaultZetaTerms) {
  if (!(f1_abs > 0)) throw InputError("find_alpha: |f(1)| must be positive");
  if (!(b.C > 0)) throw InputError("find_alpha: C must be positive");
  const int k = static_cast<int>(b.exponents.size());
  const double threshold = inflate_down(1 + f1_abs / b.C, 4);

  constexpr double kGrid = 1e-6;
  constexpr std::uint64_t kMaxStep = 63000000;  // t = 1 + i*kGrid, t <= 64

  auto certified_product = [&](std::uint64_t i) {
    const double t = 1 + static_cast<double>(i) * kGrid;
    const double up = zeta_enclosure(t, zeta_terms).upper;
    return inflate_up(std::pow(up, k), 2.0 * k);
  };

  std::uint64_t lo = 1;  // within the pole guard: never certified
  std::uint64_t hi = kMaxStep;
  if (!(certified_product(hi) <= threshold))
    throw DomainError("find_alpha: threshold unsatisfiable on the search interval");
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    double prod;
    try {
      prod = certified_product(mid);
    } catch (const PoleGuardError&) {
      lo = mid;
      continue;
    }
    (prod <= threshold ? hi : lo) = mid;
  }

  AlphaSearch out;
  out.offset = 1 + static_cast<double>(hi) * kGrid;
  out.alpha.reserve(static_cast<std::size_t>(k));
  for (double r : b.exponents) out.alpha.push_back(r + out.offset);
  out.zeta_product_upper = certified_product(hi);
  out.threshold = threshold;
  return out;
}

// |f^{-1}(n)| <= prod n_j^{alpha_j} / |f(1)| at every box index: exact left
// side against the upward-rounded right side.
inline bool inverse_bound_check(const ArithFunction& f, const AlphaVector& alpha,
                                const Box& box) {
  if (!f.is_unit()) throw NotAUnitError("inverse_bound_check: f(1,...,1) = 0");
  if (static_cast<int>(alpha.size()) != f.arity())
    throw InputError("inverse_bound_check: alpha arity mismatch");
  const ArithFunction h = invert(f, box);
  const double inv_f1 = inflate_up(1.0 / std::fabs(to_double(f.value_at_one())), 4);
  for (std::size_t i = 0; i < h.keys().size(); ++i) {
    const Rational lhs = abs(h.values()[i]);
    const double rhs = detail::bound_rhs(h.keys()[i], inv_f1, alpha);
    if (lhs > rational_from_double(rhs)) return false;
  }
  return true;
}

// ---- Region predicates ---------------------------------------------------------
// All boundaries are excluded (strict inequalities).

// Re(s_j) > 1 + alpha_j for every coordinate.
inline bool in_pointwise_zero_free_region(const ComplexVec& s, const AlphaVector& alpha) {
  if (s.size() != alpha.size()) throw InputError("region check: arity mismatch");
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!(s[j].real() > 1 + alpha[j])) return false;
  return true;
}

namespace detail {

// Trailing-window condition: for every l = 1..k the sum of the last l
// coordinates of Re(s) exceeds l plus the matching sum of `extra` (empty
// `extra` means zero).
inline bool trailing_window_condition(const ComplexVec& s, const AlphaVector* extra) {
  const int k = static_cast<int>(s.size());
  double re_sum = 0, extra_sum = 0;
  for (int l = 1; l <= k; ++l) {
    const int j = k - l;
    re_sum += s[static_cast<std::size_t>(j)].real();
    if (extra) extra_sum += (*extra)[static_cast<std::size_t>(j)];
    if (!(re_sum > static_cast<double>(l) + extra_sum)) return false;
  }
  return true;
}

}  // namespace detail

// Re(s_l + ... + s_k) > l + (alpha_l + ... + alpha_k) for trailing windows of
// every length l; coincides with the pointwise region at k = 1.
inline bool in_nested_zero_free_region(const ComplexVec& s, const AlphaVector& alpha) {
  if (s.size() != alpha.size()) throw InputError("region check: arity mismatch");
  return detail::trailing_window_condition(s, &alpha);
}

// Absolute-convergence region of the chain-restricted series:
// Re(s_l + ... + s_k) > l for trailing windows of every length l.
inline bool in_chain_convergence_region(const ComplexVec& s) {
  return detail::trailing_window_condition(s, nullptr);
}

}  // namespace mdir
