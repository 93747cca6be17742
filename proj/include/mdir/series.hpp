#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "mdir/analysis.hpp"
#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/ufd.hpp"

namespace mdir {

// Certified evaluation carrier: the untruncated series value lies within
// tail_radius of value whenever the growth bound backing the computation is
// globally valid and the point is inside its convergence region.
struct EvalResult {
  std::complex<double> value;
  double tail_radius = 0;
  std::uint64_t truncation = 0;
};

namespace detail {

struct SumStats {
  std::complex<double> value{0, 0};
  double abs_sum = 0;
  double slack = 0;  // certified bound on the floating error of `value`
  std::uint64_t terms = 0;
};

// Deterministic truncated sum: terms in ascending coordinate-product order
// (lexicographic within ties), Kahan-compensated. The slack accumulator
// charges 16 ulps per term plus 4 ulps per unit of complex phase, covering
// coefficient conversion, log/exp and the compensated reduction.
inline SumStats eval_sum(const ArithFunction& f, const ComplexVec& s, const Box& box) {
  if (static_cast<int>(s.size()) != f.arity())
    throw InputError("eval: point arity mismatch");
  const auto& keys = f.keys();
  const auto& vals = f.values();

  std::vector<std::uint32_t> order;
  order.reserve(keys.size());
  for (std::uint32_t i = 0; i < keys.size(); ++i)
    if (box.contains(keys[i])) order.push_back(i);
  std::vector<std::uint64_t> prods(keys.size());
  for (std::uint32_t i : order) prods[i] = keys[i].product();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return prods[a] < prods[b]; });

  SumStats st;
  std::complex<double> sum{0, 0}, comp{0, 0};
  for (std::uint32_t i : order) {
    const MultiIndex& n = keys[i];
    double log_norm = 0, phase = 0;
    for (int j = 0; j < f.arity(); ++j) {
      const double ln = std::log(static_cast<double>(n[j]));
      log_norm += s[static_cast<std::size_t>(j)].real() * ln;
      phase += s[static_cast<std::size_t>(j)].imag() * ln;
    }
    const double mag = std::exp(-log_norm);
    const std::complex<double> term =
        to_double(vals[i]) * std::complex<double>(mag * std::cos(phase), mag * -std::sin(phase));
    const std::complex<double> y = term - comp;
    const std::complex<double> t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const double amag = std::abs(term);
    st.abs_sum += amag;
    st.slack += amag * (16 + 4 * std::fabs(phase));
    ++st.terms;
  }
  st.value = sum;
  st.slack = inflate_up(st.slack * kUlpStep, 8);
  return st;
}

}  // namespace detail

// Truncated series value at s over the box; deterministic reduction order.
inline std::complex<double> eval_truncated(const ArithFunction& f, const ComplexVec& s,
                                           const Box& box) {
  return detail::eval_sum(f, s, box).value;
}

// Upper bound on the absolute sum outside the cube {1..T}^k for any function
// obeying the growth bound: C * [prod zeta_up(sigma_j - r_j) - prod
// partial_T(sigma_j - r_j)].
inline double tail_radius(const GrowthBound& b, const ComplexVec& s, std::uint64_t T,
                          std::uint64_t zeta_terms = kDefaultZetaTerms) {
  if (s.size() != b.exponents.size()) throw InputError("tail_radius: arity mismatch");
  if (b.C < 0) throw InputError("tail_radius: C must be >= 0");
  if (b.C == 0) return 0;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!(s[j].real() > 1 + b.exponents[j]))
      throw OutOfRegionError("tail_radius: Re(s_" + std::to_string(j + 1) +
                             ") outside the pointwise convergence region");
  double prod_up = 1, partial_lo = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double a = s[j].real() - b.exponents[j];
    prod_up = inflate_up(prod_up * zeta_enclosure(a, zeta_terms).upper, 2);
    partial_lo = inflate_down(partial_lo * zeta_partial_enclosure(a, T).lower, 2);
  }
  return std::max(0.0, inflate_up(b.C * (prod_up - partial_lo), 4));
}

// Certified evaluation at truncation cube {1..T}^k. Preconditions: f is
// materialized on (at least) that cube and verifiably obeys b there; the
// floating summation slack is absorbed into the radius.
inline EvalResult eval_certified(const ArithFunction& f, const GrowthBound& b,
                                 const ComplexVec& s, std::uint64_t T,
                                 std::uint64_t zeta_terms = kDefaultZetaTerms) {
  const Box cube = Box::cube(T);
  detail::require_covers(f, cube);
  if (!verify_growth_bound(f, b))
    throw InputError("eval_certified: growth bound not satisfied on the box");
  const auto st = detail::eval_sum(f, s, cube);
  const double radius = inflate_up(tail_radius(b, s, T, zeta_terms) + st.slack, 2);
  return EvalResult{st.value, radius, T};
}

// ---- Reciprocal identity check -----------------------------------------------

struct ReciprocalReport {
  EvalResult direct;        // F(s; f)
  EvalResult reciprocal;    // F(s; f^{-1})
  std::complex<double> product;
  double combined_radius = 0;
  bool pass = false;
};

// Certifies F(s;f) * F(s;f^{-1}) = 1 within the propagated tail radii. The
// inverse is bounded via |f^{-1}(n)| <= prod n_j^{alpha_j} / |f(1)|, so its
// series is certified on the same cube. Gate: the pointwise zero-free region,
// or the nested one for members of the weak-chain subring.
inline ReciprocalReport reciprocal_check(const ArithFunction& f, const GrowthBound& b_f,
                                         const AlphaVector& alpha, const ComplexVec& s,
                                         std::uint64_t T,
                                         std::uint64_t zeta_terms = kDefaultZetaTerms) {
  if (!f.is_unit()) throw NotAUnitError("reciprocal_check: f(1,...,1) = 0");
  const bool pointwise = in_pointwise_zero_free_region(s, alpha);
  const bool nested =
      !pointwise && subring_membership(f, SupportRing::star) && in_nested_zero_free_region(s, alpha);
  if (!pointwise && !nested)
    throw OutOfRegionError("reciprocal_check: point outside the certified zero-free region");

  ReciprocalReport rep;
  rep.direct = eval_certified(f, b_f, s, T, zeta_terms);

  const ArithFunction inv = invert(f, Box::cube(T));
  const double c_inv = inflate_up(1.0 / std::fabs(to_double(f.value_at_one())), 4);
  const GrowthBound b_inv{c_inv, alpha};
  if (!verify_growth_bound(inv, b_inv))
    throw DomainError("reciprocal_check: alpha does not certify the inverse bound on the box");
  rep.reciprocal = eval_certified(inv, b_inv, s, T, zeta_terms);

  rep.product = rep.direct.value * rep.reciprocal.value;
  const double abs_a = std::abs(rep.direct.value);
  const double abs_b = std::abs(rep.reciprocal.value);
  const double ra = rep.direct.tail_radius;
  const double rb = rep.reciprocal.tail_radius;
  rep.combined_radius =
      inflate_up(abs_a * rb + abs_b * ra + ra * rb + 8 * kUlpStep * (std::abs(rep.product) + 1), 8);
  rep.pass = std::abs(rep.product - 1.0) <= rep.combined_radius;
  return rep;
}

// ---- Weak-chain decomposition check (k = 2) ------------------------------------

struct DecompositionReport {
  std::complex<double> lhs;  // weak-chain double series
  std::complex<double> rhs;  // strict-chain double series + diagonal single series
  double delta = 0;
  double tolerance = 0;
  bool pass = false;
};

// At k = 2 the weak-chain partial sum over {1..T}^2 equals the strict-chain
// partial sum plus the diagonal single series truncated at T. The right side
// extends the single series to T^2, so the residual is a (T, T^2] window of
// the single series; its certified bound is the single-series tail radius at
// T plus the floating slack of all three sums.
inline DecompositionReport star_decomposition_check(const ComplexVec& s, std::uint64_t T,
                                                    std::uint64_t zeta_terms = kDefaultZetaTerms) {
  if (s.size() != 2) throw InputError("star_decomposition_check: needs two variables");
  if (!in_chain_convergence_region(s))
    throw OutOfRegionError("star_decomposition_check: outside the convergence region");

  const Box cube2 = Box::cube(T);
  const auto star = builtin(Builtin::star, 2, cube2);
  const auto strict = builtin(Builtin::euler_zagier, 2, cube2);
  const Box cube1 = Box::cube(T * T);
  const auto diag = builtin(Builtin::ones, 1, cube1);
  const ComplexVec s_sum{s[0] + s[1]};

  const auto lhs = detail::eval_sum(star, s, cube2);
  const auto rhs_strict = detail::eval_sum(strict, s, cube2);
  const auto rhs_diag = detail::eval_sum(diag, s_sum, cube1);

  DecompositionReport rep;
  rep.lhs = lhs.value;
  rep.rhs = rhs_strict.value + rhs_diag.value;
  rep.delta = std::abs(rep.lhs - rep.rhs);
  const double window = tail_radius(GrowthBound::uniform(1, 1, 0), s_sum, T, zeta_terms);
  rep.tolerance =
      inflate_up(window + lhs.slack + rhs_strict.slack + rhs_diag.slack + 4 * kUlpStep, 8);
  rep.pass = rep.delta <= rep.tolerance;
  return rep;
}

// ---- Membership in the bounded weak-chain region --------------------------------

enum class RegionVerdict { inside, outside, uncertain };

// Decides zeta*_k(Re s) < 2 by certified enclosure at the real point. The
// partial sum is a lower bound (positive terms); the upper bound needs the
// pointwise region, otherwise only `outside` can be certified.
inline RegionVerdict sprime_membership(const ComplexVec& s, std::uint64_t T,
                                       std::uint64_t zeta_terms = kDefaultZetaTerms) {
  const int k = static_cast<int>(s.size());
  ComplexVec rho(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) rho[j] = {s[j].real(), 0};
  if (!in_chain_convergence_region(rho))
    throw OutOfRegionError("sprime_membership: outside the convergence region");

  const Box cube = Box::cube(T);
  const auto star = builtin(Builtin::star, k, cube);
  const auto st = detail::eval_sum(star, rho, cube);
  const double lower = inflate_down(st.value.real() - st.slack, 2);
  if (lower >= 2) return RegionVerdict::outside;

  bool pointwise = true;
  for (const auto& z : rho)
    if (!(z.real() > 1 + kPoleGuard)) pointwise = false;
  if (pointwise) {
    const double radius = tail_radius(GrowthBound::uniform(k, 1, 0), rho, T, zeta_terms);
    const double upper = inflate_up(st.value.real() + st.slack + radius, 2);
    if (upper < 2) return RegionVerdict::inside;
  }
  return RegionVerdict::uncertain;
}

}  // namespace mdir
