#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mdir/analysis.hpp"
#include "mdir/arith_function.hpp"
#include "mdir/io.hpp"
#include "mdir/prime_series.hpp"
#include "mdir/random_functions.hpp"
#include "mdir/series.hpp"
#include "mdir/ufd.hpp"

namespace mdir {

struct PropertyResult {
  std::string suite;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_rows;  // "suite,property,case,detail"

  bool passed() const { return failures == 0; }
};

namespace verify_detail {

class Recorder {
 public:
  Recorder(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  void tally(bool ok, const std::string& detail) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (result_.failure_rows.size() < 64)
      result_.failure_rows.push_back(result_.suite + "," + result_.name + "," +
                                     std::to_string(result_.cases) + "," + detail);
  }

  PropertyResult take() && { return std::move(result_); }

 private:
  PropertyResult result_;
};

inline bool same_function(const ArithFunction& a, const ArithFunction& b) {
  return a.keys() == b.keys() && a.values() == b.values();
}

// Independent Moebius reference by trial factorization.
inline int moebius_reference(std::uint64_t n) {
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

// ---- core ---------------------------------------------------------------------

inline std::vector<PropertyResult> suite_core(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  SeededRng rng(seed);
  const Box small_cube = Box::cube(8);

  {
    Recorder rec("core", "convolution-commutative");
    for (int i = 0; i < 25; ++i) {
      auto f = random_function(rng, 2, small_cube, 10, false);
      auto g = random_function(rng, 2, small_cube, 10, false);
      rec.tally(same_function(convolve(f, g, small_cube), convolve(g, f, small_cube)),
                "f*g != g*f");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "convolution-associative");
    for (int i = 0; i < 10; ++i) {
      auto f = random_function(rng, 2, small_cube, 8, false);
      auto g = random_function(rng, 2, small_cube, 8, false);
      auto h = random_function(rng, 2, small_cube, 8, false);
      auto lhs = convolve(convolve(f, g, small_cube), h, small_cube);
      auto rhs = convolve(f, convolve(g, h, small_cube), small_cube);
      rec.tally(same_function(lhs, rhs), "(f*g)*h != f*(g*h)");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "identity-neutral");
    const auto id = identity_function(2, small_cube);
    for (int i = 0; i < 20; ++i) {
      auto f = random_function(rng, 2, small_cube, 12, false);
      rec.tally(same_function(convolve(id, f, small_cube), f), "I*f != f");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "distributive");
    for (int i = 0; i < 15; ++i) {
      auto f = random_function(rng, 2, small_cube, 8, false);
      auto g = random_function(rng, 2, small_cube, 8, false);
      auto h = random_function(rng, 2, small_cube, 8, false);
      auto lhs = convolve(f, add(g, h), small_cube);
      auto rhs = add(convolve(f, g, small_cube), convolve(f, h, small_cube));
      rec.tally(same_function(lhs, rhs), "f*(g+h) != f*g + f*h");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "inverse-round-trip");
    const Box box = Box::product(60);
    const auto id = identity_function(2, box);
    for (int i = 0; i < 25; ++i) {
      auto f = random_function(rng, 2, box, 12, true);
      rec.tally(same_function(convolve(f, invert(f, box), box), id), "f * f^-1 != I");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "inverse-matches-linear-solve");
    const Box box = Box::product(20);
    const auto id = identity_function(2, box);
    for (int i = 0; i < 10; ++i) {
      auto f = random_function(rng, 2, box, 8, true);
      auto cert = divides_on_box(f, id, box);
      const bool ok = cert.status == Solvability::solvable_on_box &&
                      same_function(*cert.quotient, invert(f, box));
      rec.tally(ok, "recursive inverse disagrees with linear solve");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "moebius-at-arity-one");
    const Box box = Box::product(1000);
    const auto mu = invert(builtin(Builtin::ones, 1, box), box);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      const Rational got = mu.value(MultiIndex{static_cast<Coord>(n)});
      rec.tally(got == Rational(moebius_reference(n)), "mu(" + std::to_string(n) + ") mismatch");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("core", "divisor-sum-zeta-bound");
    for (double a : {1.5, 2.0, 3.0}) {
      const double zu = zeta_enclosure(a).upper;
      for (std::uint64_t n = 1; n <= 10000; ++n) {
        double sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
          if (n % d != 0) continue;
          sum += std::pow(static_cast<double>(d), a);
          if (d != n / d) sum += std::pow(static_cast<double>(n / d), a);
        }
        const double lhs = inflate_up(sum, 64);
        const double rhs = zu * std::pow(static_cast<double>(n), a);
        rec.tally(lhs <= rhs, "divisor sum exceeds zeta bound at n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(rec).take());
  }
  return out;
}

// ---- ufd ----------------------------------------------------------------------

inline std::vector<PropertyResult> suite_ufd(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  SeededRng rng(seed);

  {
    Recorder rec("ufd", "norm-multiplicative");
    const Box box = Box::product(60);
    for (int i = 0; i < 100; ++i) {
      auto f = random_function(rng, 2, box, 4, false);
      auto g = random_function(rng, 2, box, 4, false);
      for (int attempt = 0; attempt < 50 && norm(f).value * norm(g).value > box.limit;
           ++attempt)
        g = random_function(rng, 2, box, 4, false);
      if (norm(f).value * norm(g).value > box.limit)
        g = random_function(rng, 2, box, 4, true);  // unit: norm 1
      const auto nf = norm(f).value, ng = norm(g).value;
      const auto nfg = norm(convolve(f, g, box)).value;
      rec.tally(nfg == nf * ng, "N(f*g)=" + std::to_string(nfg) + " != " + std::to_string(nf) +
                                    "*" + std::to_string(ng));
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "unit-iff-norm-one");
    const Box box = Box::product(40);
    for (int i = 0; i < 50; ++i) {
      auto f = random_function(rng, 2, box, 5, i % 2 == 0);
      rec.tally(is_unit(f) == (norm(f).value == 1), "unit/norm disagreement");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "equivalence-reflexive-symmetric");
    const Box box = Box::product(12);
    for (int i = 0; i < 8; ++i) {
      auto f = random_function(rng, 1, box, 3, false);
      auto g = random_function(rng, 1, box, 3, false);
      const bool refl = equivalent_on_box(f, f, box).equivalent;
      const bool sym =
          equivalent_on_box(f, g, box).equivalent == equivalent_on_box(g, f, box).equivalent;
      rec.tally(refl && sym, "equivalence not reflexive/symmetric");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "equivalence-of-units");
    const Box box = Box::product(30);
    for (int i = 0; i < 10; ++i) {
      auto f = random_function(rng, 2, box, 5, true);
      auto g = random_function(rng, 2, box, 5, true);
      auto r = equivalent_on_box(f, g, box);
      bool ok = r.equivalent && r.unit_witness.has_value();
      if (ok) ok = same_function(convolve(*r.unit_witness, g, box), f);
      rec.tally(ok, "unit equivalence witness fails f = eps*g");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "subring-convolution-closure");
    const Box box = Box::cube(9);
    for (SupportRing ring :
         {SupportRing::star, SupportRing::euler_zagier, SupportRing::mordell_tornheim}) {
      for (int i = 0; i < 50; ++i) {
        auto f = random_subring_function(rng, 3, box, ring, 6, false);
        auto g = random_subring_function(rng, 3, box, ring, 6, false);
        rec.tally(subring_membership(convolve(f, g, box), ring),
                  "convolution left the subring");
      }
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "weak-chain-inverse-closure");
    const Box box = Box::cube(9);
    for (int i = 0; i < 20; ++i) {
      auto f = random_subring_function(rng, 3, box, SupportRing::star, 6, true);
      rec.tally(subring_membership(invert(f, box), SupportRing::star),
                "inverse left the weak-chain subring");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "apostol-vu-intersection");
    const auto av = builtin(Builtin::apostol_vu, 3, Box::cube(9));
    rec.tally(subring_membership(av, SupportRing::euler_zagier) &&
                  subring_membership(av, SupportRing::mordell_tornheim) &&
                  subring_membership(av, SupportRing::apostol_vu),
              "u_AV outside the intersection subring");
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "exponent-additivity");
    const PrimePositionBasis basis(2);
    const BoxIndexer ix(2, Box::product(20));
    for (std::uint64_t i = 0; i < ix.size(); ++i)
      for (std::uint64_t j = 0; j < ix.size(); ++j) {
        const auto a = ix.index_at(i), b = ix.index_at(j);
        rec.tally(exponent_vector(a.componentwise_product(b), basis) ==
                      exponent_vector(a, basis) + exponent_vector(b, basis),
                  "alpha(a*b) != alpha(a)+alpha(b) at " + a.str() + "," + b.str());
      }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "encoding-homomorphism");
    const Box box = Box::product(30);
    const PrimePositionBasis basis(2);
    for (int i = 0; i < 20; ++i) {
      auto f = random_function(rng, 2, box, 8, false);
      auto g = random_function(rng, 2, box, 8, false);
      const auto lhs = to_power_series(convolve(f, g, box), basis);
      const auto rhs = multiply(to_power_series(f, basis), to_power_series(g, basis), basis, box);
      rec.tally(lhs == rhs, "R(f*g) != R(f)R(g) on box image");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("ufd", "basis-round-trip");
    const PrimePositionBasis basis(3);
    for (std::uint64_t m = 1; m <= 10000; ++m) {
      const auto back = basis.slot_of_index(basis.basis_index(m));
      rec.tally(back && *back == m, "slot round trip failed at " + std::to_string(m));
    }
    out.push_back(std::move(rec).take());
  }
  return out;
}

// ---- analysis -------------------------------------------------------------------

inline std::vector<PropertyResult> suite_analysis(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  SeededRng rng(seed);

  {
    Recorder rec("analysis", "zeta-enclosure-monotone");
    double prev_upper = std::numeric_limits<double>::infinity();
    for (double a = 1.1; a <= 6.05; a += 0.1) {
      const auto enc = zeta_enclosure(a);
      rec.tally(enc.lower <= enc.upper && enc.upper <= prev_upper,
                "upper enclosure not monotone at a=" + std::to_string(a));
      prev_upper = enc.upper;
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("analysis", "zeta-reference-containment");
    rec.tally(zeta_enclosure(2).contains(1.6449340668482264), "zeta(2) reference escaped");
    rec.tally(zeta_enclosure(3).contains(1.2020569031595943), "zeta(3) reference escaped");
    rec.tally(zeta_enclosure(4).contains(1.0823232337111382), "zeta(4) reference escaped");
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("analysis", "alpha-search-windows");
    const auto a1 = find_alpha(GrowthBound::uniform(1, 1, 0), 1.0);
    rec.tally(a1.alpha[0] > 1.72 && a1.alpha[0] < 1.74,
              "k=1 alpha outside (1.72,1.74): " + std::to_string(a1.alpha[0]));
    const auto a2 = find_alpha(GrowthBound::uniform(2, 1, 0), 1.0);
    rec.tally(a2.alpha[0] > 2.3 && a2.alpha[0] < 2.4,
              "k=2 alpha outside (2.3,2.4): " + std::to_string(a2.alpha[0]));
    const double recheck1 = zeta_enclosure(a1.alpha[0], 20000).upper;
    const double recheck2 = std::pow(zeta_enclosure(a2.alpha[0], 20000).upper, 2);
    rec.tally(recheck1 <= 2.0, "k=1 certified product recheck failed");
    rec.tally(inflate_up(recheck2, 4) <= 2.0, "k=2 certified product recheck failed");
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("analysis", "growth-bound-implies-inverse-bound");
    const Box box = Box::cube(10);
    for (int i = 0; i < 10; ++i) {
      auto f = random_function(rng, 2, box, 10, true, 3, 1);
      const GrowthBound b = GrowthBound::uniform(2, 3, 0);
      if (!verify_growth_bound(f, b)) {
        rec.tally(false, "generator produced an unbounded sample");
        continue;
      }
      const auto search = find_alpha(b, std::fabs(to_double(f.value_at_one())));
      rec.tally(inverse_bound_check(f, search.alpha, box), "inverse bound violated on box");
    }
    const auto star2 = find_alpha(GrowthBound::uniform(2, 1, 0), 1.0);
    rec.tally(inverse_bound_check(builtin(Builtin::star, 2, Box::cube(14)), star2.alpha,
                                  Box::cube(14)),
              "weak-chain indicator inverse bound violated");
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("analysis", "nested-equals-pointwise-at-arity-one");
    for (int i = 0; i < 200; ++i) {
      const ComplexVec s{{rng.range(-400, 800) / 100.0, rng.range(-500, 500) / 10.0}};
      const AlphaVector alpha{rng.range(-200, 400) / 100.0};
      rec.tally(in_nested_zero_free_region(s, alpha) == in_pointwise_zero_free_region(s, alpha),
                "k=1 region predicates disagree");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("analysis", "divisor-sum-zeta-bound");
    for (double a : {1.5, 2.0, 3.0}) {
      const double zu = zeta_enclosure(a).upper;
      for (std::uint64_t n = 1; n <= 10000; ++n) {
        double sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
          if (n % d != 0) continue;
          sum += std::pow(static_cast<double>(d), a);
          if (d != n / d) sum += std::pow(static_cast<double>(n / d), a);
        }
        rec.tally(inflate_up(sum, 64) <= zu * std::pow(static_cast<double>(n), a),
                  "divisor sum exceeds zeta bound at n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(rec).take());
  }
  return out;
}

// ---- series --------------------------------------------------------------------

inline std::vector<PropertyResult> suite_series(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  SeededRng rng(seed);

  {
    Recorder rec("series", "homomorphism-additive");
    const Box box = Box::cube(40);
    const ComplexVec s{{6, 0}, {6, 0}};
    for (int i = 0; i < 10; ++i) {
      auto f = random_function(rng, 2, box, 20, false);
      auto g = random_function(rng, 2, box, 20, false);
      const auto vf = detail::eval_sum(f, s, box);
      const auto vg = detail::eval_sum(g, s, box);
      const auto vs = detail::eval_sum(add(f, g), s, box);
      const double tol = inflate_up(vf.slack + vg.slack + vs.slack + 8 * kUlpStep, 8);
      rec.tally(std::abs(vf.value + vg.value - vs.value) <= tol, "F(f)+F(g) != F(f+g)");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "homomorphism-multiplicative");
    const Box box = Box::cube(40);
    const double sigma = 6;
    const ComplexVec s{{sigma, 0}, {sigma, 0}};
    for (int i = 0; i < 20; ++i) {
      auto f = random_function(rng, 2, box, 20, false);
      auto g = random_function(rng, 2, box, 20, false);
      double cf = 0, cg = 0;
      for (const auto& v : f.values()) cf = std::max(cf, std::fabs(to_double(v)));
      for (const auto& v : g.values()) cg = std::max(cg, std::fabs(to_double(v)));
      const auto vf = detail::eval_sum(f, s, box);
      const auto vg = detail::eval_sum(g, s, box);
      const auto vp = detail::eval_sum(convolve(f, g, box), s, box);
      // Index pairs escaping the cube: sum over m > T of d(m) m^-sigma per
      // coordinate, bounded via d(m) <= m by T^(2-sigma)/(sigma-2).
      const double T = static_cast<double>(box.limit);
      const double escape = std::pow(T, 2 - sigma) / (sigma - 2);
      const double z2 = std::pow(zeta_enclosure(sigma).upper, 2);
      const double cross = inflate_up(cf * cg * 2 * escape * z2, 16);
      const double tol = inflate_up(
          cross + (std::abs(vg.value) + 1) * vf.slack + (std::abs(vf.value) + 1) * vg.slack +
              vp.slack + 8 * kUlpStep * (std::abs(vf.value * vg.value) + 1),
          8);
      rec.tally(std::abs(vf.value * vg.value - vp.value) <= tol,
                "F(f)F(g) != F(f*g) beyond derived slack");
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "certified-containment");
    const double zeta2 = 1.6449340668482264;
    for (std::uint64_t T : {100ULL, 1000ULL, 10000ULL}) {
      const auto f = builtin(Builtin::ones, 1, Box::cube(T));
      const auto ev = eval_certified(f, GrowthBound::uniform(1, 1, 0), ComplexVec{{2, 0}}, T);
      rec.tally(std::fabs(ev.value.real() - zeta2) <= ev.tail_radius,
                "pi^2/6 escaped the certified interval at T=" + std::to_string(T));
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "tail-radius-monotone-refinement");
    const GrowthBound b = GrowthBound::uniform(1, 1, 0);
    const ComplexVec s{{2, 0}};
    double prev = std::numeric_limits<double>::infinity();
    for (std::uint64_t T : {100ULL, 200ULL, 400ULL, 800ULL, 1600ULL}) {
      const double r = tail_radius(b, s, T);
      rec.tally(r < prev, "radius did not shrink at T=" + std::to_string(T));
      prev = r;
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "reciprocal-identity");
    struct Case {
      int k;
      std::uint64_t T;
      std::vector<ComplexVec> points;
      bool ez_plus_i;
    };
    const std::vector<Case> cases = {
        {1, 2000, {{{4, 0}}, {{3.2, 0.5}}, {{5, -2}}}, false},
        {2, 200, {{{4.5, 0}, {4.5, 0}}, {{3.6, 1}, {4.0, 0}}, {{5, 0}, {6, -1}}}, false},
        {3, 40, {{{5, 0}, {5, 0}, {5, 0}}, {{4.2, 1}, {4.5, 0}, {4.8, 0}}, {{6, 0}, {5, 2}, {7, 0}}}, false},
        {2, 200, {{{4.5, 0}, {4.5, 0}}, {{3.6, 1}, {4.0, 0}}, {{5, 0}, {6, -1}}}, true},
    };
    for (const auto& c : cases) {
      const Box cube = Box::cube(c.T);
      const auto base = builtin(Builtin::star, c.k, cube);
      const auto f = c.ez_plus_i
                         ? add(builtin(Builtin::euler_zagier, c.k, cube),
                               identity_function(c.k, cube))
                         : base;
      const auto search = find_alpha(GrowthBound::uniform(c.k, 1, 0), 1.0);
      for (const auto& s : c.points) {
        const auto rep = reciprocal_check(f, GrowthBound::uniform(c.k, 1, 0), search.alpha, s,
                                          c.T);
        rec.tally(rep.pass, "reciprocal identity failed at k=" + std::to_string(c.k));
      }
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "conjugate-symmetry");
    const Box box = Box::cube(30);
    for (Builtin which : {Builtin::identity, Builtin::ones, Builtin::euler_zagier, Builtin::star,
                          Builtin::mordell_tornheim}) {
      const auto f = builtin(which, 2, box);
      for (int i = 0; i < 5; ++i) {
        const ComplexVec s{{rng.range(2, 6) * 1.0, rng.range(-30, 30) / 10.0},
                           {rng.range(2, 6) * 1.0, rng.range(-30, 30) / 10.0}};
        ComplexVec sc(s);
        for (auto& z : sc) z = std::conj(z);
        const auto a = detail::eval_sum(f, s, box);
        const auto b = detail::eval_sum(f, sc, box);
        const double tol = inflate_up(a.slack + b.slack + 8 * kUlpStep, 8);
        rec.tally(std::abs(std::conj(a.value) - b.value) <= tol,
                  "F(conj s) != conj F(s) for " + std::string(builtin_name(which)));
      }
    }
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "weak-chain-decomposition");
    rec.tally(star_decomposition_check(ComplexVec{{2, 0}, {2, 0}}, 200).pass,
              "decomposition failed at (2,2)");
    rec.tally(star_decomposition_check(ComplexVec{{0.5, 0}, {2.6, 0}}, 400).pass,
              "decomposition failed at (0.5,2.6)");
    rec.tally(star_decomposition_check(ComplexVec{{3, 0}, {4, 0}}, 100).pass,
              "decomposition failed at (3,4)");
    out.push_back(std::move(rec).take());
  }
  {
    Recorder rec("series", "bounded-region-membership");
    rec.tally(sprime_membership(ComplexVec{{2, 0}, {2, 0}}, 400) == RegionVerdict::inside,
              "(2,2) not certified inside");
    rec.tally(sprime_membership(ComplexVec{{4, 0}, {4, 0}}, 400) == RegionVerdict::inside,
              "(4,4) not certified inside");
    rec.tally(sprime_membership(ComplexVec{{1.02, 0}, {1.05, 0}}, 400) != RegionVerdict::inside,
              "(1.02,1.05) wrongly certified inside");
    out.push_back(std::move(rec).take());
  }
  return out;
}

// ---- fixture validation -----------------------------------------------------------

inline PropertyResult validate_fixtures(const std::string& suite,
                                        const std::vector<std::string>& paths) {
  Recorder rec(suite, "fixture-round-trip");
  for (const auto& path : paths) {
    try {
      const auto f = read_function_file(path);
      const auto again = function_from_json(function_to_json(f));
      rec.tally(same_function(f, again) && f.box() == again.box(), path + ": round trip changed values");
    } catch (const std::exception& e) {
      rec.tally(false, path + ": " + e.what());
    }
  }
  return std::move(rec).take();
}

}  // namespace verify_detail

// Runs the named property suite ("core", "ufd", "analysis", "series" or
// "all") with a deterministic seed; optional fixture files are validated as
// part of the run.
inline std::vector<PropertyResult> run_verify_suite(
    const std::string& suite, std::uint64_t seed,
    const std::vector<std::string>& fixtures = {}) {
  std::vector<PropertyResult> out;
  auto extend = [&out](std::vector<PropertyResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  bool known = false;
  if (suite == "core" || suite == "all") {
    extend(verify_detail::suite_core(seed));
    known = true;
  }
  if (suite == "ufd" || suite == "all") {
    extend(verify_detail::suite_ufd(seed));
    known = true;
  }
  if (suite == "analysis" || suite == "all") {
    extend(verify_detail::suite_analysis(seed));
    known = true;
  }
  if (suite == "series" || suite == "all") {
    extend(verify_detail::suite_series(seed));
    known = true;
  }
  if (!known) throw InputError("unknown suite: " + suite);
  if (!fixtures.empty()) out.push_back(verify_detail::validate_fixtures(suite, fixtures));
  return out;
}

}  // namespace mdir
