// Acceptance suite: end-to-end checks of the ring arithmetic, the certified
// analytic layer and the region logic, each printed as one pass/fail line.
// Exit code 0 iff every check passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdir/mdir.hpp"
#include "mdir/random_functions.hpp"

#include "oracles.hpp"

using namespace mdir;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kStar22 = 1.8940656589944918;  // 7 pi^4 / 360

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome oc{false, ""};
  try {
    oc = body();
  } catch (const std::exception& e) {
    oc = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%2d] %s  %-38s %s(%.1fs)\n", id, oc.pass ? "PASS" : "FAIL", name.c_str(),
              oc.detail.empty() ? "" : (oc.detail + " ").c_str(), secs);
  std::fflush(stdout);
  if (!oc.pass) ++g_failures;
}

Outcome inverse_round_trip() {
  const auto t0 = Clock::now();
  SeededRng rng(20240601);
  int checked = 0;
  const struct {
    int k;
    Box box;
  } setups[] = {{2, Box::product(60)}, {3, Box::cube(6)}};
  for (const auto& su : setups) {
    const auto id = identity_function(su.k, su.box);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_function(rng, su.k, su.box, 10, true);
      if (!oracles::same_function(convolve(f, invert(f, su.box), su.box), id))
        return {false, "round trip broke at sample " + std::to_string(i)};
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60) return {false, "exceeded 60s budget"};
  return {true, std::to_string(checked) + " units exact"};
}

Outcome moebius_oracle() {
  const Box box = Box::product(1000);
  const auto mu = invert(builtin(Builtin::ones, 1, box), box);
  for (Coord n = 1; n <= 1000; ++n)
    if (mu.value(MultiIndex{n}) != Rational(oracles::moebius(n)))
      return {false, "mismatch at n=" + std::to_string(n)};
  return {true, "n <= 1000 exact"};
}

Outcome norm_multiplicativity() {
  SeededRng rng(777);
  const Box box = Box::product(60);
  for (int i = 0; i < 100; ++i) {
    auto f = random_function(rng, 2, box, 4, false);
    auto g = random_function(rng, 2, box, 4, false);
    for (int tries = 0; tries < 50 && norm(f).value * norm(g).value > box.limit; ++tries)
      g = random_function(rng, 2, box, 4, false);
    if (norm(f).value * norm(g).value > box.limit) g = random_function(rng, 2, box, 4, true);
    if (norm(convolve(f, g, box)).value != norm(f).value * norm(g).value)
      return {false, "pair " + std::to_string(i)};
  }
  return {true, "100 pairs exact"};
}

Outcome star_value_at_two_two() {
  const auto t0 = Clock::now();
  const auto star400 = builtin(Builtin::star, 2, Box::cube(400));
  const auto e400 = eval_certified(star400, GrowthBound::uniform(2, 1, 0),
                                   ComplexVec{{2, 0}, {2, 0}}, 400);
  if (std::fabs(e400.value.real() - kStar22) > e400.tail_radius)
    return {false, "T=400 interval misses the closed form"};
  if (!(e400.tail_radius < 0.02)) return {false, "T=400 radius too wide"};

  const auto star2000 = builtin(Builtin::star, 2, Box::cube(2000));
  const auto e2000 = eval_certified(star2000, GrowthBound::uniform(2, 1, 0),
                                    ComplexVec{{2, 0}, {2, 0}}, 2000);
  if (std::fabs(e2000.value.real() - kStar22) > e2000.tail_radius)
    return {false, "T=2000 interval misses the closed form"};
  if (!(e2000.tail_radius < 0.004)) return {false, "T=2000 radius too wide"};
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 30) return {false, "exceeded 30s budget"};
  char buf[96];
  std::snprintf(buf, sizeof buf, "radii %.2e / %.2e", e400.tail_radius, e2000.tail_radius);
  return {true, buf};
}

Outcome star_decomposition() {
  const ComplexVec points[] = {{{2, 0}, {2, 0}}, {{0.5, 0}, {2.6, 0}}, {{3, 0}, {4, 0}}};
  for (const auto& s : points) {
    const auto rep = star_decomposition_check(s, 400);
    if (!rep.pass) return {false, "failed at a reference point"};
  }
  return {true, "3 points within certified slack"};
}

Outcome inverse_growth_bound() {
  const Box box = Box::cube(14);
  const auto a1 = find_alpha(GrowthBound::uniform(1, 1, 0), 1);
  if (!inverse_bound_check(builtin(Builtin::star, 1, box), a1.alpha, box))
    return {false, "k=1 bound violated"};
  const auto a2 = find_alpha(GrowthBound::uniform(2, 1, 0), 1);
  if (!inverse_bound_check(builtin(Builtin::star, 2, box), a2.alpha, box))
    return {false, "k=2 weak-chain bound violated"};
  const auto ez_plus_i =
      add(builtin(Builtin::euler_zagier, 2, box), identity_function(2, box));
  if (!inverse_bound_check(ez_plus_i, a2.alpha, box))
    return {false, "k=2 strict-chain-plus-identity bound violated"};
  return {true, "alphas certify all inverses"};
}

Outcome reciprocal_identity() {
  const std::uint64_t T = 300;
  struct Case {
    int k;
    ComplexVec s;
    bool ez_plus_i;
  };
  const std::vector<Case> cases = {
      {1, {{4, 0}}, false},
      {2, {{4.5, 0}, {4.5, 0}}, false},
      {3, {{5, 0}, {5, 0}, {5, 0}}, false},
      {2, {{4.5, 0}, {4.5, 0}}, true},
  };
  for (const auto& c : cases) {
    const Box cube = Box::cube(T);
    const auto f = c.ez_plus_i
                       ? add(builtin(Builtin::euler_zagier, c.k, cube),
                             identity_function(c.k, cube))
                       : builtin(Builtin::star, c.k, cube);
    const auto search = find_alpha(GrowthBound::uniform(c.k, 1, 0), 1);
    const auto rep = reciprocal_check(f, GrowthBound::uniform(c.k, 1, 0), search.alpha, c.s, T);
    if (!rep.pass)
      return {false, "failed at k=" + std::to_string(c.k) + (c.ez_plus_i ? " (u_EZ+I)" : "")};
  }
  return {true, "4 cases at T=300"};
}

Outcome series_homomorphism() {
  SeededRng rng(4242);
  const Box box = Box::cube(40);
  const double sigma = 6;
  const ComplexVec s{{sigma, 0}, {sigma, 0}};
  for (int i = 0; i < 20; ++i) {
    const auto f = random_function(rng, 2, box, 20, false);
    const auto g = random_function(rng, 2, box, 20, false);

    const auto vf = detail::eval_sum(f, s, box);
    const auto vg = detail::eval_sum(g, s, box);
    const auto vsum = detail::eval_sum(add(f, g), s, box);
    const double add_tol = inflate_up(vf.slack + vg.slack + vsum.slack + 8 * kUlpStep, 8);
    if (std::abs(vf.value + vg.value - vsum.value) > add_tol)
      return {false, "additive identity broke at pair " + std::to_string(i)};

    const auto vp = detail::eval_sum(convolve(f, g, box), s, box);
    double cf = 0, cg = 0;
    for (const auto& v : f.values()) cf = std::max(cf, std::fabs(to_double(v)));
    for (const auto& v : g.values()) cg = std::max(cg, std::fabs(to_double(v)));
    const double escape = std::pow(static_cast<double>(box.limit), 2 - sigma) / (sigma - 2);
    const double z2 = std::pow(zeta_enclosure(sigma).upper, 2);
    const double cross = inflate_up(cf * cg * 2 * escape * z2, 16);
    const double mul_tol = inflate_up(cross + (std::abs(vg.value) + 1) * vf.slack +
                                          (std::abs(vf.value) + 1) * vg.slack + vp.slack +
                                          8 * kUlpStep * (std::abs(vf.value * vg.value) + 1),
                                      8);
    if (std::abs(vf.value * vg.value - vp.value) > mul_tol)
      return {false, "multiplicative identity broke at pair " + std::to_string(i)};
  }
  return {true, "20 pairs within derived slack"};
}

Outcome subring_closure() {
  SeededRng rng(1618);
  const Box box = Box::cube(9);
  const SupportRing rings[] = {SupportRing::star, SupportRing::euler_zagier,
                               SupportRing::mordell_tornheim};
  for (const auto ring : rings)
    for (int i = 0; i < 50; ++i) {
      const auto f = random_subring_function(rng, 3, box, ring, 6, false);
      const auto g = random_subring_function(rng, 3, box, ring, 6, false);
      if (!subring_membership(convolve(f, g, box), ring))
        return {false, "convolution escaped a subring"};
    }
  for (int i = 0; i < 20; ++i) {
    const auto f = random_subring_function(rng, 3, box, SupportRing::star, 6, true);
    if (!subring_membership(invert(f, box), SupportRing::star))
      return {false, "inversion escaped the weak-chain subring"};
  }
  const auto av = builtin(Builtin::apostol_vu, 3, box);
  if (!(subring_membership(av, SupportRing::euler_zagier) &&
        subring_membership(av, SupportRing::mordell_tornheim) &&
        subring_membership(av, SupportRing::apostol_vu)))
    return {false, "u_AV escaped the intersection"};
  return {true, "170 closure checks"};
}

Outcome encoding_isomorphism() {
  const PrimePositionBasis basis(2);
  SeededRng rng(31415);
  const Box box = Box::product(30);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_function(rng, 2, box, 8, false);
    const auto g = random_function(rng, 2, box, 8, false);
    const auto lhs = to_power_series(convolve(f, g, box), basis);
    const auto rhs = multiply(to_power_series(f, basis), to_power_series(g, basis), basis, box);
    if (!(lhs == rhs)) return {false, "encoding not multiplicative at pair " + std::to_string(i)};
  }
  const BoxIndexer ix(2, Box::product(20));
  for (std::uint64_t i = 0; i < ix.size(); ++i)
    for (std::uint64_t j = 0; j < ix.size(); ++j) {
      const auto a = ix.index_at(i), b = ix.index_at(j);
      if (!(exponent_vector(a.componentwise_product(b), basis) ==
            exponent_vector(a, basis) + exponent_vector(b, basis)))
        return {false, "exponent additivity broke at " + a.str() + "*" + b.str()};
    }
  return {true, "20 pairs + exhaustive additivity"};
}

Outcome alpha_brackets() {
  const auto a1 = find_alpha(GrowthBound::uniform(1, 1, 0), 1);
  if (!(a1.alpha[0] > 1.72 && a1.alpha[0] < 1.74))
    return {false, "k=1 alpha " + std::to_string(a1.alpha[0])};
  const auto a2 = find_alpha(GrowthBound::uniform(2, 1, 0), 1);
  if (!(a2.alpha[0] > 2.3 && a2.alpha[0] < 2.4))
    return {false, "k=2 alpha " + std::to_string(a2.alpha[0])};
  // Independent recheck with a finer enclosure.
  if (!(zeta_enclosure(a1.alpha[0], 20000).upper <= 2.0))
    return {false, "k=1 recheck exceeded 2"};
  if (!(inflate_up(std::pow(zeta_enclosure(a2.alpha[0], 20000).upper, 2), 4) <= 2.0))
    return {false, "k=2 recheck exceeded 2"};
  char buf[64];
  std::snprintf(buf, sizeof buf, "alpha %.6f / %.6f", a1.alpha[0], a2.alpha[0]);
  return {true, buf};
}

Outcome region_separation() {
  const ComplexVec s{{2, 0}, {2, 0}};
  if (sprime_membership(s, 400) != RegionVerdict::inside)
    return {false, "(2,2) not inside the bounded region"};
  const auto a2 = find_alpha(GrowthBound::uniform(2, 1, 0), 1);
  if (in_nested_zero_free_region(s, a2.alpha))
    return {false, "(2,2) unexpectedly inside the nested zero-free region"};
  return {true, "(2,2) separates the two regions"};
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  report(1, "exact inverse round-trip", inverse_round_trip);
  report(2, "Moebius oracle at arity one", moebius_oracle);
  report(3, "norm multiplicativity", norm_multiplicativity);
  report(4, "certified weak-chain value at (2,2)", star_value_at_two_two);
  report(5, "weak-chain decomposition", star_decomposition);
  report(6, "inverse growth bound", inverse_growth_bound);
  report(7, "reciprocal identity", reciprocal_identity);
  report(8, "series homomorphism", series_homomorphism);
  report(9, "subring closure", subring_closure);
  report(10, "power-series encoding isomorphism", encoding_isomorphism);
  report(11, "alpha search brackets", alpha_brackets);
  report(12, "bounded region vs nested region", region_separation);
  if (g_failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
