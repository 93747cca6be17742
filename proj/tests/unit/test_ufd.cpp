#include <catch2/catch_amalgamated.hpp>

#include "mdir/random_functions.hpp"
#include "mdir/ufd.hpp"

#include "oracles.hpp"

using namespace mdir;
using oracles::same_function;

namespace {

ArithFunction make(int k, Box box, std::initializer_list<std::pair<MultiIndex, Rational>> vals) {
  ArithFunctionBuilder b(k, box);
  for (const auto& [n, v] : vals) b.set(n, v);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("norm basics") {
  const Box box = Box::product(12);
  CHECK(norm(identity_function(2, box)).value == 1);

  const auto f = make(2, box, {{MultiIndex{2, 1}, Rational(5)}, {MultiIndex{1, 3}, Rational(7)}});
  CHECK(norm(f).value == 2);
  CHECK_FALSE(norm(f).box_limited);

  const auto zero = make(2, box, {});
  CHECK(norm(zero).value == 0);
  CHECK(norm(zero).box_limited);
}

TEST_CASE("norm is multiplicative") {
  SeededRng rng(42);
  const Box box = Box::product(60);
  for (int i = 0; i < 30; ++i) {
    auto f = random_function(rng, 2, box, 4, false);
    auto g = random_function(rng, 2, box, 4, false);
    while (norm(f).value * norm(g).value > box.limit) g = random_function(rng, 2, box, 4, true);
    CHECK(norm(convolve(f, g, box)).value == norm(f).value * norm(g).value);
  }
}

TEST_CASE("units are exactly the norm-one functions") {
  const Box box = Box::cube(4);
  CHECK(is_unit(identity_function(2, box)));
  CHECK(is_unit(builtin(Builtin::star, 2, box)));
  CHECK_FALSE(is_unit(builtin(Builtin::euler_zagier, 2, box)));
  SeededRng rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_function(rng, 2, box, 5, i % 2 == 0);
    CHECK(is_unit(f) == (norm(f).value == 1));
  }
}

TEST_CASE("division by a unit undoes convolution") {
  const Box box = Box::product(40);
  const auto star = builtin(Builtin::star, 2, box);
  CHECK(same_function(divide_by_unit(star, identity_function(2, box), box), star));
  const auto sq = convolve(star, star, box);
  CHECK(same_function(divide_by_unit(sq, star, box), star));
  CHECK_THROWS_AS(divide_by_unit(star, builtin(Builtin::euler_zagier, 2, box), box),
                  NotAUnitError);
}

TEST_CASE("dividing the weak-chain indicator by the strict one plus identity") {
  const Box box = Box::product(40);
  const auto star = builtin(Builtin::star, 2, box);
  const auto ez_plus_i =
      add(builtin(Builtin::euler_zagier, 2, box), identity_function(2, box));
  const auto h = divide_by_unit(star, ez_plus_i, box);
  CHECK(same_function(convolve(ez_plus_i, h, box), star));
  CHECK(h.value(MultiIndex{1, 1}) == 1);
  CHECK(h.value(MultiIndex{2, 2}) == 1);
  CHECK(h.value(MultiIndex{1, 2}) == 0);
  CHECK(h.value(MultiIndex{2, 4}) == -1);
}

TEST_CASE("box divisibility certificates") {
  const Box box = Box::product(12);
  const auto id = identity_function(1, box);

  SECTION("identity divides everything") {
    SeededRng rng(5);
    const auto g = random_function(rng, 1, box, 4, false);
    const auto cert = divides_on_box(id, g, box);
    REQUIRE(cert.status == Solvability::solvable_on_box);
    CHECK(same_function(*cert.quotient, g));
  }

  SECTION("scalar units divide everything") {
    const auto two_i = scale(Rational(2), id);
    const auto cert = divides_on_box(two_i, id, box);
    REQUIRE(cert.status == Solvability::solvable_on_box);
    CHECK(cert.quotient->value(MultiIndex{1}) == Rational(1, 2));
  }

  SECTION("point mass at 2 divides point mass at 4 but not at 3") {
    const auto at2 = make(1, box, {{MultiIndex{2}, Rational(1)}});
    const auto at3 = make(1, box, {{MultiIndex{3}, Rational(1)}});
    const auto at4 = make(1, box, {{MultiIndex{4}, Rational(1)}});
    const auto good = divides_on_box(at2, at4, box);
    REQUIRE(good.status == Solvability::solvable_on_box);
    CHECK(same_function(*good.quotient, at2));
    CHECK(divides_on_box(at2, at3, box).status == Solvability::inconsistent);
  }

  SECTION("solutions reconvolve to the dividend") {
    SeededRng rng(21);
    for (int i = 0; i < 5; ++i) {
      const auto f = random_function(rng, 1, box, 3, false);
      const auto h = random_function(rng, 1, box, 3, false);
      const auto g = convolve(f, h, box);
      const auto cert = divides_on_box(f, g, box);
      REQUIRE(cert.status == Solvability::solvable_on_box);
      CHECK(same_function(convolve(f, *cert.quotient, box), g));
    }
  }
}

TEST_CASE("equivalence on the box") {
  const Box box = Box::product(12);
  SeededRng rng(13);
  const auto f = random_function(rng, 1, box, 4, false);

  const auto refl = equivalent_on_box(f, f, box);
  CHECK(refl.equivalent);

  const auto u = random_function(rng, 1, box, 4, true);
  const auto v = random_function(rng, 1, box, 4, true);
  const auto uv = equivalent_on_box(u, v, box);
  REQUIRE(uv.equivalent);
  REQUIRE(uv.unit_witness.has_value());
  CHECK(same_function(convolve(*uv.unit_witness, v, box), u));

  const auto at2 = make(1, box, {{MultiIndex{2}, Rational(1)}});
  const auto at3 = make(1, box, {{MultiIndex{3}, Rational(1)}});
  CHECK_FALSE(equivalent_on_box(at2, at3, box).equivalent);
}

TEST_CASE("norm-prime certificates") {
  const Box box = Box::product(12);
  const auto at2 = make(1, box, {{MultiIndex{2}, Rational(1)}});
  CHECK(norm_prime_certificate(at2) == PrimeCertificate::certified_prime);

  const auto at23 = make(2, Box::product(12), {{MultiIndex{2, 3}, Rational(1)}});
  CHECK(norm_prime_certificate(at23) == PrimeCertificate::unknown);

  const auto unit = add(builtin(Builtin::euler_zagier, 2, Box::cube(4)),
                        identity_function(2, Box::cube(4)));
  CHECK_THROWS_AS(norm_prime_certificate(unit), DomainError);
  CHECK_THROWS_AS(norm_prime_certificate(make(1, box, {})), DomainError);
}

TEST_CASE("support subring membership") {
  const Box box = Box::cube(6);
  const auto star = builtin(Builtin::star, 2, box);
  CHECK(subring_membership(star, SupportRing::star));
  CHECK_FALSE(subring_membership(star, SupportRing::euler_zagier));  // diagonal support
  CHECK(subring_membership(convolve(star, star, box), SupportRing::star));
  CHECK(subring_membership(invert(star, box), SupportRing::star));

  const auto av = builtin(Builtin::apostol_vu, 3, Box::cube(9));
  CHECK(subring_membership(av, SupportRing::euler_zagier));
  CHECK(subring_membership(av, SupportRing::mordell_tornheim));
  CHECK(subring_membership(av, SupportRing::apostol_vu));
}

TEST_CASE("subring closure on random members") {
  SeededRng rng(31);
  const Box box = Box::cube(9);
  for (const SupportRing ring :
       {SupportRing::star, SupportRing::euler_zagier, SupportRing::mordell_tornheim}) {
    for (int i = 0; i < 8; ++i) {
      const auto f = random_subring_function(rng, 3, box, ring, 5, false);
      const auto g = random_subring_function(rng, 3, box, ring, 5, false);
      CHECK(subring_membership(convolve(f, g, box), ring));
    }
  }
  for (int i = 0; i < 5; ++i) {
    const auto f = random_subring_function(rng, 3, box, SupportRing::star, 5, true);
    CHECK(subring_membership(invert(f, box), SupportRing::star));
  }
}
