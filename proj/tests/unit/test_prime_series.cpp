#include <catch2/catch_amalgamated.hpp>

#include "mdir/io.hpp"
#include "mdir/prime_series.hpp"
#include "mdir/random_functions.hpp"

using namespace mdir;

TEST_CASE("basis slot arithmetic") {
  const PrimePositionBasis basis(2);
  // prime-major, position-minor: slot 1 = (2, pos 1), slot 2 = (2, pos 2),
  // slot 3 = (3, pos 1), ...
  CHECK(basis.slot_of(1, 1) == 1);
  CHECK(basis.slot_of(1, 2) == 2);
  CHECK(basis.slot_of(2, 1) == 3);
  CHECK(basis.decode_slot(4) == std::pair<std::uint64_t, int>{2, 2});
  CHECK(basis.nth_prime(1) == 2);
  CHECK(basis.nth_prime(4) == 7);
  CHECK(basis.basis_index(3) == MultiIndex{3, 1});
  CHECK(basis.basis_index(6) == MultiIndex{1, 5});
}

TEST_CASE("basis round trip holds through slot 10000") {
  const PrimePositionBasis basis(3);
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    const auto back = basis.slot_of_index(basis.basis_index(m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
}

TEST_CASE("exponent vectors") {
  const PrimePositionBasis basis(2);
  CHECK(exponent_vector(MultiIndex{1, 1}, basis).is_zero());

  const auto e21 = exponent_vector(MultiIndex{2, 1}, basis);
  CHECK(e21.power_at(1) == 1);  // (prime 2, position 1)
  const auto e12 = exponent_vector(MultiIndex{1, 2}, basis);
  CHECK(e12.power_at(2) == 1);  // (prime 2, position 2)

  // (12,5) = 2^2 * 3 in the first coordinate, 5 in the second.
  const auto e = exponent_vector(MultiIndex{12, 5}, basis);
  CHECK(e.power_at(1) == 2);  // (2, pos 1)
  CHECK(e.power_at(3) == 1);  // (3, pos 1)
  CHECK(e.power_at(6) == 1);  // (5, pos 2)
  CHECK(e.terms().size() == 3);
}

TEST_CASE("exponents are additive under componentwise products") {
  const PrimePositionBasis basis(2);
  const BoxIndexer ix(2, Box::product(20));
  for (std::uint64_t i = 0; i < ix.size(); ++i)
    for (std::uint64_t j = 0; j < ix.size(); ++j) {
      const auto a = ix.index_at(i), b = ix.index_at(j);
      CHECK(exponent_vector(a.componentwise_product(b), basis) ==
            exponent_vector(a, basis) + exponent_vector(b, basis));
    }
}

TEST_CASE("index reconstruction inverts the exponent map") {
  const PrimePositionBasis basis(2);
  const Box box = Box::product(30);
  const BoxIndexer ix(2, box);
  for (std::uint64_t r = 0; r < ix.size(); ++r) {
    const auto n = ix.index_at(r);
    const auto back = index_from_exponents(exponent_vector(n, basis), basis, box);
    REQUIRE(back.has_value());
    CHECK(*back == n);
  }
}

TEST_CASE("series encoding of the identity is the constant monomial") {
  const PrimePositionBasis basis(2);
  const auto s = to_power_series(identity_function(2, Box::cube(4)), basis);
  REQUIRE(s.coefficients().size() == 1);
  CHECK(s.coefficients().begin()->first.is_zero());
  CHECK(s.coefficients().begin()->second == 1);
}

TEST_CASE("series encoding of ones through 4 at arity one") {
  const PrimePositionBasis basis(1);
  const auto s = to_power_series(builtin(Builtin::ones, 1, Box::cube(4)), basis);
  // 1 + x1 + x2 + x1^2 for n = 1, 2, 3, 4.
  REQUIRE(s.coefficients().size() == 4);
  ExponentVector x1({{1, 1}});
  ExponentVector x2({{2, 1}});
  ExponentVector x1sq({{1, 2}});
  CHECK(s.coefficients().count(ExponentVector{}) == 1);
  CHECK(s.coefficients().count(x1) == 1);
  CHECK(s.coefficients().count(x2) == 1);
  CHECK(s.coefficients().count(x1sq) == 1);
}

TEST_CASE("encoding is a ring homomorphism onto box-image monomials") {
  const Box box = Box::product(30);
  const PrimePositionBasis basis(2);
  SeededRng rng(99);
  for (int i = 0; i < 8; ++i) {
    const auto f = random_function(rng, 2, box, 8, false);
    const auto g = random_function(rng, 2, box, 8, false);
    const auto lhs = to_power_series(convolve(f, g, box), basis);
    const auto rhs =
        multiply(to_power_series(f, basis), to_power_series(g, basis), basis, box);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("series JSON export is ordered") {
  const PrimePositionBasis basis(1);
  const auto s = to_power_series(builtin(Builtin::ones, 1, Box::cube(4)), basis);
  const auto j = series_to_json(s);
  REQUIRE(j.at("monomials").size() == 4);
  CHECK(j.at("monomials")[0].at("exp").empty());  // constant term first (lex order)
  CHECK(j.at("monomials")[0].at("coef") == "1/1");
}
