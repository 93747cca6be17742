#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/rational.hpp"

namespace mdir {

// Enumeration of the single-prime-coordinate indices: slot m <-> (i-th prime,
// position j) with m = k*(i-1) + j, everything 1-based. Prime-major ordering
// gives O(1) decode and a cheap round trip.
class PrimePositionBasis {
 public:
  explicit PrimePositionBasis(int k) : k_(k) {
    if (k < 1) throw InputError("arity must be >= 1");
  }

  int arity() const { return k_; }

  std::uint64_t slot_of(std::uint64_t prime_index, int position) const {
    return static_cast<std::uint64_t>(k_) * (prime_index - 1) +
           static_cast<std::uint64_t>(position);
  }

  // slot -> (prime index, position), both 1-based.
  std::pair<std::uint64_t, int> decode_slot(std::uint64_t slot) const {
    return {(slot - 1) / k_ + 1, static_cast<int>((slot - 1) % k_) + 1};
  }

  std::uint64_t nth_prime(std::uint64_t i) const {
    ensure_primes(i);
    return primes_[static_cast<std::size_t>(i - 1)];
  }

  // Index of p in the prime sequence; nullopt when p is not prime.
  std::optional<std::uint64_t> prime_index(std::uint64_t p) const {
    ensure_primes_up_to(p);
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
  }

  // The basis element for a slot: (1,...,p,...,1) with p at the decoded
  // position.
  MultiIndex basis_index(std::uint64_t slot) const {
    const auto [i, j] = decode_slot(slot);
    MultiIndex::Storage s(static_cast<std::size_t>(k_), 1);
    s[static_cast<std::size_t>(j - 1)] = static_cast<Coord>(nth_prime(i));
    return MultiIndex(std::move(s));
  }

  // Inverse of basis_index; nullopt unless exactly one coordinate is a prime
  // and the rest are 1.
  std::optional<std::uint64_t> slot_of_index(const MultiIndex& n) const {
    int pos = 0;
    std::uint64_t p = 0;
    for (int j = 0; j < n.arity(); ++j) {
      if (n[j] == 1) continue;
      if (p != 0) return std::nullopt;
      p = n[j];
      pos = j + 1;
    }
    if (p == 0) return std::nullopt;
    auto i = prime_index(p);
    if (!i) return std::nullopt;
    return slot_of(*i, pos);
  }

 private:
  void ensure_primes(std::uint64_t count) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (primes_.size() < count) grow();
  }

  void ensure_primes_up_to(std::uint64_t value) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (primes_.empty() || primes_.back() < value) grow();
  }

  void grow() const {
    sieve_bound_ = std::max<std::uint64_t>(sieve_bound_ * 2, 64);
    std::vector<bool> composite(static_cast<std::size_t>(sieve_bound_) + 1, false);
    primes_.clear();
    for (std::uint64_t p = 2; p <= sieve_bound_; ++p) {
      if (composite[static_cast<std::size_t>(p)]) continue;
      primes_.push_back(p);
      for (std::uint64_t m = p * p; m <= sieve_bound_; m += p)
        composite[static_cast<std::size_t>(m)] = true;
    }
  }

  int k_;
  mutable std::mutex mu_;
  mutable std::vector<std::uint64_t> primes_;
  mutable std::uint64_t sieve_bound_ = 0;
};

// Finite-support exponent sequence over basis slots; (slot, power) pairs with
// slots ascending and powers positive.
class ExponentVector {
 public:
  using Storage = boost::container::small_vector<std::pair<std::uint32_t, std::uint32_t>, 4>;

  ExponentVector() = default;
  explicit ExponentVector(Storage terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
  }

  const Storage& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint32_t power_at(std::uint32_t slot) const {
    for (const auto& [s, e] : terms_)
      if (s == slot) return e;
    return 0;
  }

  // Componentwise sum (merge of sorted term lists).
  ExponentVector operator+(const ExponentVector& other) const {
    Storage out;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      if (j == other.terms_.size() ||
          (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
        out.push_back(other.terms_[j++]);
      } else {
        out.emplace_back(terms_[i].first, terms_[i].second + other.terms_[j].second);
        ++i;
        ++j;
      }
    }
    ExponentVector r;
    r.terms_ = std::move(out);
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                        b.terms_.end());
  }

 private:
  Storage terms_;
};

// Exponents of n over the basis: factor each coordinate, route prime p at
// position j to slot (prime_index(p), j). Additive under componentwise
// products.
inline ExponentVector exponent_vector(const MultiIndex& n, const PrimePositionBasis& basis) {
  if (n.arity() != basis.arity()) throw InputError("exponent_vector: arity mismatch");
  ExponentVector::Storage terms;
  for (int j = 0; j < n.arity(); ++j) {
    std::uint64_t rem = n[j];
    for (std::uint64_t p = 2; p * p <= rem; ++p) {
      if (rem % p != 0) continue;
      std::uint32_t e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      terms.emplace_back(static_cast<std::uint32_t>(basis.slot_of(*basis.prime_index(p), j + 1)),
                         e);
    }
    if (rem > 1)
      terms.emplace_back(
          static_cast<std::uint32_t>(basis.slot_of(*basis.prime_index(rem), j + 1)), 1);
  }
  return ExponentVector(std::move(terms));
}

// Rebuilds the multi-index with the given exponents; nullopt when the result
// escapes `bound` (used to confine series products to box images).
inline std::optional<MultiIndex> index_from_exponents(const ExponentVector& ev,
                                                      const PrimePositionBasis& basis,
                                                      const Box& bound) {
  MultiIndex::Storage s(static_cast<std::size_t>(basis.arity()), 1);
  for (const auto& [slot, power] : ev.terms()) {
    const auto [i, j] = basis.decode_slot(slot);
    const std::uint64_t p = basis.nth_prime(i);
    std::uint64_t coord = s[static_cast<std::size_t>(j - 1)];
    for (std::uint32_t e = 0; e < power; ++e) {
      coord *= p;
      // In both modes one oversized coordinate already escapes the box.
      if (coord > bound.limit) return std::nullopt;
    }
    s[static_cast<std::size_t>(j - 1)] = static_cast<Coord>(coord);
  }
  MultiIndex n(std::move(s));
  if (!bound.contains(n)) return std::nullopt;
  return n;
}

// Truncated formal power series in countably many indeterminates (one per
// basis slot); the image of a box under the monomial encoding.
class TruncatedSeries {
 public:
  TruncatedSeries(int k, Box box) : k_(k), box_(box) {}

  int arity() const { return k_; }
  const Box& box() const { return box_; }
  const std::map<ExponentVector, Rational>& coefficients() const { return coeffs_; }

  void set(ExponentVector ev, Rational c) {
    if (c == 0) return;
    coeffs_.emplace(std::move(ev), std::move(c));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  int k_;
  Box box_;
  std::map<ExponentVector, Rational> coeffs_;
};

// Monomial encoding of f: the series with coefficient f(n) on the monomial of
// exponents(n). A ring homomorphism into the power-series ring (addition and
// multiplication of coefficient tables), truncated to box-image monomials.
inline TruncatedSeries to_power_series(const ArithFunction& f, const PrimePositionBasis& basis) {
  if (f.arity() != basis.arity()) throw InputError("to_power_series: arity mismatch");
  TruncatedSeries s(f.arity(), f.box());
  for (std::size_t i = 0; i < f.keys().size(); ++i)
    s.set(exponent_vector(f.keys()[i], basis), f.values()[i]);
  return s;
}

// Coefficient-table product; monomials outside the image of `box` are
// discarded.
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                const PrimePositionBasis& basis, const Box& box) {
  if (a.arity() != b.arity()) throw InputError("series multiply: arity mismatch");
  TruncatedSeries out(a.arity(), box);
  std::map<ExponentVector, Rational> acc;
  for (const auto& [ea, ca] : a.coefficients())
    for (const auto& [eb, cb] : b.coefficients()) {
      ExponentVector e = ea + eb;
      if (!index_from_exponents(e, basis, box)) continue;
      acc[std::move(e)] += ca * cb;
    }
  for (auto& [e, c] : acc)
    if (c != 0) out.set(e, std::move(c));
  return out;
}

}  // namespace mdir
