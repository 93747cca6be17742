#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mdir/arith_function.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/rational.hpp"
#include "mdir/ufd.hpp"

namespace mdir {

// SplitMix64: deterministic across platforms, which keeps seeded suites and
// their failure rows reproducible everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Nonzero rational with numerator in [-max_num, max_num] and denominator in
// [1, max_den].
inline Rational random_nonzero_rational(SeededRng& rng, int max_num = 9, int max_den = 9) {
  std::int64_t num = 0;
  while (num == 0) num = rng.range(-max_num, max_num);
  return Rational(num, rng.range(1, max_den));
}

// Sparse random function: `support` distinct indices with nonzero rational
// values; force_unit additionally puts a nonzero value at (1,...,1).
inline ArithFunction random_function(SeededRng& rng, int k, const Box& box, std::size_t support,
                                     bool force_unit, int max_num = 9, int max_den = 9) {
  const BoxIndexer ix(k, box);
  std::set<std::uint64_t> ranks;
  if (force_unit) ranks.insert(*ix.rank_of(MultiIndex::all_ones(k)));
  while (ranks.size() < std::min<std::uint64_t>(support, ix.size()))
    ranks.insert(rng.below(ix.size()));
  ArithFunctionBuilder b(k, box);
  for (std::uint64_t r : ranks)
    b.set(ix.index_at(r), random_nonzero_rational(rng, max_num, max_den));
  return std::move(b).build();
}

// Random member of a support-condition subring: indices are sampled from the
// corresponding indicator's support. force_unit is only meaningful for the
// weak-chain ring, whose support contains (1,...,1).
inline ArithFunction random_subring_function(SeededRng& rng, int k, const Box& box,
                                             SupportRing ring, std::size_t support,
                                             bool force_unit, int max_num = 9, int max_den = 9) {
  Builtin indicator = Builtin::star;
  switch (ring) {
    case SupportRing::euler_zagier: indicator = Builtin::euler_zagier; break;
    case SupportRing::star: indicator = Builtin::star; break;
    case SupportRing::mordell_tornheim: indicator = Builtin::mordell_tornheim; break;
    case SupportRing::apostol_vu: indicator = Builtin::apostol_vu; break;
  }
  const auto allowed = builtin(indicator, k, box).keys();
  std::set<std::size_t> picks;
  if (force_unit) {
    const MultiIndex one = MultiIndex::all_ones(k);
    for (std::size_t i = 0; i < allowed.size(); ++i)
      if (allowed[i] == one) picks.insert(i);
  }
  while (picks.size() < std::min(support, allowed.size())) picks.insert(rng.below(allowed.size()));
  ArithFunctionBuilder b(k, box);
  for (std::size_t i : picks) b.set(allowed[i], random_nonzero_rational(rng, max_num, max_den));
  return std::move(b).build();
}

}  // namespace mdir
