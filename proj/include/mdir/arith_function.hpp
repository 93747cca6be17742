#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mdir/errors.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/parallel.hpp"
#include "mdir/rational.hpp"

namespace mdir {

// A multiple (k-tuple) arithmetic function materialized on a truncation box.
// Storage is sparse: only nonzero values are kept, keys in lexicographic
// order. Instances are immutable after construction; every operation below is
// a pure function of its inputs.
class ArithFunction {
 public:
  ArithFunction(int k, Box box, std::vector<MultiIndex> keys, std::vector<Rational> vals,
                std::string name = {})
      : k_(k), box_(box), keys_(std::move(keys)), vals_(std::move(vals)), name_(std::move(name)) {
    if (k_ < 1) throw InputError("arity must be >= 1");
    if (keys_.size() != vals_.size()) throw InputError("key/value size mismatch");
    for (const auto& n : keys_) {
      if (n.arity() != k_) throw InputError("key arity mismatch");
      if (!box_.contains(n)) throw InputError("key " + n.str() + " outside box " + box_.str());
    }
  }

  int arity() const { return k_; }
  const Box& box() const { return box_; }
  const std::string& name() const { return name_; }
  std::size_t support_size() const { return keys_.size(); }
  const std::vector<MultiIndex>& keys() const { return keys_; }
  const std::vector<Rational>& values() const { return vals_; }

  const Rational* find(const MultiIndex& n) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), n);
    if (it == keys_.end() || !(*it == n)) return nullptr;
    return &vals_[static_cast<std::size_t>(it - keys_.begin())];
  }

  // Zero for absent keys.
  Rational value(const MultiIndex& n) const {
    const Rational* p = find(n);
    return p ? *p : Rational(0);
  }

  Rational value_at_one() const { return value(MultiIndex::all_ones(k_)); }
  bool is_unit() const { return value_at_one() != 0; }
  bool is_zero() const { return keys_.empty(); }

  ArithFunction with_name(std::string name) const {
    return ArithFunction(k_, box_, keys_, vals_, std::move(name));
  }

 private:
  int k_;
  Box box_;
  std::vector<MultiIndex> keys_;
  std::vector<Rational> vals_;
  std::string name_;
};

// Accumulates (index, value) pairs in any order; build() sorts, rejects
// duplicates and drops zeros.
class ArithFunctionBuilder {
 public:
  ArithFunctionBuilder(int k, Box box) : k_(k), box_(box) {}

  void set(MultiIndex n, Rational v) {
    entries_.emplace_back(std::move(n), std::move(v));
  }

  ArithFunction build(std::string name = {}) && {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i].first == entries_[i - 1].first)
        throw InputError("duplicate index " + entries_[i].first.str());
    std::vector<MultiIndex> keys;
    std::vector<Rational> vals;
    keys.reserve(entries_.size());
    vals.reserve(entries_.size());
    for (auto& [key, value] : entries_) {
      if (value == 0) continue;
      keys.push_back(std::move(key));
      vals.push_back(std::move(value));
    }
    return ArithFunction(k_, box_, std::move(keys), std::move(vals), std::move(name));
  }

 private:
  int k_;
  Box box_;
  std::vector<std::pair<MultiIndex, Rational>> entries_;
};

namespace detail {

constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();

// rank -> value slot, with a bit mask in front: the mask is small enough to
// stay cache-resident, and most probes in convolution/inversion miss.
struct SupportMap {
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> slots;

  explicit SupportMap(std::uint64_t size)
      : bits(static_cast<std::size_t>((size + 63) / 64), 0),
        slots(static_cast<std::size_t>(size), kNoSlot) {}

  void set(std::uint64_t rank, std::uint32_t slot) {
    bits[static_cast<std::size_t>(rank >> 6)] |= std::uint64_t(1) << (rank & 63);
    slots[static_cast<std::size_t>(rank)] = slot;
  }

  bool test(std::uint64_t rank) const {
    return (bits[static_cast<std::size_t>(rank >> 6)] >> (rank & 63)) & 1;
  }

  // kNoSlot when unset.
  std::uint32_t slot(std::uint64_t rank) const {
    return test(rank) ? slots[static_cast<std::size_t>(rank)] : kNoSlot;
  }
};

// Support of f ranked over the box (keys outside the box are skipped).
inline SupportMap support_slots(const ArithFunction& f, const BoxIndexer& ix) {
  SupportMap map(ix.size());
  const auto& keys = f.keys();
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (auto r = ix.rank_of(keys[i])) map.set(*r, static_cast<std::uint32_t>(i));
  return map;
}

// Visits every divisor pair a*b = n as (rank(a), rank(b)) within the box.
// Divisor-closure of the box guarantees both ranks exist.
template <typename Leaf>
void for_each_divisor_tuple(const BoxIndexer& ix, const DivisorTable& dtab, const MultiIndex& n,
                            Leaf&& leaf) {
  const int k = ix.arity();
  if (ix.is_cube()) {
    const auto& strides = ix.strides();
    auto rec = [&](auto&& self, int j, std::uint64_t ra, std::uint64_t rb) -> void {
      const auto& divs = dtab[n[j]];
      if (j == k - 1) {
        const std::uint64_t sj = strides[static_cast<std::size_t>(j)];
        for (const auto& [d, q] : divs)
          leaf(ra + (d - 1) * sj, rb + (q - 1) * sj);
        return;
      }
      for (const auto& [d, q] : divs)
        self(self, j + 1, ra + (d - 1) * strides[static_cast<std::size_t>(j)],
             rb + (q - 1) * strides[static_cast<std::size_t>(j)]);
    };
    rec(rec, 0, 0, 0);
  } else {
    MultiIndex::Storage a(static_cast<std::size_t>(k), 1), b(static_cast<std::size_t>(k), 1);
    auto rec = [&](auto&& self, int j) -> void {
      if (j == k) {
        leaf(*ix.rank_of(MultiIndex(a)), *ix.rank_of(MultiIndex(b)));
        return;
      }
      for (const auto& [d, q] : dtab[n[j]]) {
        a[static_cast<std::size_t>(j)] = d;
        b[static_cast<std::size_t>(j)] = q;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
}

inline void require_same_arity(const ArithFunction& f, const ArithFunction& g) {
  if (f.arity() != g.arity())
    throw InputError("arity mismatch: " + std::to_string(f.arity()) + " vs " +
                     std::to_string(g.arity()));
}

inline void require_covers(const ArithFunction& f, const Box& box) {
  if (!f.box().contains_box(box, f.arity()))
    throw InputError("operand box " + f.box().str() + " does not cover requested box " +
                     box.str());
}

}  // namespace detail

// Pointwise sum on the intersection box.
inline ArithFunction add(const ArithFunction& f, const ArithFunction& g) {
  detail::require_same_arity(f, g);
  const Box box = Box::intersect(f.box(), g.box());
  ArithFunctionBuilder out(f.arity(), box);
  const auto& fk = f.keys();
  const auto& gk = g.keys();
  std::size_t i = 0, j = 0;
  while (i < fk.size() || j < gk.size()) {
    if (j == gk.size() || (i < fk.size() && fk[i] < gk[j])) {
      if (box.contains(fk[i])) out.set(fk[i], f.values()[i]);
      ++i;
    } else if (i == fk.size() || gk[j] < fk[i]) {
      if (box.contains(gk[j])) out.set(gk[j], g.values()[j]);
      ++j;
    } else {
      if (box.contains(fk[i])) out.set(fk[i], f.values()[i] + g.values()[j]);
      ++i;
      ++j;
    }
  }
  return std::move(out).build();
}

inline ArithFunction scale(const Rational& c, const ArithFunction& f) {
  ArithFunctionBuilder out(f.arity(), f.box());
  if (c != 0)
    for (std::size_t i = 0; i < f.keys().size(); ++i) out.set(f.keys()[i], c * f.values()[i]);
  return std::move(out).build();
}

inline ArithFunction negate(const ArithFunction& f) { return scale(Rational(-1), f); }

// Multiple Dirichlet product restricted to `box`: h(n) = sum over a*b = n of
// f(a) g(b), exact. Output indices are evaluated independently (and possibly
// in parallel); exact arithmetic keeps the result thread-count independent.
inline ArithFunction convolve(const ArithFunction& f, const ArithFunction& g, const Box& box) {
  detail::require_same_arity(f, g);
  detail::require_covers(f, box);
  detail::require_covers(g, box);
  const int k = f.arity();
  const BoxIndexer ix(k, box);
  const auto slots_f = detail::support_slots(f, ix);
  const auto slots_g = detail::support_slots(g, ix);
  const auto dtab = divisor_table(ix.max_coordinate());
  const auto& fv = f.values();
  const auto& gv = g.values();

  std::vector<Rational> dense(static_cast<std::size_t>(ix.size()));
  parallel_for_chunks(ix.size(), 1024, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) {
      const MultiIndex n = ix.index_at(r);
      Rational acc(0);
      detail::for_each_divisor_tuple(ix, dtab, n, [&](std::uint64_t ra, std::uint64_t rb) {
        if (!slots_f.test(ra) || !slots_g.test(rb)) return;
        acc += fv[slots_f.slots[static_cast<std::size_t>(ra)]] *
               gv[slots_g.slots[static_cast<std::size_t>(rb)]];
      });
      dense[static_cast<std::size_t>(r)] = std::move(acc);
    }
  });

  std::vector<MultiIndex> keys;
  std::vector<Rational> vals;
  for (std::uint64_t r = 0; r < ix.size(); ++r) {
    if (dense[static_cast<std::size_t>(r)] == 0) continue;
    keys.push_back(ix.index_at(r));
    vals.push_back(std::move(dense[static_cast<std::size_t>(r)]));
  }
  return ArithFunction(k, box, std::move(keys), std::move(vals));
}

namespace detail {

// Level-by-level inverse recursion over scalar type S. h(1) = h_one and
// h(n) = scale * sum over a*b = n, a != 1 of f(a) h(b); both the Rational
// case (h_one = 1/f(1), scale = -1/f(1)) and the integer fast path
// (f integer-valued with f(1) = +-1) instantiate this.
template <typename S>
std::pair<SupportMap, std::vector<S>> invert_levels(const BoxIndexer& ix,
                                                    const DivisorTable& dtab,
                                                    const SupportMap& slots_f,
                                                    const std::vector<S>& fv, const S& h_one,
                                                    const S& scale) {
  const auto levels = ix.ranks_by_level();
  SupportMap h_map(ix.size());
  std::vector<S> h_store;
  h_store.reserve(1024);

  using LevelOut = std::vector<std::pair<std::uint32_t, S>>;
  for (std::size_t lv = 0; lv + 1 < levels.offsets.size(); ++lv) {
    const std::uint64_t lo = levels.offsets[lv];
    const std::uint64_t hi = levels.offsets[lv + 1];
    if (lo == hi) continue;
    const auto plan = plan_chunks(hi - lo, 2048);
    std::vector<LevelOut> outs(plan.size());
    run_chunks(plan, [&](unsigned chunk, std::uint64_t clo, std::uint64_t chi) {
      LevelOut& out = outs[chunk];
      for (std::uint64_t t = clo; t < chi; ++t) {
        const std::uint32_t r = levels.ranks[static_cast<std::size_t>(lo + t)];
        const MultiIndex n = ix.index_at(r);
        if (n.is_all_ones()) {
          out.emplace_back(r, h_one);
          continue;
        }
        S acc(0);
        for_each_divisor_tuple(ix, dtab, n, [&](std::uint64_t ra, std::uint64_t rb) {
          if (ra == 0) return;  // a = (1,...,1) carries the unknown h(n) itself
          if (!slots_f.test(ra) || !h_map.test(rb)) return;
          acc += fv[slots_f.slots[static_cast<std::size_t>(ra)]] *
                 h_store[h_map.slots[static_cast<std::size_t>(rb)]];
        });
        if (acc != 0) out.emplace_back(r, scale * acc);
      }
    });
    for (auto& out : outs)
      for (auto& [r, v] : out) {
        h_map.set(r, static_cast<std::uint32_t>(h_store.size()));
        h_store.push_back(std::move(v));
      }
  }
  return {std::move(h_map), std::move(h_store)};
}

}  // namespace detail

// Dirichlet inverse on `box`, processed in ascending coordinate-sum order
// (lexicographic within a level). The output equals the global inverse
// restricted to the box: the recursion only ever consults divisors of its
// argument, and boxes are divisor-closed.
inline ArithFunction invert(const ArithFunction& f, const Box& box) {
  detail::require_covers(f, box);
  const int k = f.arity();
  const Rational f1 = f.value_at_one();
  if (f1 == 0) throw NotAUnitError("invert: f(1,...,1) = 0");

  const BoxIndexer ix(k, box);
  const auto slots_f = detail::support_slots(f, ix);
  const auto dtab = divisor_table(ix.max_coordinate());

  const bool integer_mode = [&] {
    if (abs(f1) != 1) return false;
    for (const auto& v : f.values())
      if (denominator(v) != 1) return false;
    return true;
  }();

  detail::SupportMap h_map(0);
  std::vector<MultiIndex> keys;
  std::vector<Rational> vals;

  if (integer_mode) {
    // Integer-valued f with f(1) = +-1 keeps the whole recursion in integers,
    // which is several times cheaper than normalized rational arithmetic.
    std::vector<BigInt> fv;
    fv.reserve(f.values().size());
    for (const auto& v : f.values()) fv.push_back(numerator(v));
    const BigInt f1i = numerator(f1);
    auto [map, store] = detail::invert_levels<BigInt>(ix, dtab, slots_f, fv, f1i, -f1i);
    h_map = std::move(map);
    keys.reserve(store.size());
    vals.reserve(store.size());
    for (std::uint64_t r = 0; r < ix.size(); ++r) {
      const std::uint32_t s = h_map.slot(r);
      if (s == detail::kNoSlot) continue;
      keys.push_back(ix.index_at(r));
      vals.push_back(Rational(store[s]));
    }
  } else {
    const Rational inv_f1 = Rational(1) / f1;
    auto [map, store] =
        detail::invert_levels<Rational>(ix, dtab, slots_f, f.values(), inv_f1, -inv_f1);
    h_map = std::move(map);
    keys.reserve(store.size());
    vals.reserve(store.size());
    for (std::uint64_t r = 0; r < ix.size(); ++r) {
      const std::uint32_t s = h_map.slot(r);
      if (s == detail::kNoSlot) continue;
      keys.push_back(ix.index_at(r));
      vals.push_back(std::move(store[s]));
    }
  }
  return ArithFunction(k, box, std::move(keys), std::move(vals));
}

// ---- Built-in coefficient functions ----------------------------------------

enum class Builtin { identity, ones, euler_zagier, star, mordell_tornheim, apostol_vu };

inline const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::identity: return "identity_I";
    case Builtin::ones: return "ones";
    case Builtin::euler_zagier: return "u_EZ";
    case Builtin::star: return "u_star";
    case Builtin::mordell_tornheim: return "u_MT";
    case Builtin::apostol_vu: return "u_AV";
  }
  return "?";
}

inline Builtin builtin_from_string(const std::string& name) {
  if (name == "identity_I") return Builtin::identity;
  if (name == "ones") return Builtin::ones;
  if (name == "u_EZ") return Builtin::euler_zagier;
  if (name == "u_star") return Builtin::star;
  if (name == "u_MT") return Builtin::mordell_tornheim;
  if (name == "u_AV") return Builtin::apostol_vu;
  throw InputError("unknown builtin: " + name);
}

namespace detail {

// Enumerates box members satisfying a per-prefix predicate. The predicate
// sees the partial tuple and must be monotone (false prefixes never extend
// to true tuples is NOT assumed; pruning uses only the box bounds).
template <typename Pred>
void enumerate_box(int k, const Box& box, const Pred& keep,
                   std::vector<MultiIndex>& out_keys) {
  MultiIndex::Storage cur;
  auto rec = [&](auto&& self, std::uint64_t prod) -> void {
    if (static_cast<int>(cur.size()) == k) {
      MultiIndex n{cur};
      if (keep(n)) out_keys.push_back(std::move(n));
      return;
    }
    const std::uint64_t cap =
        box.mode == Box::Mode::cube ? box.limit : box.limit / prod;
    for (Coord c = 1; c <= cap; ++c) {
      cur.push_back(c);
      self(self, prod * c);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace detail

// Materializes a named indicator on the box. u_MT / u_AV take the total arity
// k and tie the last coordinate to the sum of the first k-1.
inline ArithFunction builtin(Builtin which, int k, const Box& box) {
  if (k < 1) throw InputError("arity must be >= 1");
  if ((which == Builtin::mordell_tornheim || which == Builtin::apostol_vu) && k < 2)
    throw InputError(std::string(builtin_name(which)) + " requires arity >= 2");

  if (which == Builtin::identity) {
    std::vector<MultiIndex> keys{MultiIndex::all_ones(k)};
    std::vector<Rational> vals{Rational(1)};
    return ArithFunction(k, box, std::move(keys), std::move(vals), builtin_name(which));
  }

  auto chain_ok = [](const MultiIndex& n, bool strict, int upto) {
    for (int j = 1; j < upto; ++j) {
      if (strict ? !(n[j - 1] < n[j]) : !(n[j - 1] <= n[j])) return false;
    }
    return true;
  };
  auto sum_tied = [](const MultiIndex& n) {
    std::uint64_t s = 0;
    const int k2 = n.arity();
    for (int j = 0; j + 1 < k2; ++j) s += n[j];
    return s == n[k2 - 1];
  };

  std::vector<MultiIndex> keys;
  switch (which) {
    case Builtin::ones:
      detail::enumerate_box(k, box, [](const MultiIndex&) { return true; }, keys);
      break;
    case Builtin::euler_zagier:
      detail::enumerate_box(k, box, [&](const MultiIndex& n) { return chain_ok(n, true, k); },
                            keys);
      break;
    case Builtin::star:
      detail::enumerate_box(k, box, [&](const MultiIndex& n) { return chain_ok(n, false, k); },
                            keys);
      break;
    case Builtin::mordell_tornheim:
      detail::enumerate_box(k, box, sum_tied, keys);
      break;
    case Builtin::apostol_vu:
      // Full strict chain including the tied coordinate; at k = 2 the two
      // conditions are incompatible and the function is empty.
      detail::enumerate_box(
          k, box,
          [&](const MultiIndex& n) { return chain_ok(n, true, k) && sum_tied(n); }, keys);
      break;
    case Builtin::identity:
      break;
  }
  std::vector<Rational> vals(keys.size(), Rational(1));
  return ArithFunction(k, box, std::move(keys), std::move(vals), builtin_name(which));
}

inline ArithFunction identity_function(int k, const Box& box) {
  return builtin(Builtin::identity, k, box);
}

}  // namespace mdir
