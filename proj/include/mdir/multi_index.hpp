#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdir/errors.hpp"

namespace mdir {

using Coord = std::uint32_t;

// A k-tuple of positive integers, the argument of a multiple arithmetic
// function. Componentwise product and divisibility give the divisor lattice.
class MultiIndex {
 public:
  using Storage = boost::container::small_vector<Coord, 4>;

  explicit MultiIndex(Storage entries) : e_(std::move(entries)) { validate(); }
  MultiIndex(std::initializer_list<Coord> entries) : e_(entries) { validate(); }
  explicit MultiIndex(const std::vector<Coord>& entries)
      : e_(entries.begin(), entries.end()) {
    validate();
  }

  static MultiIndex all_ones(int k) {
    Storage s(static_cast<std::size_t>(k), Coord(1));
    return MultiIndex(std::move(s));
  }

  int arity() const { return static_cast<int>(e_.size()); }
  Coord operator[](int j) const { return e_[static_cast<std::size_t>(j)]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::uint64_t product() const {
    std::uint64_t p = 1;
    for (Coord c : e_) p *= c;
    return p;
  }

  std::uint64_t coordinate_sum() const {
    std::uint64_t s = 0;
    for (Coord c : e_) s += c;
    return s;
  }

  bool is_all_ones() const {
    return std::all_of(e_.begin(), e_.end(), [](Coord c) { return c == 1; });
  }

  // Componentwise divisibility.
  bool divides(const MultiIndex& n) const {
    for (int j = 0; j < arity(); ++j)
      if (n.e_[static_cast<std::size_t>(j)] % e_[static_cast<std::size_t>(j)] != 0) return false;
    return true;
  }

  MultiIndex componentwise_product(const MultiIndex& other) const {
    Storage s(e_);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] *= other.e_[j];
    return MultiIndex(std::move(s));
  }

  // Componentwise quotient; caller guarantees divisibility.
  MultiIndex componentwise_quotient(const MultiIndex& divisor) const {
    Storage s(e_);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] /= divisor.e_[j];
    return MultiIndex(std::move(s));
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  // Lexicographic; this is the canonical storage order everywhere.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
  }

  std::string str() const {
    std::string out = "(";
    for (int j = 0; j < arity(); ++j) {
      if (j) out += ",";
      out += std::to_string(e_[static_cast<std::size_t>(j)]);
    }
    return out + ")";
  }

 private:
  void validate() const {
    if (e_.empty()) throw InputError("multi-index arity must be >= 1");
    for (Coord c : e_)
      if (c == 0) throw InputError("multi-index entries must be positive");
  }

  Storage e_;
};

// Finite truncation domain. Cube mode is {1..T}^k; product mode is
// {n : n_1 * ... * n_k <= T}. Both are closed under componentwise divisors.
struct Box {
  enum class Mode { cube, product };

  Mode mode = Mode::product;
  std::uint64_t limit = 1;

  static Box cube(std::uint64_t t) { return Box{Mode::cube, t}; }
  static Box product(std::uint64_t t) { return Box{Mode::product, t}; }

  bool contains(const MultiIndex& n) const {
    if (mode == Mode::cube) {
      for (Coord c : n)
        if (c > limit) return false;
      return true;
    }
    return n.product() <= limit;
  }

  // True when every index of `inner` (at arity k) lies in *this.
  bool contains_box(const Box& inner, int k) const {
    if (inner.limit == 0) return true;
    if (mode == inner.mode) return inner.limit <= limit;
    if (inner.mode == Mode::product) return inner.limit <= limit;  // product:T ⊆ cube:T' iff T <= T'
    // cube:T ⊆ product:T' iff T^k <= T'
    std::uint64_t p = 1;
    for (int j = 0; j < k; ++j) {
      if (p > limit / std::max<std::uint64_t>(inner.limit, 1) + 1) return false;
      p *= inner.limit;
      if (p > limit) return false;
    }
    return true;
  }

  // Largest representable box inside the set intersection.
  static Box intersect(const Box& a, const Box& b) {
    if (a.mode == b.mode) return Box{a.mode, std::min(a.limit, b.limit)};
    return Box::product(std::min(a.limit, b.limit));
  }

  friend bool operator==(const Box& a, const Box& b) = default;

  std::string str() const {
    return (mode == Mode::cube ? std::string("cube:") : std::string("product:")) +
           std::to_string(limit);
  }
};

// (divisor, quotient) pairs for every value up to T, ascending in divisor.
using DivisorTable = std::vector<std::vector<std::pair<Coord, Coord>>>;

inline DivisorTable divisor_table(Coord max_value) {
  DivisorTable table(static_cast<std::size_t>(max_value) + 1);
  for (Coord d = 1; d <= max_value; ++d)
    for (Coord m = d; m <= max_value; m += d)
      table[m].emplace_back(d, m / d);
  return table;
}

// All (a, b) with componentwise a*b = n, ordered lexicographically in a.
inline std::vector<std::pair<MultiIndex, MultiIndex>> divisor_pairs(const MultiIndex& n) {
  const int k = n.arity();
  std::vector<std::vector<std::pair<Coord, Coord>>> per_coord(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const Coord nj = n[j];
    for (Coord d = 1; d <= nj; ++d)
      if (nj % d == 0) per_coord[static_cast<std::size_t>(j)].emplace_back(d, nj / d);
  }
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  MultiIndex::Storage a(static_cast<std::size_t>(k), 1), b(static_cast<std::size_t>(k), 1);
  std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int j = 0; j < k; ++j) {
      const auto& [d, q] = per_coord[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
      a[static_cast<std::size_t>(j)] = d;
      b[static_cast<std::size_t>(j)] = q;
    }
    out.emplace_back(MultiIndex(a), MultiIndex(b));
    int j = k - 1;
    while (j >= 0) {
      auto& p = pos[static_cast<std::size_t>(j)];
      if (++p < per_coord[static_cast<std::size_t>(j)].size()) break;
      p = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

// Materialized box: dense ranks for cube mode, sorted keys for product mode.
// Ranks follow lexicographic order of the indices in both modes.
class BoxIndexer {
 public:
  // Keeps cube materialization within sane memory bounds.
  static constexpr std::uint64_t kMaxCells = std::uint64_t(1) << 28;

  BoxIndexer(int k, const Box& box) : k_(k), box_(box) {
    if (k < 1) throw InputError("arity must be >= 1");
    if (box.limit < 1) throw InputError("box limit must be >= 1");
    if (box.mode == Box::Mode::cube) {
      std::uint64_t cells = 1;
      for (int j = 0; j < k; ++j) {
        if (cells > kMaxCells / box.limit) throw InputError("cube box too large to materialize: " + box.str());
        cells *= box.limit;
      }
      size_ = cells;
      strides_.assign(static_cast<std::size_t>(k), 1);
      for (int j = k - 2; j >= 0; --j)
        strides_[static_cast<std::size_t>(j)] =
            strides_[static_cast<std::size_t>(j + 1)] * box.limit;
    } else {
      enumerate_product(MultiIndex::Storage(), 1);
      std::sort(keys_.begin(), keys_.end());
      size_ = keys_.size();
      if (size_ > kMaxCells) throw InputError("product box too large to materialize: " + box.str());
    }
  }

  int arity() const { return k_; }
  const Box& box() const { return box_; }
  std::uint64_t size() const { return size_; }
  bool is_cube() const { return box_.mode == Box::Mode::cube; }
  std::uint64_t cube_limit() const { return box_.limit; }
  const std::vector<std::uint64_t>& strides() const { return strides_; }

  std::optional<std::uint64_t> rank_of(const MultiIndex& n) const {
    if (n.arity() != k_) return std::nullopt;
    if (is_cube()) {
      std::uint64_t r = 0;
      for (int j = 0; j < k_; ++j) {
        if (n[j] > box_.limit) return std::nullopt;
        r += (n[j] - 1) * strides_[static_cast<std::size_t>(j)];
      }
      return r;
    }
    auto it = std::lower_bound(keys_.begin(), keys_.end(), n);
    if (it == keys_.end() || !(*it == n)) return std::nullopt;
    return static_cast<std::uint64_t>(it - keys_.begin());
  }

  MultiIndex index_at(std::uint64_t rank) const {
    if (is_cube()) {
      MultiIndex::Storage s(static_cast<std::size_t>(k_), 1);
      for (int j = 0; j < k_; ++j) {
        s[static_cast<std::size_t>(j)] =
            static_cast<Coord>(rank / strides_[static_cast<std::size_t>(j)] + 1);
        rank %= strides_[static_cast<std::size_t>(j)];
      }
      return MultiIndex(std::move(s));
    }
    return keys_[static_cast<std::size_t>(rank)];
  }

  // Ranks grouped by coordinate sum (the inversion recursion order); within a
  // level ranks ascend, i.e. lexicographic. Flat layout: level L occupies
  // ranks[offsets[L] .. offsets[L+1]).
  struct LevelOrder {
    std::vector<std::uint32_t> ranks;
    std::vector<std::uint64_t> offsets;  // indexed by coordinate sum
  };

  LevelOrder ranks_by_level() const {
    const std::uint64_t top = static_cast<std::uint64_t>(k_) * box_.limit;
    std::vector<std::uint32_t> level_of(static_cast<std::size_t>(size_));
    LevelOrder order;
    order.offsets.assign(top + 2, 0);
    for (std::uint64_t r = 0; r < size_; ++r) {
      const auto lv = static_cast<std::uint32_t>(index_at(r).coordinate_sum());
      level_of[static_cast<std::size_t>(r)] = lv;
      ++order.offsets[lv + 1];
    }
    for (std::uint64_t l = 1; l < top + 2; ++l) order.offsets[l] += order.offsets[l - 1];
    order.ranks.resize(static_cast<std::size_t>(size_));
    std::vector<std::uint64_t> cursor(order.offsets.begin(), order.offsets.end() - 1);
    for (std::uint64_t r = 0; r < size_; ++r)
      order.ranks[static_cast<std::size_t>(cursor[level_of[static_cast<std::size_t>(r)]]++)] =
          static_cast<std::uint32_t>(r);
    return order;
  }

  Coord max_coordinate() const { return static_cast<Coord>(box_.limit); }

 private:
  void enumerate_product(MultiIndex::Storage prefix, std::uint64_t prod_so_far) {
    if (static_cast<int>(prefix.size()) == k_) {
      keys_.push_back(MultiIndex(prefix));
      return;
    }
    for (Coord c = 1; prod_so_far * c <= box_.limit; ++c) {
      prefix.push_back(c);
      enumerate_product(prefix, prod_so_far * c);
      prefix.pop_back();
    }
  }

  int k_;
  Box box_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> strides_;  // cube mode only
  std::vector<MultiIndex> keys_;        // product mode only
};

}  // namespace mdir
