// Positions, partitions, hooks, residue decompositions, p-cores and p-core
// towers.
//
// A position is the set of occupied squares. Its Young diagram lambda(X) has
// parts x^{(i)} - m + i where x^{(1)} > ... > x^{(m)}; moving a coin removes
// a hook. The p-core tower rows are computed from hook counts,
//
//   g_L(X) = sum_x floor(x / p^L) - sum_R C(|X_R|, 2)
//   T_L(X) = g_L(X) - p g_{L+1}(X),
//
// where X_R collects the quotients of coins whose residue mod p^L is R.

#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "welter/padic.hpp"

namespace welter {

/// Set of occupied squares, stored strictly increasing.
class Position {
public:
  Position() = default;
  Position(std::initializer_list<Nat> coins) : Position(std::vector<Nat>(coins)) {}
  /// Accepts coins in any order; duplicates are rejected.
  explicit Position(std::vector<Nat> coins) : coins_(std::move(coins)) {
    std::sort(coins_.begin(), coins_.end());
    if (std::adjacent_find(coins_.begin(), coins_.end()) != coins_.end())
      throw std::invalid_argument("two coins on the same square");
  }

  const std::vector<Nat>& coins() const noexcept { return coins_; }
  std::size_t size() const noexcept { return coins_.size(); }
  bool empty() const noexcept { return coins_.empty(); }
  bool contains(Nat x) const { return std::binary_search(coins_.begin(), coins_.end(), x); }
  Nat max_coin() const { return coins_.empty() ? 0 : coins_.back(); }
  Nat coin_sum() const { return std::accumulate(coins_.begin(), coins_.end(), Nat{0}); }

  /// X with coin `from` moved to `to`; no legality check beyond distinctness.
  Position moved(Nat from, Nat to) const {
    std::vector<Nat> c = coins_;
    auto it = std::find(c.begin(), c.end(), from);
    if (it == c.end()) throw std::invalid_argument("no coin on square " + std::to_string(from));
    *it = to;
    return Position(std::move(c));
  }

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

private:
  std::vector<Nat> coins_;
};

inline std::string to_string(const std::vector<Nat>& v, char open = '{', char close = '}') {
  std::string s(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += close;
  return s;
}
inline std::string to_string(const Position& X) { return to_string(X.coins()); }
inline std::ostream& operator<<(std::ostream& os, const Position& X) { return os << to_string(X); }

/// Weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<Nat> parts) : Partition(std::vector<Nat>(parts)) {}
  explicit Partition(std::vector<Nat> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("partition has an interior zero part");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<Nat>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Nat size() const { return std::accumulate(parts_.begin(), parts_.end(), Nat{0}); }
  Nat operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Cellwise containment of Young diagrams.
  bool contained_in(const Partition& other) const {
    if (parts_.size() > other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] > other.parts_[i]) return false;
    return true;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<Nat> parts_;
};

inline std::string to_string(const Partition& lam) { return to_string(lam.parts(), '(', ')'); }
inline std::ostream& operator<<(std::ostream& os, const Partition& lam) { return os << to_string(lam); }

/// Rows T_L of the p-core tower, trailing zeros trimmed.
struct Tower {
  std::vector<Nat> rows;

  Nat operator[](std::size_t L) const { return L < rows.size() ? rows[L] : 0; }
  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }

  /// (T_L, T_{L+1}, ...)
  Tower from(std::size_t L) const {
    Tower t;
    if (L < rows.size()) t.rows.assign(rows.begin() + static_cast<std::ptrdiff_t>(L), rows.end());
    return t;
  }

  bool operator==(const Tower&) const = default;
};

inline std::string to_string(const Tower& t) { return to_string(t.rows, '(', ')'); }

/// Element of Z_p^L, little-endian. Maps keyed by it iterate lexicographically
/// starting from digit 0.
struct ResidueKey {
  std::vector<unsigned> digits;

  static ResidueKey of(Nat x, unsigned L, Base p) {
    ResidueKey k;
    k.digits.reserve(L);
    for (unsigned i = 0; i < L; ++i) {
      k.digits.push_back(static_cast<unsigned>(x % p.value()));
      x /= p.value();
    }
    return k;
  }

  Nat value(Base p) const {
    Nat v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p.value() + *it;
    return v;
  }

  auto operator<=>(const ResidueKey&) const = default;
  bool operator==(const ResidueKey&) const = default;
};

// --- diagram ----------------------------------------------------------------

inline Partition partition_of(const Position& X) {
  const auto& c = X.coins();
  const std::size_t m = c.size();
  std::vector<Nat> parts;
  parts.reserve(m);
  // c is ascending: the i-th largest coin (1-based) is c[m - i].
  for (std::size_t i = 1; i <= m; ++i) {
    const Nat part = c[m - i] - (m - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

/// The m-coin position whose diagram is lam.
inline Position position_of(const Partition& lam, std::size_t m) {
  if (lam.length() > m)
    throw std::invalid_argument("partition " + to_string(lam) + " has more than " + std::to_string(m) + " parts");
  std::vector<Nat> coins(m);
  for (std::size_t i = 0; i < m; ++i) coins[m - 1 - i] = lam[i] + (m - 1 - i);
  return Position(std::move(coins));
}

/// One hook length per cell, row by row.
inline std::vector<Nat> hook_lengths(const Partition& lam) {
  std::vector<Nat> out;
  if (lam.empty()) return out;
  std::vector<Nat> conj(lam[0], 0);
  for (Nat r : lam.parts())
    for (Nat j = 0; j < r; ++j) ++conj[j];
  out.reserve(lam.size());
  for (std::size_t i = 0; i < lam.length(); ++i)
    for (Nat j = 0; j < lam[i]; ++j) out.push_back((lam[i] - j - 1) + (conj[j] - i - 1) + 1);
  return out;
}

// --- residue classes ----------------------------------------------------------

/// |X_R| for every nonempty class R in Z_{p^L}, keyed by R as a number.
inline std::unordered_map<Nat, Nat> class_sizes(const Position& X, unsigned L, Base p) {
  const Nat mod = power(p, L);
  std::unordered_map<Nat, Nat> sizes;
  for (Nat x : X.coins()) ++sizes[x % mod];
  return sizes;
}

/// Number of hooks of lambda(X) whose length is divisible by p^L.
inline Nat hook_count(const Position& X, unsigned L, Base p) {
  const Nat mod = power(p, L);
  Nat quotients = 0;
  for (Nat x : X.coins()) quotients += x / mod;
  Nat pairs = 0;
  for (const auto& [r, n] : class_sizes(X, L, p)) pairs += n * (n - 1) / 2;
  return quotients - pairs;
}

/// X_R = { x_{>=L} : x in X, x_{<L} = R } for every R in Z_p^L, including empty classes.
inline std::map<ResidueKey, Position> decompose(const Position& X, unsigned L, Base p) {
  const Nat mod = power(p, L);
  if (mod > (Nat{1} << 20)) throw std::invalid_argument("decompose: p^L too large to enumerate classes");
  std::vector<std::vector<Nat>> buckets(mod);
  for (Nat x : X.coins()) buckets[x % mod].push_back(x / mod);
  std::map<ResidueKey, Position> out;
  for (Nat r = 0; r < mod; ++r) out.emplace(ResidueKey::of(r, L, p), Position(std::move(buckets[r])));
  return out;
}

/// Inverse of decompose: the coin (R, x) has low digits R and quotient x.
inline Position assemble(const std::map<ResidueKey, Position>& parts, Base p) {
  std::vector<Nat> coins;
  std::size_t L = 0;
  bool first = true;
  for (const auto& [key, sub] : parts) {
    if (first) {
      L = key.digits.size();
      first = false;
    } else if (key.digits.size() != L) {
      throw std::invalid_argument("assemble: residue keys of different lengths");
    }
    for (unsigned d : key.digits)
      if (d >= p.value()) throw std::invalid_argument("assemble: residue digit out of range");
    const Nat scale = power(p, static_cast<unsigned>(L));
    const Nat low = key.value(p);
    for (Nat x : sub.coins()) coins.push_back(low + scale * x);
  }
  return Position(std::move(coins));
}

/// Position of the p-core: runner r keeps its bead count but packs the beads
/// at the bottom.
inline Position p_core(const Position& X, Base p) {
  std::vector<Nat> count(p.value(), 0);
  for (Nat x : X.coins()) ++count[x % p.value()];
  std::vector<Nat> coins;
  coins.reserve(X.size());
  for (Nat r = 0; r < p.value(); ++r)
    for (Nat j = 0; j < count[r]; ++j) coins.push_back(r + p.value() * j);
  return Position(std::move(coins));
}

inline Tower tower(const Position& X, Base p) {
  std::vector<Nat> g;
  const Nat top = X.max_coin();
  Nat scale = 1;
  for (unsigned L = 0;; ++L) {
    if (scale > top) break;  // every quotient is 0 and residues are distinct
    g.push_back(hook_count(X, L, p));
    if (scale > top / p.value()) break;
    scale *= p.value();
  }
  g.push_back(0);
  Tower t;
  t.rows.resize(g.size() - 1);
  for (std::size_t L = 0; L + 1 < g.size(); ++L) t.rows[L] = g[L] - p.value() * g[L + 1];
  while (!t.rows.empty() && t.rows.back() == 0) t.rows.pop_back();
  return t;
}

// --- shifts and congruence ------------------------------------------------------

/// {0, ..., n-1} together with every coin moved up by n; same diagram.
inline Position shift(const Position& X, Nat n) {
  std::vector<Nat> coins;
  coins.reserve(X.size() + n);
  for (Nat i = 0; i < n; ++i) coins.push_back(i);
  for (Nat x : X.coins()) coins.push_back(x + n);
  return Position(std::move(coins));
}

/// (Y, n) with X = shift(Y, n) and n maximal.
inline std::pair<Position, Nat> reduce(const Position& X) {
  const auto& c = X.coins();
  Nat n = 0;
  while (n < c.size() && c[n] == n) ++n;
  std::vector<Nat> rest;
  for (std::size_t i = n; i < c.size(); ++i) rest.push_back(c[i] - n);
  return {Position(std::move(rest)), n};
}

/// X = Y mod p^N: equal class sizes for every R in Z_p^N.
inline bool congruent(const Position& X, const Position& Y, unsigned N, Base p) {
  if (X.size() != Y.size()) return false;
  return class_sizes(X, N, p) == class_sizes(Y, N, p);
}

}  // namespace welter
