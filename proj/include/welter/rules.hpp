// Move rules of Welter's game and Nim with p-index k.
//
// In the tuple representation a move X -> Y is legal iff
//   1. 0 < dist(X, Y) < k            (Hamming distance)
//   2. y^i <= x^i for every i
//   3. ord(sum_i (x^i - y^i)) = min_i ord(x^i - y^i)
// and, for Welter's game, Y again has distinct entries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "welter/board.hpp"
#include "welter/padic.hpp"

namespace welter {

enum class Variant { welter, nim };

inline std::string to_string(Variant v) { return v == Variant::welter ? "welter" : "nim"; }

struct GameRules {
  Base p;
  unsigned k;
  Variant variant = Variant::welter;

  GameRules(Base p_, unsigned k_, Variant v = Variant::welter) : p(p_), k(k_), variant(v) {
    if (k_ < 1) throw std::invalid_argument("index k must be at least 1");
  }
};

/// Which rule a candidate move breaks. The numbering of the first three
/// follows the list above; `occupied` is the distinctness rule of Welter's game.
enum class MoveCheck { legal = 0, distance = 1, increase = 2, order = 3, occupied = 4 };

inline std::string describe(MoveCheck c) {
  switch (c) {
    case MoveCheck::legal: return "legal";
    case MoveCheck::distance: return "number of moved coins must be between 1 and k-1";
    case MoveCheck::increase: return "coins may only move to lower squares";
    case MoveCheck::order: return "p-adic order of the total decrease must equal the least order of the individual decreases";
    case MoveCheck::occupied: return "two coins may not share a square";
  }
  return "unknown";
}

/// True iff the decreases satisfy rule 3 (zero entries are ignored).
inline bool order_condition(std::span<const Nat> decreases, Base p) {
  Nat total = 0;
  Order least = Order::infinite();
  for (Nat d : decreases) {
    if (d == 0) continue;
    total += d;
    least = std::min(least, ordp(d, p));
  }
  return ordp(total, p) == least;
}

inline MoveCheck check_move(const GameRules& rules, std::span<const Nat> X, std::span<const Nat> Y) {
  if (X.size() != Y.size()) throw std::invalid_argument("positions have different numbers of coins");
  std::size_t dist = 0;
  bool increases = false;
  std::vector<Nat> dec;
  dec.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i] != Y[i]) ++dist;
    if (Y[i] > X[i]) increases = true;
    dec.push_back(Y[i] <= X[i] ? X[i] - Y[i] : 0);
  }
  if (dist == 0 || dist >= rules.k) return MoveCheck::distance;
  if (increases) return MoveCheck::increase;
  if (!order_condition(dec, rules.p)) return MoveCheck::order;
  if (rules.variant == Variant::welter) {
    std::vector<Nat> s(Y.begin(), Y.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return MoveCheck::occupied;
  }
  return MoveCheck::legal;
}

inline bool is_legal(const GameRules& rules, std::span<const Nat> X, std::span<const Nat> Y) {
  return check_move(rules, X, Y) == MoveCheck::legal;
}

namespace detail {

// Enumerates moves that change exactly the coins at `chosen` (indices into X).
template <class F>
void moves_on_subset(const GameRules& rules, const std::vector<Nat>& X, const std::vector<std::size_t>& chosen,
                     F&& emit) {
  std::vector<Nat> Y = X;
  std::vector<Nat> dec(chosen.size());
  std::vector<char> moved(X.size(), 0);
  for (std::size_t i : chosen) moved[i] = 1;
  const bool welter = rules.variant == Variant::welter;

  auto occupied = [&](Nat v, std::size_t upto) {
    // Unmoved coins plus moved coins already placed.
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!moved[i] && X[i] == v) return true;
    for (std::size_t j = 0; j < upto; ++j)
      if (Y[chosen[j]] == v) return true;
    return false;
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == chosen.size()) {
      if (order_condition(dec, rules.p)) emit(Y);
      return;
    }
    const std::size_t i = chosen[j];
    for (Nat t = X[i]; t-- > 0;) {
      if (welter && occupied(t, j)) continue;
      Y[i] = t;
      dec[j] = X[i] - t;
      self(self, j + 1);
    }
    Y[i] = X[i];
  };
  rec(rec, 0);
}

}  // namespace detail

/// Every Y (as a sorted coin list) reachable in one move, grouped by number of
/// moved coins and lexicographic within a group.
inline std::vector<std::vector<Nat>> legal_moves(const GameRules& rules, const std::vector<Nat>& sortedX) {
  std::vector<std::vector<Nat>> out;
  std::set<std::vector<Nat>> seen;
  const std::size_t m = sortedX.size();
  const std::size_t max_moved = std::min<std::size_t>(m, rules.k == 0 ? 0 : rules.k - 1);
  for (std::size_t count = 1; count <= max_moved; ++count) {
    std::set<std::vector<Nat>> group;
    std::vector<std::size_t> chosen(count);
    for (std::size_t i = 0; i < count; ++i) chosen[i] = i;
    for (;;) {
      bool skip = false;
      if (rules.variant == Variant::nim) {
        // For repeated values only the first copies need to be chosen.
        for (std::size_t j = 0; j < count && !skip; ++j) {
          const std::size_t i = chosen[j];
          if (i > 0 && sortedX[i - 1] == sortedX[i] && (j == 0 || chosen[j - 1] != i - 1)) skip = true;
        }
      }
      if (!skip) {
        detail::moves_on_subset(rules, sortedX, chosen, [&](const std::vector<Nat>& Y) {
          std::vector<Nat> s = Y;
          std::sort(s.begin(), s.end());
          if (!seen.contains(s)) group.insert(std::move(s));
        });
      }
      std::size_t j = count;
      while (j > 0 && chosen[j - 1] == m - count + (j - 1)) --j;
      if (j == 0) break;
      ++chosen[j - 1];
      for (std::size_t t = j; t < count; ++t) chosen[t] = chosen[t - 1] + 1;
    }
    for (const auto& Y : group) {
      seen.insert(Y);
      out.push_back(Y);
    }
  }
  return out;
}

inline std::vector<Position> legal_moves(const GameRules& rules, const Position& X) {
  std::vector<Position> out;
  for (auto& c : legal_moves(rules, X.coins())) out.emplace_back(std::move(c));
  return out;
}

/// Whether the set Y is reachable from the set X in one move under some
/// assignment of old coins to new squares.
inline bool is_option(const GameRules& rules, const std::vector<Nat>& X, const std::vector<Nat>& Y) {
  if (X.size() != Y.size()) return false;
  const std::size_t m = X.size();
  std::vector<char> used(m, 0);
  std::vector<Nat> assigned(m);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return is_legal(rules, X, assigned);
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || Y[j] > X[i]) continue;
      if (j > 0 && Y[j] == Y[j - 1] && !used[j - 1]) continue;
      used[j] = 1;
      assigned[i] = Y[j];
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool is_option(const GameRules& rules, const Position& X, const Position& Y) {
  return is_option(rules, X.coins(), Y.coins());
}

}  // namespace welter
