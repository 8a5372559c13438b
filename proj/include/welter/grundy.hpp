// Closed forms for the Sprague-Grundy value of the p-saturation of Welter's
// game, winning-move search, and the maximum "prime-to-p" Grundy value below
// a position (msg).
//
// Three equal expressions are provided:
//   sg_tower : sum_L (T_L mod p) p^L
//   sg_coins : (+)_i x^i  (-)  (+)_{i<j} N(x^i - x^j)
//   sg_hooks : (+)_{cells} N(hook length)
// with N(x) = x (-) (x - 1) and (+), (-) the carry-free operations.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "welter/board.hpp"
#include "welter/enumerate.hpp"
#include "welter/padic.hpp"
#include "welter/rules.hpp"

namespace welter {

struct SgValue {
  Nat value;
  DigitSeq digits;

  SgValue(Nat v, Base p) : value(v), digits(DigitSeq::from_value(v, p)) {}
  bool operator==(const SgValue& o) const { return value == o.value; }
};

inline SgValue sg_tower(const Position& X, Base p) {
  const Tower t = tower(X, p);
  Nat v = 0;
  for (std::size_t L = t.size(); L-- > 0;) v = v * p.value() + t.rows[L] % p.value();
  return SgValue(v, p);
}

inline SgValue sg_coins(const Position& X, Base p) {
  const auto& c = X.coins();
  Nat sum = 0, pairs = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    sum = oplus(sum, c[i], p);
    for (std::size_t j = 0; j < i; ++j) pairs = oplus(pairs, borrow_mask(c[i] - c[j], p), p);
  }
  return SgValue(ominus(sum, pairs, p), p);
}

inline SgValue sg_hooks(const Position& X, Base p) {
  Nat v = 0;
  for (Nat h : hook_lengths(partition_of(X))) v = oplus(v, borrow_mask(h, p), p);
  return SgValue(v, p);
}

/// Welter's classical binary formula.
inline SgValue sg_welter2(const Position& X) {
  const Base two(2);
  const auto& c = X.coins();
  Nat v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    v ^= c[i];
    for (std::size_t j = 0; j < i; ++j) v ^= borrow_mask(c[i] - c[j], two);
  }
  return SgValue(v, two);
}

struct MoveSearch {
  std::vector<Position> options;
  std::string warning;  // set when no option can exist
};

/// Options Y of X in W^m_{p,k} with sg_tower(Y) = h. Single-coin moves come
/// first, then moves of increasing numbers of coins.
inline MoveSearch winning_moves(const Position& X, Base p, unsigned k, Nat h, bool first_only = false) {
  MoveSearch out;
  const Nat here = sg_tower(X, p).value;
  if (h >= here) {
    out.warning = "no option has value " + std::to_string(h) + ": position value is " + std::to_string(here);
    return out;
  }
  const GameRules rules(p, k, Variant::welter);
  for (auto& Y : legal_moves(rules, X)) {
    if (sg_tower(Y, p).value != h) continue;
    out.options.push_back(std::move(Y));
    if (first_only) break;
  }
  return out;
}

inline constexpr Nat kDefaultMsgCap = 16;

/// Largest sg(Y) over descendants Y (lambda(Y) inside lambda(X), same number
/// of coins) with sg(Y) = |lambda(Y)|.
inline Nat msg_bruteforce(const Position& X, Base p, Nat cap = kDefaultMsgCap) {
  const Partition lam = partition_of(X);
  if (lam.size() > cap)
    throw std::length_error("msg: |lambda| = " + std::to_string(lam.size()) + " exceeds cap " + std::to_string(cap));
  Nat best = 0;
  for (const auto& mu : sub_partitions(lam)) {
    const Nat n = mu.size();
    if (n <= best) continue;
    if (sg_tower(position_of(mu, X.size()), p).value == n) best = n;
  }
  return best;
}

/// Lower bound (p-1, ..., p-1, Tbar_{N+1}, Tbar_{N+2}, ...) with N+1 leading
/// digits p-1, for an index N with T_N >= p + 1. By default the largest such N
/// is used; `largest = false` selects the smallest.
inline std::optional<Nat> msg_lower_bound(const Position& X, Base p, bool largest = true) {
  const Tower t = tower(X, p);
  std::optional<std::size_t> chosen;
  for (std::size_t L = 0; L < t.size(); ++L) {
    if (t.rows[L] >= p.value() + 1) {
      chosen = L;
      if (!largest) break;
    }
  }
  if (!chosen) return std::nullopt;
  const std::size_t N = *chosen;
  Nat v = 0;
  for (std::size_t L = t.size(); L-- > N + 1;) v = v * p.value() + t.rows[L] % p.value();
  const Nat scale = power(p, static_cast<unsigned>(N + 1));
  return v * scale + (scale - 1);
}

}  // namespace welter
