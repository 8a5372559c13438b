// Executable forms of the p^H-option machinery: position order, p^H- and
// p^*-options, peak digits, the residue-imbalance condition (P0), rounded
// descendants and the hook-count change of a single-coin move.

#pragma once

#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "welter/board.hpp"
#include "welter/padic.hpp"

namespace welter {

/// Least L with T_L != 0; infinite for a terminal position.
inline Order ord_position(const Tower& t) {
  for (std::size_t L = 0; L < t.size(); ++L)
    if (t.rows[L] != 0) return Order::finite(static_cast<unsigned>(L));
  return Order::infinite();
}

inline Order ord_position(const Position& X, Base p) { return ord_position(tower(X, p)); }

struct OptionKind {
  unsigned H;
  bool is_star;
  bool operator==(const OptionKind&) const = default;
};

/// Y = X with one coin x replaced by x - p^H. Returns (x, H) or nothing.
inline std::optional<std::pair<Nat, unsigned>> power_step(const Position& X, const Position& Y, Base p) {
  if (X.size() != Y.size()) return std::nullopt;
  std::vector<Nat> gone, added;
  std::set_difference(X.coins().begin(), X.coins().end(), Y.coins().begin(), Y.coins().end(),
                      std::back_inserter(gone));
  std::set_difference(Y.coins().begin(), Y.coins().end(), X.coins().begin(), X.coins().end(),
                      std::back_inserter(added));
  if (gone.size() != 1 || added.size() != 1 || added[0] >= gone[0]) return std::nullopt;
  Nat d = gone[0] - added[0];
  unsigned H = 0;
  while (d % p.value() == 0) {
    d /= p.value();
    ++H;
  }
  if (d != 1) return std::nullopt;
  return std::make_pair(gone[0], H);
}

namespace detail {

inline std::optional<OptionKind> classify_option(const Tower& tx, const Tower& ty, Order ordX, unsigned H, Base p) {
  if (ordX.is_infinite()) return std::nullopt;
  const unsigned M = ordX.value();
  for (unsigned L = H; L <= M; ++L) {
    const Nat want = (tx[L] + p.value() - 1) % p.value();
    if (ty[L] % p.value() != want) return std::nullopt;
  }
  if (top_digit_less(ty.from(M + 1).rows, tx.from(M + 1).rows)) return std::nullopt;
  return OptionKind{H, H == M};
}

}  // namespace detail

/// Classifies Y as a p^H-option of X (digits H..M of the tower drop by one mod
/// p and the part above M does not decrease), or nothing.
inline std::optional<OptionKind> is_pH_option(const Position& X, const Position& Y, Base p) {
  const auto step = power_step(X, Y, p);
  if (!step) return std::nullopt;
  const Tower tx = tower(X, p);
  return detail::classify_option(tx, tower(Y, p), ord_position(tx), step->second, p);
}

/// Options obtained by moving one coin down by p^H that qualify as p^H-options.
inline std::vector<Position> pH_options(const Position& X, unsigned H, Base p) {
  std::vector<Position> out;
  const Tower tx = tower(X, p);
  const Order M = ord_position(tx);
  if (M.is_infinite()) return out;
  const Nat step = power(p, H);
  for (Nat x : X.coins()) {
    if (x < step || X.contains(x - step)) continue;
    Position Y = X.moved(x, x - step);
    if (detail::classify_option(tx, tower(Y, p), M, H, p)) out.push_back(std::move(Y));
  }
  return out;
}

inline std::vector<Position> p_star_options(const Position& X, Base p) {
  const Order M = ord_position(X, p);
  if (M.is_infinite()) return {};
  return pH_options(X, M.value(), p);
}

inline std::vector<Position> p_zero_options(const Position& X, Base p) { return pH_options(X, 0, p); }

inline constexpr Nat kDefaultPeakCap = 24;

/// Highest tower index that some p^*-descendant raises, or -1.
inline int peak_digit(const Position& X, Base p, Nat cap = kDefaultPeakCap) {
  const Nat size = partition_of(X).size();
  if (size > cap)
    throw std::length_error("peak digit: |lambda| = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  const Tower root = tower(X, p);
  int best = -1;
  std::set<Position> visited{X};
  std::deque<Position> queue{X};
  while (!queue.empty()) {
    const Position cur = std::move(queue.front());
    queue.pop_front();
    for (auto& Y : p_star_options(cur, p)) {
      if (!visited.insert(Y).second) continue;
      const Tower ty = tower(Y, p);
      if (top_digit_less(root.rows, ty.rows)) best = std::max(best, top_difference(root.rows, ty.rows));
      queue.push_back(std::move(Y));
    }
  }
  return best;
}

/// (P0) evaluated after shifting by n; n must make the coin count a multiple
/// of p^M.
inline bool satisfies_P0_with_shift(const Position& X, Base p, Nat n) {
  const Order ord = ord_position(X, p);
  if (ord.is_infinite()) return false;
  const unsigned M = ord.value();
  if ((X.size() + n) % power(p, M) != 0) throw std::invalid_argument("(P0): shift does not align the coin count");
  const auto runners = decompose(shift(X, n), 1, p);
  std::vector<Position> by_residue;
  for (const auto& [key, sub] : runners) by_residue.push_back(sub);
  const Nat q = p.value();
  for (Nat s = 0; s < q; ++s)
    if (!congruent(by_residue[(s + q - 1) % q], by_residue[s], M, p)) return true;
  return false;
}

/// Some runner of X (shifted so that |X| = 0 mod p^M) is not congruent mod p^M
/// to its predecessor.
inline bool satisfies_P0(const Position& X, Base p) {
  const Order ord = ord_position(X, p);
  if (ord.is_infinite()) return false;
  const Nat mod = power(p, ord.value());
  const Nat n = (mod - X.size() % mod) % mod;
  return satisfies_P0_with_shift(X, p, n);
}

struct RoundedPath {
  std::vector<Position> path;  // path.front() = X, path.back() = result
  const Position& end() const { return path.back(); }
};

/// Follows the first p^*-option until the order reaches at least N.
inline RoundedPath rounded_descendant(const Position& X, unsigned N, Base p, std::size_t max_steps = 10000) {
  RoundedPath r{{X}};
  for (;;) {
    const Order ord = ord_position(r.end(), p);
    if (ord.is_infinite() || ord.value() >= N) return r;
    if (r.path.size() > max_steps) throw std::length_error("rounded descendant: path cap exceeded");
    auto opts = p_star_options(r.end(), p);
    if (opts.empty()) throw std::logic_error("non-terminal position without a p*-option: " + to_string(r.end()));
    r.path.push_back(std::move(opts.front()));
  }
}

/// g_L(Y) - g_L(X) for Y = X with coin x moved to x - p^H, by the closed case
/// split (L <= H: -p^{H-L}; otherwise a class-size difference).
inline std::int64_t hook_delta(const Position& X, Nat x, unsigned H, unsigned L, Base p) {
  const Nat step = power(p, H);
  if (!X.contains(x) || x < step || X.contains(x - step))
    throw std::invalid_argument("hook_delta: coin " + std::to_string(x) + " cannot move down by " + std::to_string(step));
  if (L <= H) return -static_cast<std::int64_t>(power(p, H - L));
  const auto sizes = class_sizes(X, L, p);
  const Nat mod = power(p, L);
  auto size_of = [&](Nat r) -> std::int64_t {
    auto it = sizes.find(r);
    return it == sizes.end() ? 0 : static_cast<std::int64_t>(it->second);
  };
  std::int64_t zeros = 1;
  for (unsigned j = H; j < L; ++j)
    if (digit(x, j, p) != 0) zeros = 0;
  return size_of(x % mod) - size_of((x - step) % mod) - zeros - 1;
}

}  // namespace welter
