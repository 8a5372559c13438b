// Exhaustive sweeps over small diagrams for the p^H-option lemmas and for msg.

#pragma once

#include <string>

#include "welter/enumerate.hpp"
#include "welter/grundy.hpp"
#include "welter/report.hpp"
#include "welter/saturation.hpp"

namespace welter {

inline std::vector<Nat> digits_of(Nat x, Base p) {
  std::vector<Nat> d;
  for (; x; x /= p.value()) d.push_back(x % p.value());
  return d;
}

/// Some descendant Y (same coin count) has order K, raises T_K to a value in
/// (T(X)_K, p) or to exactly p, keeps T_{>=K+1}, and satisfies (P0).
inline std::optional<Position> four_property_descendant(const Position& X, unsigned K, Base p) {
  const Tower tx = tower(X, p);
  for (const auto& mu : sub_partitions(partition_of(X))) {
    const Position Y = position_of(mu, X.size());
    const Tower ty = tower(Y, p);
    const Order o = ord_position(ty);
    if (o.is_infinite() || o.value() != K) continue;
    const bool raised = (tx[K] < ty[K] && ty[K] < p.value()) || ty[K] == p.value();
    if (!raised || !(ty.from(K + 1) == tx.from(K + 1))) continue;
    if (satisfies_P0(Y, p)) return Y;
  }
  return std::nullopt;
}

/// Sweeps every position realising a diagram of size <= max_size (coin counts
/// from the number of parts up to p more) through the p^H-option lemmas.
inline Report verify_lemmas(Base p, Nat max_size) {
  Report r{"lemmas", "p=" + std::to_string(p.value()) + " size=" + std::to_string(max_size)};
  for (const Position& X : positions_up_to_size(max_size, p.value())) {
    const std::string id = to_string(X);
    const Tower tx = tower(X, p);
    const Nat n = partition_of(X).size();
    const Order ord = ord_position(tx);

    r.expect(!top_digit_less(digits_of(n, p), tx.rows), id + ": tower exceeds digits of |lambda|");
    if (ord.is_infinite()) {
      r.expect(p_star_options(X, p).empty() && peak_digit(X, p) == -1, id + ": terminal position misclassified");
      continue;
    }
    const unsigned M = ord.value();
    const auto stars = p_star_options(X, p);
    r.expect(!stars.empty(), id + ": no p*-option");

    const bool p0 = satisfies_P0(X, p);
    if (p0) r.expect(!p_zero_options(X, p).empty(), id + ": (P0) holds but no p^0-option");
    {
      const Nat mod = power(p, M);
      const Nat shift0 = (mod - X.size() % mod) % mod;
      r.expect(satisfies_P0_with_shift(X, p, shift0) == satisfies_P0_with_shift(X, p, shift0 + mod),
               id + ": (P0) depends on the shift");
    }
    if (M == 0) r.expect(p0, id + ": order 0 without (P0)");

    const int pk = peak_digit(X, p);
    if (pk > -1) r.expect(pk > static_cast<int>(M), id + ": peak digit not above the order");
    const unsigned N = static_cast<unsigned>(std::max(pk, static_cast<int>(M)) + 1);
    for (const auto& Y : stars) {
      r.expect(tower(Y, p).from(N) == tx.from(N), id + " -> " + to_string(Y) + ": tower changed above the peak");
      r.expect(peak_digit(Y, p) <= pk, id + " -> " + to_string(Y) + ": peak digit increased");
    }

    if (pk > 0) {
      r.expect(four_property_descendant(X, static_cast<unsigned>(pk), p).has_value(),
               id + ": no four-property descendant at the peak digit");
    }

    bool tail_reduced = true;
    for (std::size_t L = M + 1; L < tx.size(); ++L) tail_reduced = tail_reduced && tx[L] < p.value();
    if (tx[M] == p.value() && tail_reduced && p0) {
      bool found = false;
      for (const auto& Y : p_zero_options(X, p)) found = found || sg_tower(Y, p).value + 1 == n;
      r.expect(found, id + ": no p^0-option of value |lambda| - 1");
    }

    for (unsigned target = 0; target <= tx.size() + 1; ++target) {
      const auto path = rounded_descendant(X, target, p).path;
      const Order end = ord_position(path.back(), p);
      r.expect(end.is_infinite() || end.value() >= target, id + ": rounded descendant below target order");
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        r.expect(ord_position(path[i], p).value() < target, id + ": rounded path reached the order too early");
      if (path.size() >= 2) {
        const unsigned last = ord_position(path[path.size() - 2], p).value();
        const unsigned from = static_cast<unsigned>(std::max(pk, static_cast<int>(last)) + 1);
        for (const auto& Z : path)
          r.expect(tower(Z, p).from(from) == tx.from(from), id + ": tower drifted along a p*-path");
      }
    }
  }
  return r;
}

/// sg <= msg <= |lambda|, the lower bound from a large tower row, and shift
/// invariance of msg.
inline Report verify_msg(Base p, Nat max_size) {
  Report r{"msg", "p=" + std::to_string(p.value()) + " size=" + std::to_string(max_size)};
  for (const Position& X : positions_up_to_size(max_size, 1)) {
    const std::string id = to_string(X);
    const Nat sg = sg_tower(X, p).value;
    const Nat msg = msg_bruteforce(X, p);
    const Nat n = partition_of(X).size();
    r.expect(sg <= msg && msg <= n, id + ": msg " + std::to_string(msg) + " outside [sg, |lambda|]");
    if (const auto lb = msg_lower_bound(X, p)) r.expect(*lb <= msg, id + ": msg below the tower-row bound");
    if (const auto lb = msg_lower_bound(X, p, false)) r.expect(*lb <= msg, id + ": msg below the tower-row bound");
    r.expect(msg_bruteforce(shift(X, 1), p) == msg, id + ": msg changes under shift");
  }
  if (p.value() == 3) {
    r.expect(msg_bruteforce(Position{3, 7}, p) == 8, "msg({3,7}) != 8");
    r.expect(msg_bruteforce(Position{3, 4, 5}, p) == 6, "msg({3,4,5}) != 6");
  }
  return r;
}

}  // namespace welter
