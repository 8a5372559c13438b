// Exhaustive generators used by the verification sweeps.

#pragma once

#include <functional>
#include <vector>

#include "welter/board.hpp"

namespace welter {

/// All partitions of n, parts descending, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(Nat n) {
  std::vector<Partition> out;
  std::vector<Nat> cur;
  std::function<void(Nat, Nat)> rec = [&](Nat rest, Nat cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Nat v = std::min(rest, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Every mu contained in lam (including the empty partition and lam itself).
inline std::vector<Partition> sub_partitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<Nat> cur;
  std::function<void(std::size_t, Nat)> rec = [&](std::size_t i, Nat cap) {
    if (i == lam.length() || cap == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Nat v = std::min(cap, lam[i]) + 1; v-- > 0;) {
      if (v == 0) {
        out.emplace_back(cur);
        continue;
      }
      cur.push_back(v);
      rec(i + 1, v);
      cur.pop_back();
    }
  };
  rec(0, lam.empty() ? 0 : lam[0]);
  return out;
}

/// Sub-partitions of lam with exactly `size` cells.
inline std::vector<Partition> sub_partitions_of_size(const Partition& lam, Nat size) {
  std::vector<Partition> out;
  for (auto& mu : sub_partitions(lam))
    if (mu.size() == size) out.push_back(std::move(mu));
  return out;
}

/// Calls f on every m-coin Welter position with all coins < bound, in
/// lexicographic order of the ascending coin list.
template <class F>
void for_each_position(std::size_t m, Nat bound, F&& f) {
  if (m > bound) return;
  std::vector<Nat> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = i;
  for (;;) {
    f(Position(c));
    std::size_t i = m;
    while (i > 0 && c[i - 1] == bound - m + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < m; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Calls f on every sorted m-tuple (multiset) with entries < bound.
template <class F>
void for_each_multiset(std::size_t m, Nat bound, F&& f) {
  if (bound == 0) {
    if (m == 0) f(std::vector<Nat>{});
    return;
  }
  std::vector<Nat> c(m, 0);
  for (;;) {
    f(static_cast<const std::vector<Nat>&>(c));
    std::size_t i = m;
    while (i > 0 && c[i - 1] == bound - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < m; ++j) c[j] = c[i - 1];
  }
}

/// Positions realising every partition of size <= max_size with between
/// length(lam) and length(lam) + extra coins. Covers each residue of the
/// shift amount when extra >= p - 1.
inline std::vector<Position> positions_up_to_size(Nat max_size, std::size_t extra) {
  std::vector<Position> out;
  for (Nat n = 0; n <= max_size; ++n)
    for (const auto& lam : partitions_of(n))
      for (std::size_t m = std::max<std::size_t>(lam.length(), 1); m <= lam.length() + extra; ++m)
        out.push_back(position_of(lam, m));
  return out;
}

}  // namespace welter
