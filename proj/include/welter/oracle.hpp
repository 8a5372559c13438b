// Memoized mex oracle over the explicit game graph, and the sweeps that
// compare it with the closed forms.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "welter/enumerate.hpp"
#include "welter/grundy.hpp"
#include "welter/report.hpp"
#include "welter/rules.hpp"

namespace welter {

struct CoinsHash {
  std::size_t operator()(const std::vector<Nat>& v) const noexcept {
    std::size_t h = v.size();
    for (Nat x : v) h ^= std::hash<Nat>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Grundy values by definition: mex over options, memoized on the sorted coin
/// list. Positions with a coin >= bound are refused rather than truncated.
class SgOracle {
public:
  SgOracle(GameRules rules, Nat bound) : rules_(rules), bound_(bound) {}

  const GameRules& rules() const noexcept { return rules_; }
  Nat bound() const noexcept { return bound_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

  Nat operator()(const Position& X) { return value(X.coins()); }

  Nat value(std::vector<Nat> coins) {
    std::sort(coins.begin(), coins.end());
    for (Nat x : coins)
      if (x >= bound_)
        throw std::out_of_range("coin " + std::to_string(x) + " exceeds oracle bound " + std::to_string(bound_));
    return lookup(coins);
  }

private:
  Nat lookup(const std::vector<Nat>& coins) {
    if (auto it = memo_.find(coins); it != memo_.end()) return it->second;
    std::vector<char> seen;
    for (const auto& Y : legal_moves(rules_, coins)) {
      const Nat v = lookup(Y);
      if (v >= seen.size()) seen.resize(v + 1, 0);
      seen[v] = 1;
    }
    Nat mex = 0;
    while (mex < seen.size() && seen[mex]) ++mex;
    memo_.emplace(coins, mex);
    return mex;
  }

  GameRules rules_;
  Nat bound_;
  std::unordered_map<std::vector<Nat>, Nat, CoinsHash> memo_;
};

/// Oracle on W^m_{p,m+1} against sg_tower for every m-coin position below bound.
inline Report verify_saturation(Base p, std::size_t m, Nat bound) {
  Report r{"theorem11", "p=" + std::to_string(p.value()) + " m=" + std::to_string(m) + " bound=" + std::to_string(bound)};
  SgOracle oracle(GameRules(p, static_cast<unsigned>(m + 1)), bound);
  for_each_position(m, bound, [&](const Position& X) {
    const Nat o = oracle(X);
    const Nat c = sg_tower(X, p).value;
    r.expect(o == c, to_string(X) + ": oracle " + std::to_string(o) + " != closed form " + std::to_string(c));
  });
  return r;
}

/// Oracle on N^m_{p,k} against the carry-free sum of the coins.
inline Report nim_check(Base p, std::size_t m, unsigned k, Nat bound) {
  Report r{"nim", "p=" + std::to_string(p.value()) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                      " bound=" + std::to_string(bound)};
  SgOracle oracle(GameRules(p, k, Variant::nim), bound);
  for_each_multiset(m, bound, [&](const std::vector<Nat>& X) {
    Nat expect = 0;
    for (Nat x : X) expect = oplus(expect, x, p);
    const Nat o = oracle.value(X);
    r.expect(o == expect, to_string(X, '(', ')') + ": oracle " + std::to_string(o) + " != " + std::to_string(expect));
  });
  return r;
}

/// (p, ..., p, 0, ..., 0) with k - 1 copies of p, k = min(p, m + 1): no option
/// in N^m_{p,k-1} has carry-free sum 0.
inline bool nim_witness_holds(Base p, std::size_t m) {
  if (m == 0) return true;
  const unsigned k = static_cast<unsigned>(std::min<Nat>(p.value(), m + 1));
  std::vector<Nat> X(m, 0);
  for (unsigned i = 0; i + 1 < k; ++i) X[i] = p.value();
  std::sort(X.begin(), X.end());
  for (const auto& Y : legal_moves(GameRules(p, k - 1, Variant::nim), X)) {
    Nat s = 0;
    for (Nat y : Y) s = oplus(s, y, p);
    if (s == 0) return false;
  }
  return true;
}

/// shift({p, ..., p+k-2}, m-k+1), k = min(p, m + 1).
inline Position welter_witness(Base p, std::size_t m) {
  const Nat k = std::min<Nat>(p.value(), m + 1);
  std::vector<Nat> base;
  for (Nat i = 0; i + 1 < k; ++i) base.push_back(p.value() + i);
  return shift(Position(std::move(base)), m - (k - 1));
}

/// The witness has value p(k-1) but no option of value 0 in W^m_{p,k-1}.
inline bool welter_witness_holds(Base p, std::size_t m) {
  if (m == 0) return true;
  const unsigned k = static_cast<unsigned>(std::min<Nat>(p.value(), m + 1));
  const Position X = welter_witness(p, m);
  if (sg_tower(X, p).value != p.value() * (k - 1)) return false;
  for (const auto& Y : legal_moves(GameRules(p, k - 1), X))
    if (sg_tower(Y, p).value == 0) return false;
  return true;
}

struct SaturationScan {
  unsigned lower = 0;             // smallest k consistent with k = m+1 inside the bound
  unsigned consistent_upper = 0;  // m + 1
  unsigned witness_lower = 0;     // min(p, m + 1), certified by the witnesses below
  bool nim_witness = false;
  bool welter_witness = false;
  Nat positions = 0;
};

/// Bounded-region evidence for the saturation index. Agreement inside the
/// bound is consistency, not proof; disagreement refutes k.
inline SaturationScan empirical_sat_index(Base p, std::size_t m, Nat bound) {
  SaturationScan s;
  const unsigned top = static_cast<unsigned>(m + 1);
  s.consistent_upper = top;
  s.witness_lower = static_cast<unsigned>(std::min<Nat>(p.value(), m + 1));
  s.nim_witness = nim_witness_holds(p, m);
  s.welter_witness = welter_witness_holds(p, m);

  std::vector<Position> region;
  for_each_position(m, bound, [&](const Position& X) { region.push_back(X); });
  s.positions = region.size();

  auto table = [&](unsigned k) {
    SgOracle o(GameRules(p, k), bound);
    std::vector<Nat> v;
    v.reserve(region.size());
    for (const auto& X : region) v.push_back(o(X));
    return v;
  };
  const auto reference = table(top);
  s.lower = top;
  for (unsigned k = top; k-- > 1;) {
    if (table(k) != reference) break;
    s.lower = k;
  }
  return s;
}

}  // namespace welter
