// SG table export: one record per position with the oracle value next to the
// closed form. CSV header: coins,p,k,variant,sg_oracle,sg_closed.

#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "welter/enumerate.hpp"
#include "welter/oracle.hpp"

namespace welter {

enum class TableFormat { csv, jsonl };

/// Closed form for the variant: the tower value for Welter's game, the
/// carry-free coin sum for Nim.
inline Nat closed_form(Variant v, const std::vector<Nat>& coins, Base p) {
  if (v == Variant::welter) return sg_tower(Position(coins), p).value;
  Nat s = 0;
  for (Nat x : coins) s = oplus(s, x, p);
  return s;
}

/// Writes every m-coin position with coins < bound in lexicographic order.
/// Returns the number of records.
inline Nat write_table(std::ostream& os, const GameRules& rules, std::size_t m, Nat bound, TableFormat format) {
  if (format == TableFormat::csv) os << "coins,p,k,variant,sg_oracle,sg_closed\n";
  SgOracle oracle(rules, bound);
  Nat rows = 0;
  auto emit = [&](const std::vector<Nat>& coins) {
    const Nat o = oracle.value(coins);
    const Nat c = closed_form(rules.variant, coins, rules.p);
    if (format == TableFormat::csv) {
      std::string field;
      for (std::size_t i = 0; i < coins.size(); ++i) field += (i ? " " : "") + std::to_string(coins[i]);
      os << field << ',' << rules.p.value() << ',' << rules.k << ',' << to_string(rules.variant) << ',' << o << ','
         << c << '\n';
    } else {
      nlohmann::json j{{"coins", coins}, {"p", rules.p.value()}, {"k", rules.k},
                       {"variant", to_string(rules.variant)}, {"sg_oracle", o}, {"sg_closed", c}};
      os << j.dump() << '\n';
    }
    ++rows;
  };
  if (rules.variant == Variant::welter)
    for_each_position(m, bound, [&](const Position& X) { emit(X.coins()); });
  else
    for_each_multiset(m, bound, emit);
  return rows;
}

}  // namespace welter
