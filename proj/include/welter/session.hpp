// Play sessions against perfect play and the JSON API served by `welter serve`.
//
// Routes (all bodies carry "v": 1):
//   POST /api/session        {p, k?, coins, engine_first?}   -> {id, state}
//   GET  /api/session/{id}                                   -> {state}
//   POST /api/move           {id, moves: [[from, to], ...]}  -> {state, engine_move, ...}
//   GET  /api/hints?id=..&h=N                                -> {options: [[coins]...]}
// An illegal move answers 422 with the index of the violated rule.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "welter/grundy.hpp"
#include "welter/oracle.hpp"
#include "welter/rules.hpp"

namespace welter {

using json = nlohmann::json;

inline constexpr int kApiVersion = 1;

inline json to_json(const Position& X) { return X.coins(); }
inline json to_json(const Partition& lam) { return lam.parts(); }
inline json to_json(const Tower& t) { return t.rows; }

/// Grundy values for one rule set: closed form when k >= m + 1, otherwise the
/// mex oracle limited to the squares below the starting position.
class Evaluator {
public:
  Evaluator(GameRules rules, const Position& start)
      : rules_(rules), closed_form_(rules.k >= start.size() + 1), oracle_(rules, start.max_coin() + 1) {}

  bool closed_form() const noexcept { return closed_form_; }
  const GameRules& rules() const noexcept { return rules_; }

  Nat operator()(const Position& X) {
    if (closed_form_) return sg_tower(X, rules_.p).value;
    return oracle_(X);
  }

private:
  GameRules rules_;
  bool closed_form_;
  SgOracle oracle_;
};

enum class Turn { human, engine, over };

inline std::string to_string(Turn t) {
  switch (t) {
    case Turn::human: return "human";
    case Turn::engine: return "engine";
    case Turn::over: return "over";
  }
  return "?";
}

struct EngineMove {
  Position to;
  bool losing_spot = false;  // the engine had value 0 and could not force a win
};

/// Perfect reply: an option of value 0 when one exists. From a zero position
/// the engine picks the option whose own options contain the fewest zeros,
/// ties broken by the coin list (a heuristic that leaves the opponent the
/// fewest winning continuations).
inline std::optional<EngineMove> engine_reply(Evaluator& eval, const Position& X) {
  const auto options = legal_moves(eval.rules(), X);
  if (options.empty()) return std::nullopt;
  if (eval(X) > 0) {
    for (const auto& Y : options)
      if (eval(Y) == 0) return EngineMove{Y, false};
    throw std::logic_error("nonzero position without a zero option: " + to_string(X));
  }
  std::optional<std::pair<std::size_t, Position>> best;
  for (const auto& Y : options) {
    std::size_t zeros = 0;
    for (const auto& Z : legal_moves(eval.rules(), Y)) zeros += eval(Z) == 0;
    if (!best || zeros < best->first || (zeros == best->first && Y < best->second)) best.emplace(zeros, Y);
  }
  return EngineMove{best->second, true};
}

struct SessionState {
  std::string id;
  Evaluator eval;
  Position position;
  std::vector<Position> history;
  Turn turn = Turn::human;
  std::optional<std::string> winner;

  SessionState(std::string id_, GameRules rules, Position start)
      : id(std::move(id_)), eval(rules, start), position(start), history{start} {}

  const GameRules& rules() const { return eval.rules(); }

  void advance(Position next, const std::string& mover) {
    position = std::move(next);
    history.push_back(position);
    if (legal_moves(rules(), position).empty()) {
      turn = Turn::over;
      winner = mover;
    } else {
      turn = mover == "human" ? Turn::engine : Turn::human;
    }
  }

  json to_json() {
    const Nat sg = eval(position);
    const DigitSeq digits = DigitSeq::from_value(sg, rules().p);
    json hist = json::array();
    for (const auto& X : history) hist.push_back(welter::to_json(X));
    return json{{"id", id},
                {"p", rules().p.value()},
                {"k", rules().k},
                {"variant", welter::to_string(rules().variant)},
                {"m", position.size()},
                {"coins", welter::to_json(position)},
                {"partition", welter::to_json(partition_of(position))},
                {"tower", welter::to_json(tower(position, rules().p))},
                {"sg", sg},
                {"sg_digits", std::vector<Nat>(digits.digits().begin(), digits.digits().end())},
                {"closed_form", eval.closed_form()},
                {"turn", welter::to_string(turn)},
                {"winner", winner ? json(*winner) : json(nullptr)},
                {"history", hist}};
  }
};

struct ApiResponse {
  int status;
  json body;
};

inline ApiResponse api_error(int status, const std::string& message, std::optional<int> condition = std::nullopt) {
  json b{{"v", kApiVersion}, {"error", message}};
  if (condition) b["condition"] = *condition;
  return {status, b};
}

/// Session store and request handlers, independent of the HTTP transport.
class PlayService {
public:
  /// Largest square allowed when the session falls back to the oracle.
  explicit PlayService(Nat oracle_square_cap = 40) : oracle_cap_(oracle_square_cap) {}

  ApiResponse create(const json& req) {
    try {
      const Nat p = req.at("p").get<Nat>();
      if (p < 2) return api_error(400, "p must be at least 2");
      Position start(req.at("coins").get<std::vector<Nat>>());
      const unsigned k = req.contains("k") ? req["k"].get<unsigned>() : static_cast<unsigned>(start.size() + 1);
      if (k < 2) return api_error(400, "k must be at least 2: with k = 1 no move is possible");
      if (k < start.size() + 1 && start.max_coin() >= oracle_cap_)
        return api_error(400, "k below m+1 needs the oracle; coins must stay below " + std::to_string(oracle_cap_));
      const bool engine_first = req.value("engine_first", false);

      std::shared_ptr<Entry> entry;
      {
        std::lock_guard lock(mu_);
        const std::string id = "s" + std::to_string(++counter_);
        entry = std::make_shared<Entry>(SessionState(id, GameRules(Base(p), k), start));
        sessions_.emplace(id, entry);
      }
      std::lock_guard lock(entry->mu);
      SessionState& s = entry->state;
      json reply = nullptr;
      if (legal_moves(s.rules(), s.position).empty()) {
        s.turn = Turn::over;
      } else if (engine_first) {
        s.turn = Turn::engine;
        reply = play_engine(s);
      }
      return {200, json{{"v", kApiVersion}, {"id", s.id}, {"state", s.to_json()}, {"engine_move", reply}}};
    } catch (const json::exception& e) {
      return api_error(400, std::string("malformed request: ") + e.what());
    } catch (const std::invalid_argument& e) {
      return api_error(400, e.what());
    }
  }

  ApiResponse get(const std::string& id) {
    auto entry = find(id);
    if (!entry) return api_error(404, "unknown session " + id);
    std::lock_guard lock(entry->mu);
    return {200, json{{"v", kApiVersion}, {"state", entry->state.to_json()}}};
  }

  ApiResponse move(const json& req) {
    std::shared_ptr<Entry> entry;
    try {
      entry = find(req.at("id").get<std::string>());
    } catch (const json::exception& e) {
      return api_error(400, std::string("malformed request: ") + e.what());
    }
    if (!entry) return api_error(404, "unknown session");
    std::lock_guard lock(entry->mu);
    SessionState& s = entry->state;
    if (s.turn != Turn::human) return api_error(409, "not the human's turn (" + to_string(s.turn) + ")");

    std::vector<Nat> X = s.position.coins();
    std::vector<Nat> Y = X;
    try {
      std::vector<char> touched(X.size(), 0);
      for (const auto& pair : req.at("moves")) {
        const Nat from = pair.at(0).get<Nat>();
        const Nat to = pair.at(1).get<Nat>();
        auto it = std::find(X.begin(), X.end(), from);
        if (it == X.end()) return api_error(400, "no coin on square " + std::to_string(from));
        const auto i = static_cast<std::size_t>(it - X.begin());
        if (touched[i]) return api_error(400, "coin on square " + std::to_string(from) + " listed twice");
        touched[i] = 1;
        Y[i] = to;
      }
    } catch (const json::exception& e) {
      return api_error(400, std::string("malformed request: ") + e.what());
    }
    const MoveCheck check = check_move(s.rules(), X, Y);
    if (check != MoveCheck::legal) return api_error(422, describe(check), static_cast<int>(check));

    s.advance(Position(Y), "human");
    const Nat after_human = s.eval(s.position);
    json reply = nullptr;
    if (s.turn == Turn::engine) reply = play_engine(s);
    return {200, json{{"v", kApiVersion},
                      {"state", s.to_json()},
                      {"human_move", json{{"coins", Y}, {"sg", after_human}}},
                      {"engine_move", reply}}};
  }

  ApiResponse hints(const std::string& id, Nat h) {
    auto entry = find(id);
    if (!entry) return api_error(404, "unknown session " + id);
    std::lock_guard lock(entry->mu);
    SessionState& s = entry->state;
    json options = json::array();
    for (const auto& Y : legal_moves(s.rules(), s.position))
      if (s.eval(Y) == h) options.push_back(to_json(Y));
    return {200, json{{"v", kApiVersion}, {"id", id}, {"h", h}, {"sg", s.eval(s.position)}, {"options", options}}};
  }

private:
  struct Entry {
    explicit Entry(SessionState s) : state(std::move(s)) {}
    std::mutex mu;
    SessionState state;
  };

  std::shared_ptr<Entry> find(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  static json play_engine(SessionState& s) {
    const auto mv = engine_reply(s.eval, s.position);
    if (!mv) return nullptr;
    const Position from = s.position;
    s.advance(mv->to, "engine");
    std::vector<Nat> removed, added;
    std::set_difference(from.coins().begin(), from.coins().end(), mv->to.coins().begin(), mv->to.coins().end(),
                        std::back_inserter(removed));
    std::set_difference(mv->to.coins().begin(), mv->to.coins().end(), from.coins().begin(), from.coins().end(),
                        std::back_inserter(added));
    return json{{"coins", to_json(mv->to)},
                {"removed", removed},
                {"added", added},
                {"sg", s.eval(s.position)},
                {"losing_spot", mv->losing_spot}};
  }

  Nat oracle_cap_;
  std::mutex mu_;
  unsigned long counter_ = 0;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace welter
