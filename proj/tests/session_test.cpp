#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "welter/http.hpp"
#include "welter/session.hpp"

using namespace welter;

namespace {

// First legal option of the current position, expressed as [from, to] pairs.
json first_move(const json& state) {
  const Position X(state["coins"].get<std::vector<Nat>>());
  const GameRules rules(Base(state["p"].get<Nat>()), state["k"].get<unsigned>());
  const auto options = legal_moves(rules, X.coins());
  // Single-coin moves come first: one square vacated, one newly occupied.
  const Position Y(options.front());
  std::vector<Nat> from, to;
  std::set_difference(X.coins().begin(), X.coins().end(), Y.coins().begin(), Y.coins().end(),
                      std::back_inserter(from));
  std::set_difference(Y.coins().begin(), Y.coins().end(), X.coins().begin(), X.coins().end(),
                      std::back_inserter(to));
  return json::array({json::array({from.at(0), to.at(0)})});
}

class HttpApi : public ::testing::Test {
protected:
  void SetUp() override {
    install_routes(server_, service_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client client() { return httplib::Client("127.0.0.1", port_); }

  PlayService service_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace

TEST(PlayService, CreateReportsValue) {
  PlayService svc;
  const auto r = svc.create({{"p", 2}, {"k", 2}, {"coins", {3, 4}}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["v"], kApiVersion);
  EXPECT_EQ(r.body["id"], "s1");
  const json& s = r.body["state"];
  EXPECT_EQ(s["sg"], 6);
  EXPECT_EQ(s["turn"], "human");
  EXPECT_EQ(s["partition"], json::array({3, 3}));
  EXPECT_EQ(s["sg_digits"], json::array({0, 1, 1}));
  EXPECT_FALSE(s["closed_form"].get<bool>());
  EXPECT_TRUE(r.body["engine_move"].is_null());
}

TEST(PlayService, SaturatedSessionUsesClosedForm) {
  PlayService svc;
  const auto r = svc.create({{"p", 3}, {"k", 3}, {"coins", {3, 7}}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["state"]["sg"], 0);
  EXPECT_EQ(r.body["state"]["tower"], json::array({0, 3}));
  EXPECT_TRUE(r.body["state"]["closed_form"].get<bool>());
}

TEST(PlayService, CreateRejectsBadInput) {
  PlayService svc(20);
  EXPECT_EQ(svc.create({{"p", 1}, {"coins", {3}}}).status, 400);
  EXPECT_EQ(svc.create({{"p", 2}, {"k", 1}, {"coins", {3}}}).status, 400);
  EXPECT_EQ(svc.create({{"p", 2}, {"coins", {3, 3}}}).status, 400);
  EXPECT_EQ(svc.create({{"coins", {3}}}).status, 400);
  EXPECT_EQ(svc.create({{"p", 2}, {"k", 2}, {"coins", {3, 25}}}).status, 400);
  EXPECT_EQ(svc.create({{"p", 2}, {"coins", {3, 25}}}).status, 200);
}

TEST(PlayService, TerminalStartIsOver) {
  PlayService svc;
  const auto r = svc.create({{"p", 2}, {"coins", {0, 1}}});
  EXPECT_EQ(r.body["state"]["turn"], "over");
  const auto mv = svc.move({{"id", r.body["id"]}, {"moves", json::array({json::array({1, 0})})}});
  EXPECT_EQ(mv.status, 409);
}

TEST(PlayService, IllegalMovesReportCondition) {
  PlayService svc;
  const std::string id = svc.create({{"p", 2}, {"k", 3}, {"coins", {3, 4}}}).body["id"];
  auto cond = [&](json moves) {
    const auto r = svc.move({{"id", id}, {"moves", moves}});
    return std::make_pair(r.status, r.body.value("condition", -1));
  };
  EXPECT_EQ(cond(json::array({{4, 1}, {3, 0}})), std::make_pair(422, 3));
  EXPECT_EQ(cond(json::array({{4, 5}})), std::make_pair(422, 2));
  EXPECT_EQ(cond(json::array({{4, 3}})), std::make_pair(422, 4));
  EXPECT_EQ(cond(json::array()), std::make_pair(422, 1));
  EXPECT_EQ(cond(json::array({{9, 1}})).first, 400);
  EXPECT_EQ(cond(json::array({{4, 1}, {4, 0}})).first, 400);
  EXPECT_EQ(svc.move({{"id", "nope"}, {"moves", json::array()}}).status, 404);
  EXPECT_EQ(svc.move({{"moves", json::array()}}).status, 400);

  const auto ok = svc.move({{"id", id}, {"moves", json::array({{4, 0}, {3, 1}})}});
  ASSERT_EQ(ok.status, 200);
  EXPECT_EQ(ok.body["human_move"]["coins"], json::array({1, 0}));
  // {0,1} is terminal, so the human wins and the engine has no reply.
  EXPECT_EQ(ok.body["state"]["turn"], "over");
  EXPECT_EQ(ok.body["state"]["winner"], "human");
  EXPECT_TRUE(ok.body["engine_move"].is_null());
}

TEST(PlayService, EngineRepliesToDrag) {
  PlayService svc;
  const std::string id = svc.create({{"p", 2}, {"k", 2}, {"coins", {3, 4}}}).body["id"];
  const auto r = svc.move({{"id", id}, {"moves", json::array({{4, 2}})}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["human_move"]["sg"], 0);
  ASSERT_FALSE(r.body["engine_move"].is_null());
  EXPECT_TRUE(r.body["engine_move"]["losing_spot"].get<bool>());
  EXPECT_EQ(r.body["state"]["turn"], "human");
  EXPECT_EQ(r.body["state"]["history"].size(), 3u);
}

TEST(PlayService, Hints) {
  PlayService svc;
  const std::string id = svc.create({{"p", 2}, {"k", 2}, {"coins", {3, 4}}}).body["id"];
  const auto h = svc.hints(id, 0);
  ASSERT_EQ(h.status, 200);
  EXPECT_EQ(h.body["options"], json::array({json::array({2, 3})}));
  EXPECT_EQ(svc.hints(id, 6).body["options"].size(), 0u);
  EXPECT_EQ(svc.hints("s99", 0).status, 404);
}

TEST(PlayService, EngineFirstWinsFromNonzeroStart) {
  PlayService svc;
  auto r = svc.create({{"p", 2}, {"k", 2}, {"coins", {3, 4}}, {"engine_first", true}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["engine_move"]["coins"], json::array({2, 3}));
  EXPECT_FALSE(r.body["engine_move"]["losing_spot"].get<bool>());
  const std::string id = r.body["id"];
  json state = r.body["state"];
  for (int turn = 0; state["turn"] == "human"; ++turn) {
    ASSERT_LT(turn, 50);
    EXPECT_EQ(state["sg"], 0);
    const auto mv = svc.move({{"id", id}, {"moves", first_move(state)}});
    ASSERT_EQ(mv.status, 200) << mv.body.dump();
    state = mv.body["state"];
  }
  EXPECT_EQ(state["turn"], "over");
  EXPECT_EQ(state["winner"], "engine");
}

TEST(PlayService, OracleBackedGameStaysConsistent) {
  // k below m+1: every engine reply must hand back a zero under the oracle.
  PlayService svc;
  auto r = svc.create({{"p", 3}, {"k", 2}, {"coins", {1, 5, 8}}, {"engine_first", true}});
  ASSERT_EQ(r.status, 200);
  const std::string id = r.body["id"];
  json state = r.body["state"];
  SgOracle oracle(GameRules(Base(3), 2), 9);
  while (state["turn"] == "human") {
    const auto mv = svc.move({{"id", id}, {"moves", first_move(state)}});
    ASSERT_EQ(mv.status, 200);
    state = mv.body["state"];
    EXPECT_EQ(state["sg"].get<Nat>(), oracle(Position(state["coins"].get<std::vector<Nat>>())));
  }
  EXPECT_EQ(state["turn"], "over");
}

TEST_F(HttpApi, CreateGetMoveHints) {
  auto cli = client();
  auto res = cli.Post("/api/session", R"({"p":2,"k":2,"coins":[3,4]})", "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const json created = json::parse(res->body);
  EXPECT_EQ(created["state"]["sg"], 6);
  const std::string id = created["id"];

  res = cli.Get("/api/session/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["state"]["coins"], json::array({3, 4}));

  res = cli.Get("/api/hints?id=" + id + "&h=0");
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body)["options"], json::array({json::array({2, 3})}));

  res = cli.Post("/api/move", json{{"id", id}, {"moves", {{4, 2}}}}.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_FALSE(json::parse(res->body)["engine_move"].is_null());
}

TEST_F(HttpApi, ErrorStatuses) {
  auto cli = client();
  auto res = cli.Post("/api/session", R"({"p":2,"k":3,"coins":[3,4]})", "application/json");
  ASSERT_TRUE(res);
  const std::string id = json::parse(res->body)["id"];

  res = cli.Post("/api/move", json{{"id", id}, {"moves", {{4, 1}, {3, 0}}}}.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
  EXPECT_EQ(json::parse(res->body)["condition"], 3);

  res = cli.Post("/api/move", "not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = cli.Get("/api/session/s404");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);

  res = cli.Get("/api/hints?id=" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  res = cli.Get("/api/hints?id=" + id + "&h=x");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
}
