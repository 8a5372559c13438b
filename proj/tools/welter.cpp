// welter: compute Grundy values, suggest moves, run verification sweeps,
// export SG tables and serve the play API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "welter/http.hpp"
#include "welter/session.hpp"
#include "welter/table.hpp"
#include "welter/welter.hpp"

namespace {

using welter::Nat;

Nat env_or(const char* name, Nat fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed " << name << "=" << v << "\n";
    }
  }
  return fallback;
}

std::string digits_string(Nat v, welter::Base p) {
  const auto d = welter::DigitSeq::from_value(v, p);
  if (d.empty()) return "(0)_" + std::to_string(p.value());
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")_" + std::to_string(p.value());
}

int print_report(const welter::Report& r) {
  nlohmann::json j{{"suite", r.suite}, {"params", r.params}, {"passed", r.passed}, {"checked", r.checked}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " [" << r.params << "] checked=" << r.checked;
  if (r.counterexample) std::cout << " first failure: " << *r.counterexample;
  std::cout << "\n" << j.dump() << "\n";
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy values and verification for p-saturations of Welter's game"};
  app.require_subcommand(1);

  // sg
  std::vector<Nat> coins;
  Nat p = 2;
  unsigned k = 0;
  bool as_json = false;
  auto* sg = app.add_subcommand("sg", "Grundy value of a position");
  sg->add_option("--coins", coins, "occupied squares, comma separated")->delimiter(',')->required();
  sg->add_option("--p", p, "base (>= 2)")->required();
  sg->add_option("--k", k, "index; defaults to m+1 (saturated)");
  sg->add_flag("--json", as_json, "machine-readable output");

  // move
  auto* mv = app.add_subcommand("move", "recommend a winning move");
  mv->add_option("--coins", coins, "occupied squares, comma separated")->delimiter(',')->required();
  mv->add_option("--p", p, "base (>= 2)")->required();
  mv->add_option("--k", k, "index; defaults to m+1 (saturated)");

  // verify
  std::string suite;
  std::size_t m = 2;
  Nat bound = env_or("WELTER_SAT_BOUND", 10);
  Nat nmax = env_or("WELTER_NMAX", 12);
  Nat size = env_or("WELTER_LEMMA_SIZE", 8);
  auto* ver = app.add_subcommand("verify", "run a verification sweep");
  ver->add_option("suite", suite, "theorem11 | nim | macdonald | corollary | lemmas | msg | all")
      ->required()
      ->check(CLI::IsMember({"theorem11", "nim", "macdonald", "corollary", "lemmas", "msg", "all"}));
  ver->add_option("--p", p, "base");
  ver->add_option("--m", m, "number of coins");
  ver->add_option("--k", k, "index for nim; defaults to min(p, m+1)");
  ver->add_option("--bound", bound, "coins stay below this square (env WELTER_SAT_BOUND)");
  ver->add_option("--nmax", nmax, "largest partition size (env WELTER_NMAX)");
  ver->add_option("--size", size, "largest diagram size (env WELTER_LEMMA_SIZE)");

  // table
  std::string format = "csv", variant = "welter", out;
  auto* tab = app.add_subcommand("table", "export oracle and closed-form values");
  tab->add_option("--p", p, "base")->required();
  tab->add_option("--k", k, "index")->required();
  tab->add_option("--m", m, "number of coins")->required();
  tab->add_option("--bound", bound, "coins stay below this square")->required();
  tab->add_option("--format", format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  tab->add_option("--variant", variant, "welter | nim")->check(CLI::IsMember({"welter", "nim"}));
  tab->add_option("--out", out, "output file (default stdout)");

  // serve
  int port = 8080;
  std::string host = "127.0.0.1", static_dir;
  auto* srv = app.add_subcommand("serve", "serve the play API");
  srv->add_option("--port", port, "TCP port");
  srv->add_option("--host", host, "bind address");
  srv->add_option("--static-dir", static_dir, "directory with the web UI assets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sg) {
      const welter::Base base(p);
      const welter::Position X(coins);
      const auto t = welter::tower(X, base);
      const auto lam = welter::partition_of(X);
      const unsigned kk = k ? k : static_cast<unsigned>(X.size() + 1);
      const bool saturated = kk >= X.size() + 1;
      Nat value = welter::sg_tower(X, base).value;
      if (!saturated) value = welter::SgOracle(welter::GameRules(base, kk), X.max_coin() + 1)(X);
      if (as_json) {
        nlohmann::json j{{"coins", X.coins()},    {"p", p},
                         {"k", kk},               {"sg", value},
                         {"closed_form", saturated}, {"digits", welter::DigitSeq::from_value(value, base).digits()},
                         {"tower", t.rows},       {"partition", lam.parts()},
                         {"size", lam.size()}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "position  " << X << "  (p=" << p << ", k=" << kk << (saturated ? ", saturated" : ", oracle")
                  << ")\n"
                  << "sg        " << value << " = " << digits_string(value, base) << "\n"
                  << "tower     " << welter::to_string(t) << "\n"
                  << "partition " << lam << "  |lambda| = " << lam.size() << "\n";
      }
      return 0;
    }

    if (*mv) {
      const welter::Base base(p);
      const welter::Position X(coins);
      const unsigned kk = k ? k : static_cast<unsigned>(X.size() + 1);
      if (kk < 2) throw std::invalid_argument("k must be at least 2");
      welter::Evaluator eval(welter::GameRules(base, kk), X);
      if (eval(X) == 0) {
        std::cout << "position is a P-position (sg = 0)\n";
        return 0;
      }
      const auto reply = welter::engine_reply(eval, X);
      std::cout << reply->to << "\n";
      return 0;
    }

    if (*ver) {
      int status = 0;
      const bool all = suite == "all";
      const welter::Base base(p);
      if (suite == "theorem11" || all) status |= print_report(welter::verify_saturation(base, m, bound));
      if (suite == "nim" || all) {
        const unsigned kk = k ? k : static_cast<unsigned>(std::min<Nat>(p, m + 1));
        status |= print_report(welter::nim_check(base, m, kk, bound));
      }
      if (suite == "macdonald" || all) status |= print_report(welter::verify_macdonald(nmax, welter::Prime(p)));
      if (suite == "corollary" || all) status |= print_report(welter::verify_corollary(nmax, welter::Prime(p)));
      if (suite == "lemmas" || all) status |= print_report(welter::verify_lemmas(base, size));
      if (suite == "msg" || all) status |= print_report(welter::verify_msg(base, size));
      return status;
    }

    if (*tab) {
      const welter::GameRules rules(welter::Base(p), k,
                                    variant == "nim" ? welter::Variant::nim : welter::Variant::welter);
      const auto fmt = format == "jsonl" ? welter::TableFormat::jsonl : welter::TableFormat::csv;
      if (out.empty()) {
        welter::write_table(std::cout, rules, m, bound, fmt);
      } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + out);
        welter::write_table(file, rules, m, bound, fmt);
        if (!file) throw std::runtime_error("write to " + out + " failed");
      }
      return 0;
    }

    if (*srv) {
      welter::PlayService service(env_or("WELTER_ORACLE_CAP", 40));
      httplib::Server server;
      welter::install_routes(server, service, static_dir);
      std::cerr << "serving on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
