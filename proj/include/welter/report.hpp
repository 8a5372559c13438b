#pragma once

#include <optional>
#include <string>
#include <utility>

#include "welter/padic.hpp"

namespace welter {

/// Outcome of one verification sweep. Shared by every `verify` suite.
struct Report {
  Report(std::string suite_, std::string params_) : suite(std::move(suite_)), params(std::move(params_)) {}

  std::string suite;
  std::string params;
  bool passed = true;
  Nat checked = 0;
  std::optional<std::string> counterexample;

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
  /// Records one check; the first failure is kept.
  bool expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
    return ok;
  }
};

}  // namespace welter
