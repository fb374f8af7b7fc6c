#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wcol/io.hpp"

namespace wcol {

struct CheckResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string observed;
  bool passed = false;
  /// Enough to replay a failure: a sample seed, an ordering, a vertex.
  std::string witness;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> budgets;

  bool passed() const;
  std::size_t failures() const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
  /// One line per check; with `failures_only`, passing lines are folded into the summary.
  std::string text(bool failures_only = false) const;
  Json json() const;
};

struct VerifyOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Suite parameters; each suite reads the ones it needs.
  std::string family = "F";   // lb: F or H
  std::string bound_case = "a";  // lemma1: a (cubes) or b (balls, b = 1)
  unsigned k = 1;
  unsigned t = 1;
  std::size_t d = 2;
  std::size_t n = 6;
  std::size_t w = 3;
  std::size_t max_objects = 40;
  /// lemma1 case a: unit cubes only instead of mixed sizes.
  bool unit_size = false;
  std::uint64_t search_budget = 50'000'000;
};

VerifyReport verify_lemma1(const VerifyOptions& opt);
VerifyReport verify_obs2(const VerifyOptions& opt);
VerifyReport verify_ky(const VerifyOptions& opt);
VerifyReport verify_pw(const VerifyOptions& opt);
VerifyReport verify_propP(const VerifyOptions& opt);
VerifyReport verify_lb(const VerifyOptions& opt);

/// Dispatch on suite name: lemma1, obs2, ky, pw, propP, lb.
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace wcol
