#pragma once

// Invariant suites run by `ichom suite`. Each check states the property it
// verifies, its parameters, the observed result and, where it makes sense,
// the largest discrepancy seen.

#include <string>
#include <vector>

#include <json.hpp>

namespace ichom::suites {

using Json = nlohmann::json;

struct Config {
  // seqorder
  int enumeration_depth = 7;
  int oracle_depth = 12;
  int tau_range = 5;        // B_1..B_tau_range for the oracle and increments
  int monotone_range = 6;   // B_1..B_monotone_range for order and intervals
  int density_depth = 8;
  int density_grid = 1000;
  // earring
  int sigma_depth = 8;
  int lipschitz_pairs = 1000;
  int recursion_samples = 200;
  int max_sigma_n = 4;
  int pi_digits = 0;  // 0: the default enclosure 3.14159265 < pi < 3.14159266
  // freegroup
  int random_words = 10000;
  // chains
  int random_chains = 100;
  // currents
  int random_currents = 50;
  int slice_trials = 20;
  int max_circle = 4;
  std::string epsilon = "1/2";
  unsigned long long seed = 20240607;
  // Forces the named check to fail; an unknown id adds a failing check.
  std::string inject_failure;

  static Config from_json(const Json& j);  // missing keys keep their defaults
  Json to_json() const;
};

struct CheckResult {
  std::string id;
  std::string statement;
  Json parameters = Json::object();
  std::string result;
  std::string discrepancy = "0";
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;  // sorted by id
  bool pass = false;

  Json to_json() const;
  std::vector<std::string> failing_ids() const;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);          // including "all"

// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const Config& config);

}  // namespace ichom::suites
