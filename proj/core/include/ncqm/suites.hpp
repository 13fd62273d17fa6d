#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncqm::suites {

// One verified identity: anchor id, measured residual, gate.
struct CheckRow {
  std::string anchor;
  std::string description;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  int n_max = 12;
  double lambda = 0.5;
  double q = 1.0;
  std::uint64_t seed = 1;
  int samples = 5;
};

CheckRow make_row(std::string anchor, std::string description, double residual, double tolerance);

std::vector<CheckRow> algebra_suite(const SuiteConfig& cfg);
std::vector<CheckRow> ordering_suite(const SuiteConfig& cfg);
std::vector<CheckRow> specfun_suite(const SuiteConfig& cfg);
std::vector<CheckRow> dynamics_suite(const SuiteConfig& cfg);
std::vector<CheckRow> lrl_suite(const SuiteConfig& cfg);
std::vector<CheckRow> all_suites(const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace ncqm::suites
