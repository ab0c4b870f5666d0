#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhopf/laws.hpp"

namespace mhopf {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite;
  std::string instance;
  std::string field = "rational";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Exec exec = Exec::parallel;
  /// Run the negative controls instead of the registered fixtures; their
  /// designated laws are expected to fail, every other law to pass.
  bool controls = false;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  bool has_controls = false;
};

/// Registered suites in stable order.
const std::vector<SuiteInfo>& suites();
/// Canonical suite name; resolves aliases. Throws UsageError for unknown names.
std::string canonical_suite(const std::string& name);

/// Runs one suite. Throws UsageError for an unknown suite, instance or field.
/// Exit status of the CLI is 0 iff report.as_expected().
Report run_suite(const SuiteConfig& cfg);

/// Multiplication table of the crossed product at the pair "alpha,beta" as JSON.
std::string dcp_table_json(const std::string& instance, const std::string& field, const std::string& pair);

/// Writes through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& text);

}  // namespace mhopf
