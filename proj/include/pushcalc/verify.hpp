#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pushcalc/json_io.hpp"

namespace pushcalc {

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int cases = 100;
  /// Swap a deliberately broken operation into every suite (negative control).
  bool inject_fault = false;
};

struct PropertyResult {
  std::string name;
  int cases_run = 0;
  bool passed = true;
  /// Smallest failing input found, with the failure reason.
  std::string counterexample;
  int shrink_steps = 0;
  std::vector<std::string> log;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  bool fault_injected = false;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// group, ring, monoid, embed, push, orbits.
const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them for "all". Throws InvalidInput on an
/// unknown suite name.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& options);

Json suite_report_to_json(const SuiteReport& report);
/// One line per property plus any log and counterexample lines.
std::string format_suite_report(const SuiteReport& report);

}  // namespace pushcalc
