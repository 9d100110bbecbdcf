#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutcx/render.hpp"

namespace cutcx {

enum class Scope { kProfile, kFVector, kHomology, kRecurrence, kGenFun, kHilbert };

// Comma-separated scope names, or "all".
std::set<Scope> parse_scopes(std::string_view spec);
std::string_view scope_name(Scope s);

struct CheckResult {
  std::string name;     // e.g. "profile k=4 n=7"
  bool passed = false;
  std::string detail;   // what was compared
  std::string witness;  // first mismatch; empty on success
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;

  std::size_t failed() const;
};

// Largest n for the homology scope; larger n_max values cap there.
inline constexpr int kHomologyMaxN = 12;
// Largest n for the hilbert scope (closed forms only).
inline constexpr int kHilbertMaxN = 40;

struct VerifyOptions {
  int n_max = 12;
  std::vector<std::uint32_t> primes{2, 3};
  std::set<Scope> scopes;
  unsigned threads = 1;
};

// Requires 4 <= n_max <= 24 (CapacityError above).
RunReport run_verify(const VerifyOptions& options);

// Table reproduction, recurrences for r = 3..5 and homology for n <= 9.
RunReport run_seed_check(unsigned threads);

// Text: one "PASS|FAIL <name>: <detail>" line per check, a summary line, and
// when `timing` is set a footer after a "--" separator. JSON: command,
// parameters, checks, summary, and an optional trailing "timing" object.
std::string render_report(const RunReport& report, Format format, bool timing);

}  // namespace cutcx
