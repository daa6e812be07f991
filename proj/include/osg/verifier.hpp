#pragma once

// Registry of named checks, one per statement being tested, and the suite
// runner that crosses them with a corpus and a potency range.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "osg/conjecture.hpp"

namespace osg {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

/// Theorem-status checks must never fail; claim-status checks are reported.
enum class Expectation { Theorem, Claim };

struct CheckInfo {
  std::string id;
  std::string statement;
  Expectation expected;
  bool experimental = false;
};

/// Registry order: L1..L7, T1, T1', T2..T11, T11', T12..T16, R1, R2, E1, E2.
const std::vector<CheckInfo>& check_registry();
/// Throws UnknownCheckId.
const CheckInfo& find_check(std::string_view id);
/// Comma-separated ids, or "all". Result follows registry order.
std::vector<std::string> parse_check_list(std::string_view spec);

CheckResult run_check(const OrderedSemigroup& s, std::string_view id, Potency m, const IdealOptions& opts = {});

/// Re-evaluates a failing result through the unpruned definitional path.
/// True iff the failure reproduces. Throws MalformedWitness when the
/// witness does not fit the check (unknown direction, missing or extra
/// bindings, wrong sort, out-of-range value).
bool validate_witness(const OrderedSemigroup& s, const CheckResult& result, const IdealOptions& opts = {});

struct CheckSummary {
  std::string id;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  bool operator==(const CheckSummary&) const = default;
};

struct VerificationReport {
  std::string corpus_id;
  std::vector<unsigned> potencies;
  std::vector<CheckResult> results;   // corpus order x potency x check
  std::vector<CheckSummary> summary;  // one per requested check
  std::string version{kToolkitVersion};
};

/// Runs every (structure, potency) pair on its own OpenMP task and merges
/// results in deterministic order. Per-run errors become Error rows.
VerificationReport run_suite(const std::vector<OrderedSemigroup>& corpus, const std::vector<unsigned>& potencies,
                             const std::vector<std::string>& checks, const IdealOptions& opts = {},
                             std::string corpus_id = {});
/// Single-threaded reference for run_suite; identical output.
VerificationReport run_suite_serial(const std::vector<OrderedSemigroup>& corpus,
                                    const std::vector<unsigned>& potencies, const std::vector<std::string>& checks,
                                    const IdealOptions& opts = {}, std::string corpus_id = {});

/// True if any theorem-status row failed or any row errored.
bool has_blocking_failures(const VerificationReport& report);

}  // namespace osg
