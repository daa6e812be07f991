#pragma once

// JSON-lines report: one header row, one row per CheckResult, one summary
// row. Rows carry no timestamps, so identical runs are byte-identical.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "osg/verifier.hpp"

namespace osg {

struct ReportHeader {
  std::string corpus_path;
  std::string corpus_hash;
  std::vector<unsigned> potencies;
  std::vector<std::string> checks;
  bool strict_bi_interior = false;
  std::string conjecture;  // set for `osg conjecture` reports
  std::string version{kToolkitVersion};
  bool operator==(const ReportHeader&) const = default;
};

std::string header_row(const ReportHeader& h);
std::string result_row(const CheckResult& r);
std::string summary_row(const std::vector<CheckSummary>& summary);

/// Header, results, summary; newline-terminated lines.
std::string write_report(const ReportHeader& h, const std::vector<CheckResult>& results,
                         const std::vector<CheckSummary>& summary);

struct ParsedReport {
  ReportHeader header;
  std::vector<CheckResult> results;
};

/// Throws ParseError(FormatError) on malformed rows.
ParsedReport parse_report(std::string_view text);

}  // namespace osg
