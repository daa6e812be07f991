#include "osg/report.hpp"

#include <json.hpp>

namespace osg {

using ordered_json = nlohmann::ordered_json;

std::string header_row(const ReportHeader& h) {
  ordered_json j;
  j["type"] = "header";
  j["toolkit"] = "osg";
  j["version"] = h.version;
  j["corpus"] = h.corpus_path;
  j["corpus_hash"] = h.corpus_hash;
  j["potencies"] = h.potencies;
  j["checks"] = h.checks;
  j["flags"] = {{"strict_bi_interior", h.strict_bi_interior}};
  if (!h.conjecture.empty()) j["conjecture"] = h.conjecture;
  return j.dump();
}

std::string result_row(const CheckResult& r) {
  ordered_json j;
  j["type"] = "result";
  j["structure"] = r.structure;
  j["check"] = r.check;
  j["m"] = r.m;
  j["status"] = status_name(r.status);
  if (!r.witness.empty()) {
    ordered_json w = ordered_json::array();
    for (const WitnessBinding& b : r.witness) {
      ordered_json e;
      e["var"] = b.name;
      e["sort"] = sort_name(b.sort);
      e["value"] = b.value;
      if (b.sort == Sort::Subset) {
        std::vector<unsigned> elems;
        for (unsigned i = 0; i < 32; ++i)
          if ((b.value >> i) & 1U) elems.push_back(i);
        e["set"] = elems;
      }
      w.push_back(std::move(e));
    }
    j["witness"] = std::move(w);
  }
  if (!r.direction.empty()) j["direction"] = r.direction;
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

std::string summary_row(const std::vector<CheckSummary>& summary) {
  ordered_json rows = ordered_json::array();
  for (const CheckSummary& s : summary) {
    ordered_json e;
    e["id"] = s.id;
    if (s.id == "conjecture")
      e["expected"] = "conjecture";
    else
      e["expected"] = find_check(s.id).expected == Expectation::Theorem ? "theorem" : "claim";
    e["holds"] = s.holds;
    e["fails"] = s.fails;
    e["skipped"] = s.skipped;
    e["errors"] = s.errors;
    rows.push_back(std::move(e));
  }
  ordered_json j;
  j["type"] = "summary";
  j["checks"] = std::move(rows);
  return j.dump();
}

std::string write_report(const ReportHeader& h, const std::vector<CheckResult>& results,
                         const std::vector<CheckSummary>& summary) {
  std::string out = header_row(h) + "\n";
  for (const CheckResult& r : results) out += result_row(r) + "\n";
  out += summary_row(summary) + "\n";
  return out;
}

namespace {

[[noreturn]] void bad_row(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorKind::FormatError, "report line " + std::to_string(line) + ": " + msg, line, 1);
}

CheckResult parse_result(const ordered_json& j, std::size_t line) {
  CheckResult r;
  r.structure = j.at("structure").get<std::string>();
  r.check = j.at("check").get<std::string>();
  r.m = j.at("m").get<unsigned>();
  const auto status = parse_status(j.at("status").get<std::string>());
  if (!status) bad_row(line, "unknown status");
  r.status = *status;
  if (j.contains("witness")) {
    for (const auto& e : j.at("witness")) {
      const auto sort = parse_sort(e.at("sort").get<std::string>());
      if (!sort) bad_row(line, "unknown witness sort");
      r.witness.push_back({e.at("var").get<std::string>(), *sort, e.at("value").get<unsigned>()});
    }
  }
  if (j.contains("direction")) r.direction = j.at("direction").get<std::string>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

}  // namespace

ParsedReport parse_report(std::string_view text) {
  ParsedReport out;
  bool have_header = false;
  std::size_t line = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (raw.empty()) continue;
    try {
      const ordered_json j = ordered_json::parse(raw);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        ReportHeader& h = out.header;
        h.version = j.at("version").get<std::string>();
        h.corpus_path = j.at("corpus").get<std::string>();
        h.corpus_hash = j.at("corpus_hash").get<std::string>();
        h.potencies = j.at("potencies").get<std::vector<unsigned>>();
        h.checks = j.at("checks").get<std::vector<std::string>>();
        h.strict_bi_interior = j.at("flags").at("strict_bi_interior").get<bool>();
        if (j.contains("conjecture")) h.conjecture = j.at("conjecture").get<std::string>();
        have_header = true;
      } else if (type == "result") {
        out.results.push_back(parse_result(j, line));
      } else if (type != "summary") {
        bad_row(line, "unknown row type '" + type + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      bad_row(line, e.what());
    }
  }
  if (!have_header) bad_row(1, "missing header row");
  return out;
}

}  // namespace osg
