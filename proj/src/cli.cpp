#include "osg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "osg/corpus_io.hpp"
#include "osg/enumeration.hpp"
#include "osg/generation.hpp"
#include "osg/report.hpp"

namespace osg {

namespace {

unsigned parse_unsigned(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-' || v > 1u << 20)
    throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  return static_cast<unsigned>(v);
}

Subset parse_subset(const OrderedSemigroup& s, const std::string& text) {
  Mask bits = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      const unsigned a = parse_unsigned(item, "element index");
      if (a >= s.size()) throw Error(ErrorKind::IndexOutOfRange, "element " + item + " out of range", {a});
      bits |= Mask{1} << a;
    }
    start = comma + 1;
  }
  return Subset(s.size(), bits);
}

const OrderedSemigroup& pick(const std::vector<OrderedSemigroup>& corpus, const std::string& name) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  if (name.empty()) return corpus.front();
  for (const OrderedSemigroup& s : corpus)
    if (s.name() == name) return s;
  throw std::invalid_argument("no structure named '" + name + "' in corpus");
}

IdealKind kind_arg(const std::string& name) {
  auto k = parse_kind(name);
  if (!k) throw std::invalid_argument("unknown ideal kind '" + name + "'");
  return *k;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

void print_summary(const std::vector<CheckSummary>& summary, std::ostream& err) {
  for (const CheckSummary& s : summary) {
    err << s.id << ": holds=" << s.holds << " fails=" << s.fails << " skipped=" << s.skipped
        << " errors=" << s.errors;
    if (s.id != "conjecture")
      err << (find_check(s.id).expected == Expectation::Theorem ? " [theorem]" : " [claim]");
    err << '\n';
  }
}

struct Options {
  std::string file;
  std::vector<std::string> files;
  std::string structure;
  std::string kind;
  unsigned m = 1;
  std::string subset;
  bool count_only = false;
  unsigned max_order = 3;
  bool iso = false;
  std::string out;
  std::string corpus;
  std::string potencies = "1";
  std::string checks = "all";
  bool strict = false;
  bool serial = false;
  int threads = 0;
  std::string conjecture;
  std::string report;
  std::size_t row = 0;
};

int do_validate(const Options& o, std::ostream& out) {
  for (const std::string& path : o.files)
    for (const OrderedSemigroup& s : read_corpus_file(path))
      out << path << ": " << s.name() << " ok (size " << s.size() << ", " << s.strict_pairs().size()
          << " strict pairs)\n";
  return kExitOk;
}

int do_check(const Options& o, std::ostream& out) {
  const auto corpus = read_corpus_file(o.file);
  const OrderedSemigroup& s = pick(corpus, o.structure);
  const Subset b = parse_subset(s, o.subset);
  out << (is_ideal(s, b, kind_arg(o.kind), Potency(o.m), {o.strict}) ? "true" : "false") << '\n';
  return kExitOk;
}

int do_enum(const Options& o, std::ostream& out) {
  const auto corpus = read_corpus_file(o.file);
  const OrderedSemigroup& s = pick(corpus, o.structure);
  std::vector<Subset> subsets;
  if (o.kind == "downclosed")
    subsets = enumerate_downward_closed(s);
  else if (o.count_only) {
    out << count_ideals(s, kind_arg(o.kind), Potency(o.m), {o.strict}) << '\n';
    return kExitOk;
  } else
    subsets = enumerate_ideals(s, kind_arg(o.kind), Potency(o.m), {o.strict}).subsets;
  if (o.count_only) {
    out << subsets.size() << '\n';
    return kExitOk;
  }
  for (const Subset& a : subsets) out << a.str() << '\n';
  return kExitOk;
}

int do_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = generate_corpus(GenerationSpec{o.max_order, o.iso});
  emit(o.out, write_corpus(corpus), out);
  err << "generated " << corpus.size() << " structures\n";
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif
  const std::string text = read_file(o.corpus);
  const auto corpus = parse_corpus(text);
  ReportHeader h{o.corpus, content_hash(text), parse_potency_range(o.potencies), parse_check_list(o.checks),
                 o.strict, {}};
  const IdealOptions opts{o.strict};
  const VerificationReport rep = o.serial ? run_suite_serial(corpus, h.potencies, h.checks, opts, h.corpus_hash)
                                          : run_suite(corpus, h.potencies, h.checks, opts, h.corpus_hash);
  emit(o.out, write_report(h, rep.results, rep.summary), out);
  print_summary(rep.summary, err);
  return has_blocking_failures(rep) ? kExitFailures : kExitOk;
}

int do_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
  const Conjecture conj = parse_conjecture(o.conjecture);
  const std::string text = read_file(o.corpus);
  const auto corpus = parse_corpus(text);
  ReportHeader h{o.corpus, content_hash(text), parse_potency_range(o.potencies), {"conjecture"}, o.strict,
                 format_conjecture(conj)};
  const IdealOptions opts{o.strict};
  std::vector<CheckResult> results;
  CheckSummary sum{"conjecture"};
  for (const OrderedSemigroup& s : corpus)
    for (unsigned m : h.potencies) {
      CheckResult r;
      try {
        r = check_conjecture(s, conj, Potency(m), opts);
      } catch (const std::exception& e) {
        r = CheckResult{s.name(), "conjecture", m, Status::Error, {}, {}, e.what()};
      }
      switch (r.status) {
        case Status::Holds: ++sum.holds; break;
        case Status::Fails: ++sum.fails; break;
        case Status::Skipped: ++sum.skipped; break;
        case Status::Error: ++sum.errors; break;
      }
      results.push_back(std::move(r));
    }
  emit(o.out, write_report(h, results, {sum}), out);
  print_summary({sum}, err);
  return sum.fails + sum.errors > 0 ? kExitFailures : kExitOk;
}

int do_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedReport rep = parse_report(read_file(o.report));
  if (o.row >= rep.results.size())
    throw std::invalid_argument("row " + std::to_string(o.row) + " out of range (report has " +
                                std::to_string(rep.results.size()) + " result rows)");
  const CheckResult& row = rep.results[o.row];
  const std::string path = o.corpus.empty() ? rep.header.corpus_path : o.corpus;
  const std::string text = read_file(path);
  if (content_hash(text) != rep.header.corpus_hash)
    throw std::invalid_argument("corpus '" + path + "' does not match the report's corpus hash");
  const auto corpus = parse_corpus(text);
  const OrderedSemigroup& s = pick(corpus, row.structure);
  const IdealOptions opts{rep.header.strict_bi_interior};

  CheckResult again;
  bool witness_ok = true;
  try {
    if (row.check == "conjecture") {
      const Conjecture conj = parse_conjecture(rep.header.conjecture);
      again = check_conjecture(s, conj, Potency(row.m), opts);
      if (row.status == Status::Fails) witness_ok = replay_conjecture_witness(s, conj, Potency(row.m), row.witness, opts);
    } else {
      again = run_check(s, row.check, Potency(row.m), opts);
      if (row.status == Status::Fails) witness_ok = validate_witness(s, row, opts);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedWitness) throw;
    again = CheckResult{s.name(), row.check, row.m, Status::Error, {}, {}, e.what()};
  }
  const bool same = again == row && witness_ok;
  out << "row " << o.row << ": " << row.structure << ' ' << row.check << " m=" << row.m << ' '
      << status_name(row.status) << (same ? " reproduced" : " NOT reproduced") << '\n';
  if (!same) err << "replay gave status " << status_name(again.status) << (witness_ok ? "" : ", witness rejected") << '\n';
  return same ? kExitOk : kExitFailures;
}

}  // namespace

std::vector<unsigned> parse_potency_range(const std::string& text) {
  std::vector<unsigned> out;
  const auto dots = text.find("..");
  const unsigned lo = parse_unsigned(text.substr(0, dots), "potency");
  const unsigned hi = dots == std::string::npos ? lo : parse_unsigned(text.substr(dots + 2), "potency");
  if (hi < lo) throw std::invalid_argument("empty potency range '" + text + "'");
  for (unsigned m = lo; m <= hi; ++m) out.push_back(Potency(m).value());
  return out;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"osg: finite ordered semigroups, their m-ideals, and exhaustive statement checks", "osg"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and validate .osg corpus files");
  validate->add_option("files", o.files, "Corpus files")->required();

  auto* check = app.add_subcommand("check", "Decide whether a subset is an m-ideal of a given kind");
  check->add_option("--file", o.file, "Corpus file")->required();
  check->add_option("--structure", o.structure, "Record name (default: first record)");
  check->add_option("--kind", o.kind, "m_left|m_right|m_two_sided|m_quasi|m_bi|m_interior|m_bi_interior")->required();
  check->add_option("--m", o.m, "Potency")->required();
  check->add_option("--subset", o.subset, "Comma-separated element indices")->required();
  check->add_flag("--strict-bi-interior", o.strict, "Require m-bi-interior ideals to be subsemigroups");

  auto* enumerate = app.add_subcommand("enum", "List downward-closed subsets or ideals of one kind");
  enumerate->add_option("--file", o.file, "Corpus file")->required();
  enumerate->add_option("--structure", o.structure, "Record name (default: first record)");
  enumerate->add_option("--kind", o.kind, "Ideal kind, or 'downclosed'")->required();
  enumerate->add_option("--m", o.m, "Potency");
  enumerate->add_flag("--count", o.count_only, "Print only the count");
  enumerate->add_flag("--strict-bi-interior", o.strict, "Require m-bi-interior ideals to be subsemigroups");

  auto* generate = app.add_subcommand("generate", "Generate all ordered semigroups up to an order");
  generate->add_option("--max-order", o.max_order, "Largest order (1..4)");
  generate->add_flag("--iso", o.iso, "Keep one representative per isomorphism class");
  generate->add_option("--out", o.out, "Output .osg file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run registry checks over a corpus");
  verify->add_option("--corpus", o.corpus, "Corpus file")->required();
  verify->add_option("--m", o.potencies, "Potency or range a..b");
  verify->add_option("--checks", o.checks, "'all' or comma-separated check ids");
  verify->add_option("--out", o.out, "Report file (default: stdout)");
  verify->add_flag("--strict-bi-interior", o.strict, "Require m-bi-interior ideals to be subsemigroups");
  verify->add_flag("--serial", o.serial, "Use the single-threaded runner");
  verify->add_option("--threads", o.threads, "OpenMP thread count");

  auto* conjecture = app.add_subcommand("conjecture", "Check a conjecture over a corpus");
  conjecture->add_option("text", o.conjecture, "Conjecture text")->required();
  conjecture->add_option("--corpus", o.corpus, "Corpus file")->required();
  conjecture->add_option("--m", o.potencies, "Potency or range a..b");
  conjecture->add_option("--out", o.out, "Report file (default: stdout)");
  conjecture->add_flag("--strict-bi-interior", o.strict, "Require m-bi-interior ideals to be subsemigroups");

  auto* replay = app.add_subcommand("replay", "Re-evaluate one result row of a report");
  replay->add_option("--report", o.report, "Report file")->required();
  replay->add_option("--row", o.row, "0-based result row index")->required();
  replay->add_option("--corpus", o.corpus, "Corpus file (default: path recorded in the header)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return do_validate(o, out);
    if (check->parsed()) return do_check(o, out);
    if (enumerate->parsed()) return do_enum(o, out);
    if (generate->parsed()) return do_generate(o, out, err);
    if (verify->parsed()) return do_verify(o, out, err);
    if (conjecture->parsed()) return do_conjecture(o, out, err);
    if (replay->parsed()) return do_replay(o, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace osg
