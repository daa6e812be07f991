#include "osg/corpus_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace osg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

[[noreturn]] void format_error(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorKind::FormatError, "line " + std::to_string(line) + ": " + msg, line, 1);
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string w; is >> w;) line.words.push_back(w);
    if (line.words.empty() || line.words.front().starts_with('#')) continue;
    out.push_back(std::move(line));
  }
  return out;
}

unsigned to_index(const Line& line, const std::string& word) {
  unsigned long v = 0;
  std::size_t used = 0;
  try {
    v = std::stoul(word, &used);
  } catch (const std::exception&) {
    format_error(line.number, "expected a non-negative integer, found '" + word + "'");
  }
  if (used != word.size() || word.front() == '-' || word.front() == '+')
    format_error(line.number, "expected a non-negative integer, found '" + word + "'");
  if (v > 1000) format_error(line.number, "value " + word + " too large");
  return static_cast<unsigned>(v);
}

class RecordReader {
 public:
  explicit RecordReader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }

  OrderedSemigroup record() {
    const Line& header = take();
    if (header.words != std::vector<std::string>{"%osg", "1"}) format_error(header.number, "expected '%osg 1'");
    const std::size_t record_line = header.number;

    const Line& name_line = take();
    if (name_line.words.size() != 2 || name_line.words[0] != "name")
      format_error(name_line.number, "expected 'name <ident>'");
    const std::string name = name_line.words[1];

    const Line& size_line = take();
    if (size_line.words.size() != 2 || size_line.words[0] != "size")
      format_error(size_line.number, "expected 'size <n>'");
    const unsigned n = to_index(size_line, size_line.words[1]);
    if (n < 1 || n > kMaxSize) format_error(size_line.number, "size must be in 1.." + std::to_string(kMaxSize));

    expect_keyword("mul");
    std::vector<Element> table;
    table.reserve(n * n);
    for (unsigned row = 0; row < n; ++row) {
      const Line& l = take();
      if (l.words.size() != n)
        format_error(l.number, "mul row " + std::to_string(row) + " has " + std::to_string(l.words.size()) +
                                   " entries, expected " + std::to_string(n));
      for (const std::string& w : l.words) {
        const unsigned v = to_index(l, w);
        if (v >= n) format_error(l.number, "table entry " + w + " out of range");
        table.push_back(v);
      }
    }

    expect_keyword("leq");
    std::vector<std::uint8_t> rel(std::size_t{n} * n, 0);
    for (unsigned a = 0; a < n; ++a) rel[a * n + a] = 1;
    while (true) {
      const Line& l = take();
      if (l.words.size() == 1 && l.words[0] == "end") break;
      if (l.words.size() != 2) format_error(l.number, "expected 'i j' or 'end'");
      const unsigned i = to_index(l, l.words[0]);
      const unsigned j = to_index(l, l.words[1]);
      if (i >= n || j >= n) format_error(l.number, "leq pair out of range");
      if (i == j) format_error(l.number, "leq pairs are strict; reflexivity is implied");
      rel[i * n + j] = 1;
    }

    const std::string where = "record '" + name + "' (line " + std::to_string(record_line) + "): ";
    try {
      return validate_structure(n, table, rel, name);
    } catch (const NotPartialOrderError& e) {
      throw NotPartialOrderError(e.axiom(), where + e.what(), e.witness());
    } catch (const Error& e) {
      throw Error(e.kind(), where + e.what(), e.witness());
    }
  }

 private:
  const Line& take() {
    if (done()) {
      const std::size_t last = lines_.empty() ? 1 : lines_.back().number;
      format_error(last, "unexpected end of input inside a record");
    }
    return lines_[pos_++];
  }

  void expect_keyword(const char* kw) {
    const Line& l = take();
    if (l.words.size() != 1 || l.words[0] != kw) format_error(l.number, std::string("expected '") + kw + "'");
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<OrderedSemigroup> parse_corpus(std::string_view text) {
  RecordReader reader(significant_lines(text));
  std::vector<OrderedSemigroup> out;
  while (!reader.done()) out.push_back(reader.record());
  return out;
}

std::string write_corpus(const std::vector<OrderedSemigroup>& corpus) {
  std::string out;
  for (const OrderedSemigroup& s : corpus) {
    out += "%osg 1\nname " + s.name() + "\nsize " + std::to_string(s.size()) + "\nmul\n";
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        if (b) out += ' ';
        out += std::to_string(s.mul(a, b));
      }
      out += '\n';
    }
    out += "leq\n";
    for (auto [i, j] : s.strict_pairs()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    out += "end\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<OrderedSemigroup> read_corpus_file(const std::string& path) { return parse_corpus(read_file(path)); }

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

}  // namespace osg
