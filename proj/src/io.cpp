#include "hadamard/io.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "hadamard/presentation.hpp"

namespace hadamard::io {

Format parse_format(std::string_view name) {
  if (name == "grouplist") return Format::grouplist;
  if (name == "dense01") return Format::dense01;
  if (name == "densepm") return Format::densepm;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::grouplist: return "grouplist";
    case Format::dense01: return "dense01";
    case Format::densepm: return "densepm";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string group_lists_text(const PartitionMatrix& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (i > 0) s += ',';
    s += '[';
    const auto& groups = p.rows[i].groups;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g > 0) s += ',';
      s += '[' + std::to_string(groups[g].label) + ',' + std::to_string(groups[g].count) + ']';
    }
    s += ']';
  }
  s += ']';
  return s;
}

std::string grouplist_record(const PartitionMatrix& p, std::uint64_t index) {
  return "HM_" + std::to_string(p.m) + '_' + std::to_string(index) + ':' + group_lists_text(p) +
         '$';
}

namespace {

// Cursor over the whole input that tracks line numbers and skips whitespace.
class Scanner {
 public:
  explicit Scanner(std::string text) : text_(std::move(text)) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("number out of range");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer" + found());
    return v;
  }
  // Identifier followed by ':'; returns empty if the record starts with '['.
  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string id = text_.substr(start, pos_ - start);
    if (!id.empty()) expect(':');
    return id;
  }
  std::size_t line() const { return line_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// "HM_<m>_<k>" names must agree with the parsed side.
void check_name(const std::string& name, int m, std::size_t line) {
  if (name.rfind("HM_", 0) != 0) return;
  const auto sep = name.find('_', 3);
  if (sep == std::string::npos) return;
  const std::string digits = name.substr(3, sep - 3);
  if (digits.empty() || digits.size() > 6 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    return;
  if (std::stoi(digits) != m)
    throw ParseError(line, "record " + name + " has " + std::to_string(m) + " rows");
}

template <typename M, typename Entry>
std::vector<Record<M>> read_dense(std::istream& in, char one, char zero, Entry entry) {
  std::vector<Record<M>> out;
  std::vector<std::vector<decltype(entry(one))>> block;
  std::size_t start = 0;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (block.empty()) return;
    for (const auto& r : block)
      if (r.size() != block.size())
        throw ParseError(start, "matrix block is not square (" + std::to_string(block.size()) +
                                    " rows, a row of length " + std::to_string(r.size()) + ")");
    out.push_back(Record<M>{start, {}, M(std::move(block))});
    block.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    if (block.empty()) start = lineno;
    std::vector<decltype(entry(one))> row;
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      if (c != one && c != zero)
        throw ParseError(lineno, std::string("unexpected character '") + c + "'");
      row.push_back(entry(c));
    }
    block.push_back(std::move(row));
  }
  flush();
  return out;
}

}  // namespace

std::vector<Record<PartitionMatrix>> read_grouplist(std::istream& in) {
  Scanner sc(slurp(in));
  std::vector<Record<PartitionMatrix>> out;
  while (!sc.at_end()) {
    Record<PartitionMatrix> rec;
    rec.line = sc.line();
    rec.name = sc.name();
    std::vector<std::vector<Group>> rows;
    sc.expect('[');
    do {
      sc.expect('[');
      std::vector<Group> row;
      do {
        sc.expect('[');
        Group g;
        g.label = sc.number();
        sc.expect(',');
        const std::uint64_t count = sc.number();
        if (count > static_cast<std::uint64_t>(kMaxPartitionOrder)) sc.fail("group count out of range");
        g.count = static_cast<int>(count);
        sc.expect(']');
        row.push_back(g);
      } while (sc.accept(','));
      sc.expect(']');
      rows.push_back(std::move(row));
    } while (sc.accept(','));
    sc.expect(']');
    sc.expect('$');

    rec.matrix.m = static_cast<int>(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      rec.matrix.rows.push_back(GroupList{static_cast<int>(i + 1), std::move(rows[i])});
    try {
      check_partition_matrix(rec.matrix);
    } catch (const InvalidPartition& e) {
      throw ParseError(rec.line, e.what());
    }
    check_name(rec.name, rec.matrix.m, rec.line);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record<BitMatrix>> read_dense01(std::istream& in) {
  return read_dense<BitMatrix>(in, '1', '0', [](char c) { return static_cast<Bit>(c == '1'); });
}

std::vector<Record<SignMatrix>> read_densepm(std::istream& in) {
  return read_dense<SignMatrix>(in, '+', '-', [](char c) { return c == '+' ? 1 : -1; });
}

void write_dense01(std::ostream& out, const BitMatrix& t) {
  for (const auto& r : t.rows()) out << bits_to_string(r) << '\n';
}

void write_densepm(std::ostream& out, const SignMatrix& h) {
  for (const auto& r : h.rows()) {
    std::string s;
    for (int x : r) s.push_back(x == 1 ? '+' : '-');
    out << s << '\n';
  }
}

void RecordWriter::separate() {
  if (count_ > 0 && format_ != Format::grouplist) out_ << '\n';
}

void RecordWriter::write(const PartitionMatrix& p) {
  if (format_ == Format::grouplist) {
    out_ << grouplist_record(p, count_ + 1) << '\n';
    ++count_;
    return;
  }
  write(decode_matrix(p));
}

void RecordWriter::write(const BitMatrix& t) {
  switch (format_) {
    case Format::grouplist:
      write(encode_matrix(t));
      return;
    case Format::dense01:
      separate();
      write_dense01(out_, t);
      break;
    case Format::densepm:
      separate();
      write_densepm(out_, pm_from_zo(t));
      break;
  }
  ++count_;
}

void RecordWriter::write(const SignMatrix& h) {
  if (format_ != Format::densepm) {
    write(zo_from_pm(h));
    return;
  }
  separate();
  write_densepm(out_, h);
  ++count_;
}

}  // namespace hadamard::io
