#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hadamard/core.hpp"
#include "hadamard/partition.hpp"

namespace hadamard::io {

/// grouplist: `HM_<m>_<k>:[[[l,c],...],...]$` records.
/// dense01:   rows of '0'/'1', matrices separated by a blank line.
/// densepm:   rows of '+'/'-', matrices separated by a blank line.
enum class Format { grouplist, dense01, densepm };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

template <typename M>
struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::string name;      // grouplist only
  M matrix;
};

/// Compact nested list without whitespace: [[[0,2],[1,1]],...].
std::string group_lists_text(const PartitionMatrix& p);
std::string grouplist_record(const PartitionMatrix& p, std::uint64_t index);

/// Accepts arbitrary whitespace and line wrapping inside a record. A record is
/// an optional `name:` prefix, a nested list and a `$` terminator; the side is
/// the number of rows. Refinement-inconsistent lists raise ParseError.
std::vector<Record<PartitionMatrix>> read_grouplist(std::istream& in);
std::vector<Record<BitMatrix>> read_dense01(std::istream& in);
std::vector<Record<SignMatrix>> read_densepm(std::istream& in);

void write_dense01(std::ostream& out, const BitMatrix& t);
void write_densepm(std::ostream& out, const SignMatrix& h);

/// Writes a stream of records in one format, numbering grouplist records from
/// 1 and separating dense blocks with blank lines.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  /// Converts as needed: dense01 -> grouplist requires a canonical matrix,
  /// densepm input must be normalized for dense01 and grouplist output.
  void write(const PartitionMatrix& p);
  void write(const BitMatrix& t);
  void write(const SignMatrix& h);

  std::uint64_t count() const noexcept { return count_; }

 private:
  void separate();

  std::ostream& out_;
  Format format_;
  std::uint64_t count_ = 0;
};

}  // namespace hadamard::io
