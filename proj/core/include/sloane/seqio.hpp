#pragma once

// OEIS b-files ("<index> <value>" per line, '#' comments) and flat report
// output as CSV or JSON lines.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sloane/natural.hpp"
#include "sloane/numbase.hpp"

namespace sloane {

struct BFileEntry {
  std::int64_t index = 0;
  Natural value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Indices run contiguously upward from `offset`.
struct BFile {
  std::int64_t offset = 0;
  std::vector<BFileEntry> entries;

  /// Builds a b-file from consecutive values starting at `offset`.
  static BFile from_values(std::int64_t offset, const std::vector<Natural>& values);

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// (with the 1-based line number) on a malformed line and StructureError
/// when indices are not contiguous.
BFile parse_bfile(std::string_view text);
BFile parse_bfile(std::istream& in);

/// Writes "<index> <value>\n" per entry; throws StructureError when the
/// entries are not contiguous.
void emit_bfile(const BFile& file, std::ostream& out);
std::string emit_bfile(const BFile& file);

struct Mismatch {
  std::int64_t index = 0;
  Natural a;
  Natural b;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SequenceDiff {
  std::vector<Mismatch> mismatches;
  /// The two files share no index.
  bool empty_overlap = false;
  std::int64_t overlap_lo = 0;
  std::int64_t overlap_hi = -1;
};

SequenceDiff diff_sequences(const BFile& a, const BFile& b);

enum class ReportFormat { Csv, JsonLines };

ReportFormat parse_report_format(std::string_view name);

/// One report cell: text, an unsigned or signed integer, a real, or a flag.
using Cell = std::variant<std::string, std::uint64_t, std::int64_t, double, bool>;

/// Writes rows of a fixed set of columns. CSV gets a header row and
/// RFC 4180 quoting; JSON lines get one object per row with keys in column
/// order. Doubles are written in shortest round-trip form.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format, std::vector<std::string> columns);

  /// Throws InvalidInput when the row does not match the columns.
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  ReportFormat format_;
  std::vector<std::string> columns_;
};

/// Digits of n in base b as a plain most-significant-first string, e.g.
/// "10201" for 100 in base 3.
std::string digit_string(const Natural& n, Base b);

}  // namespace sloane
