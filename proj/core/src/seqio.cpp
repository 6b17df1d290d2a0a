#include "sloane/seqio.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sloane/errors.hpp"

namespace sloane {

BFile BFile::from_values(std::int64_t offset, const std::vector<Natural>& values) {
  BFile out;
  out.offset = offset;
  out.entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.entries.push_back({offset + static_cast<std::int64_t>(i), values[i]});
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

BFileEntry parse_line(std::string_view line, std::size_t line_no) {
  const auto gap = line.find_first_of(" \t");
  if (gap == std::string_view::npos) throw ParseError(line_no, "expected '<index> <value>'");
  const std::string_view index_text = line.substr(0, gap);
  const std::string_view value_text = trim(line.substr(gap));
  BFileEntry e;
  const auto [ptr, ec] =
      std::from_chars(index_text.data(), index_text.data() + index_text.size(), e.index);
  if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
    throw ParseError(line_no, "bad index '" + std::string(index_text) + "'");
  }
  if (value_text.find_first_of(" \t") != std::string_view::npos) {
    throw ParseError(line_no, "trailing text after the value");
  }
  try {
    e.value = Natural::parse(value_text);
  } catch (const InvalidInput&) {
    throw ParseError(line_no, "bad value '" + std::string(value_text) + "'");
  }
  return e;
}

void check_contiguous(const BFile& f) {
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    const std::int64_t expected = f.offset + static_cast<std::int64_t>(i);
    if (f.entries[i].index != expected) {
      throw StructureError("index " + std::to_string(f.entries[i].index) + " where " +
                           std::to_string(expected) + " was expected");
    }
  }
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    BFileEntry e = parse_line(s, line_no);
    if (out.entries.empty()) out.offset = e.index;
    out.entries.push_back(std::move(e));
  }
  check_contiguous(out);
  return out;
}

BFile parse_bfile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bfile(in);
}

void emit_bfile(const BFile& file, std::ostream& out) {
  check_contiguous(file);
  for (const auto& e : file.entries) out << e.index << ' ' << e.value.to_string() << '\n';
}

std::string emit_bfile(const BFile& file) {
  std::ostringstream out;
  emit_bfile(file, out);
  return out.str();
}

SequenceDiff diff_sequences(const BFile& a, const BFile& b) {
  check_contiguous(a);
  check_contiguous(b);
  SequenceDiff out;
  if (a.entries.empty() || b.entries.empty()) {
    out.empty_overlap = true;
    return out;
  }
  const std::int64_t lo = std::max(a.entries.front().index, b.entries.front().index);
  const std::int64_t hi = std::min(a.entries.back().index, b.entries.back().index);
  if (lo > hi) {
    out.empty_overlap = true;
    return out;
  }
  out.overlap_lo = lo;
  out.overlap_hi = hi;
  for (std::int64_t i = lo; i <= hi; ++i) {
    const Natural& x = a.entries[static_cast<std::size_t>(i - a.offset)].value;
    const Natural& y = b.entries[static_cast<std::size_t>(i - b.offset)].value;
    if (x != y) out.mismatches.push_back({i, x, y});
  }
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "jsonl" || name == "json-lines") return ReportFormat::JsonLines;
  throw InvalidInput("unknown report format '" + std::string(name) + "' (csv or jsonl)");
}

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return shortest(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

}  // namespace

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == ReportFormat::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << csv_field(columns_[i]);
    }
    out_ << '\n';
  }
}

void ReportWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) {
    throw InvalidInput("row has " + std::to_string(cells.size()) + " cells for " +
                       std::to_string(columns_.size()) + " columns");
  }
  if (format_ == ReportFormat::Csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << csv_field(cell_text(cells[i]));
    }
    out_ << '\n';
    return;
  }
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::visit([&](const auto& v) { obj[columns_[i]] = v; }, cells[i]);
  }
  out_ << obj.dump() << '\n';
}

std::string digit_string(const Natural& n, Base b) { return format_digits(to_digits(n, b)); }

}  // namespace sloane
