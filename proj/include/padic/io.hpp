#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "padic/sieve.hpp"

namespace padic {

// ---------------------------------------------------------------------------
// OEIS b-files: "<index> <value>\n" per term, no header.
// ---------------------------------------------------------------------------

template <class T>
void write_bfile(std::ostream& out, std::span<const T> terms, std::int64_t first_index = 1) {
  std::string line;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    line.clear();
    line += std::to_string(first_index + static_cast<std::int64_t>(i));
    line += ' ';
    line += std::to_string(terms[i]);
    line += '\n';
    out << line;
  }
}

struct BFile {
  std::int64_t first_index = 1;
  std::vector<std::int64_t> terms;
};

/// Reads a b-file. Blank lines and lines starting with '#' are skipped;
/// indexes must be consecutive.
inline BFile read_bfile(std::istream& in) {
  BFile file;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("b-file line " + std::to_string(line_no) + ": " + why);
  };
  auto parse = [&](std::string_view field) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size()) fail("not an integer: '" + std::string(field) + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto start = view.find_first_not_of(" \t");
    if (start == std::string_view::npos || view[start] == '#') continue;
    view.remove_prefix(start);
    const auto gap = view.find_first_of(" \t");
    if (gap == std::string_view::npos) fail("expected '<index> <value>'");
    std::string_view rest = view.substr(gap);
    rest.remove_prefix(rest.find_first_not_of(" \t"));
    if (const auto tail = rest.find_last_not_of(" \t"); tail != std::string_view::npos) rest = rest.substr(0, tail + 1);
    const std::int64_t index = parse(view.substr(0, gap));
    const std::int64_t value = parse(rest);
    if (first) {
      file.first_index = index;
      first = false;
    } else if (index != file.first_index + static_cast<std::int64_t>(file.terms.size())) {
      fail("index " + std::to_string(index) + " out of sequence");
    }
    file.terms.push_back(value);
  }
  return file;
}

// ---------------------------------------------------------------------------
// Table layouts
// ---------------------------------------------------------------------------

/// Header row (blank corner, then 1..m) followed by one row per prime, all
/// tab-separated.
inline void write_sieve_tsv(std::ostream& out, const SieveTable& table) {
  std::string line;
  for (std::size_t n = 1; n <= table.width(); ++n) {
    line += '\t';
    line += std::to_string(n);
  }
  line += '\n';
  out << line;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const ValuationSequence row = table.row_sequence(r);
    line = std::to_string(table.headers()[r]);
    for (const term_t v : row.terms()) {
      line += '\t';
      line += std::to_string(v);
    }
    line += '\n';
    out << line;
  }
}

/// {"n": 24, "factors": [[2,3],[3,1]]}
inline std::string factorization_json(const Factorization& f) {
  std::string out = "{\"n\": " + std::to_string(f.n) + ", \"factors\": [";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(f.factors[i].prime) + ',' + std::to_string(f.factors[i].exponent) + ']';
  }
  out += "]}";
  return out;
}

/// "Label:\t" followed by comma-separated terms.
template <class T>
void write_labelled_row(std::ostream& out, std::string_view label, std::span<const T> terms) {
  std::string line(label);
  line += ":\t";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) line += ", ";
    line += std::to_string(terms[i]);
  }
  line += '\n';
  out << line;
}

}  // namespace padic
