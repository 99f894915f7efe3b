#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padic/valuation.hpp"

namespace padic {

struct PrimePower {
  index_t prime;
  term_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  index_t n;
  std::vector<PrimePower> factors;  // primes strictly increasing, exponents >= 1

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// How step 1 looks for the next unmarked column.
enum class CandidateScan {
  marked_bits,      // per-column flag set as rows are placed
  literal_columns,  // inspect every row's cell in each column, left to right
};

/// Header row 1..m plus one row per prime placed so far, in discovery order.
///
/// Rows are kept sparse (positive cells only); a zero and an empty cell are
/// the same thing here. Once sealed the table is immutable and column reads
/// go through a column-major index built at seal time.
class SieveTable {
 public:
  explicit SieveTable(std::size_t m) : m_(m), marked_(m + 1, 0) {
    if (m == 0) throw std::invalid_argument("SieveTable: m must be >= 1");
    // Column 1 is never a candidate.
    marked_[1] = 1;
    advance_cursor();
  }

  std::size_t width() const { return m_; }
  std::size_t row_count() const { return headers_.size(); }
  bool sealed() const { return sealed_; }

  std::span<const index_t> headers() const { return headers_; }

  /// Cell in row `row` (0-based, discovery order), column n (1-based).
  term_t cell(std::size_t row, std::size_t n) const {
    check_column(n);
    return rows_.at(row).at(n);
  }

  /// The row for the k-th discovered prime, expanded to a dense sequence.
  ValuationSequence row_sequence(std::size_t row) const {
    const SparseTerms& sparse = rows_.at(row);
    std::vector<term_t> dense(m_, 0);
    const auto pos = sparse.positions();
    const auto val = sparse.values();
    for (std::size_t i = 0; i < pos.size(); ++i) dense[pos[i] - 1] = val[i];
    return ValuationSequence(headers_[row], std::move(dense));
  }

  /// Steps 2 and 3: build the DCI row for p and place it in the next empty row.
  void place_row(index_t p) {
    if (sealed_) throw std::logic_error("SieveTable: cannot place rows in a sealed table");
    if (p < 2 || p > m_) throw std::invalid_argument("SieveTable: row header " + std::to_string(p) + " outside 2..m");
    SparseTerms row;
    duplicate_concatenate_increment(p, m_, row);
    for (const std::size_t n : row.positions()) marked_[n] = 1;
    headers_.push_back(p);
    rows_.push_back(std::move(row));
    advance_cursor();
  }

  /// Step 1. Smallest column > 1 with no positive cell below its header, or
  /// nullopt once every column up to m is marked.
  std::optional<index_t> next_candidate(CandidateScan scan = CandidateScan::marked_bits) const {
    if (scan == CandidateScan::marked_bits) {
      if (cursor_ > m_) return std::nullopt;
      return cursor_;
    }
    for (std::size_t column = 2; column <= m_; ++column) {
      bool all_zero = true;
      for (const SparseTerms& row : rows_) {
        if (row.at(column) != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) return column;
    }
    return std::nullopt;
  }

  /// Freezes the table and builds the column-major index.
  void seal() {
    if (sealed_) return;
    col_offsets_.assign(m_ + 2, 0);
    for (const SparseTerms& row : rows_)
      for (const std::size_t n : row.positions()) ++col_offsets_[n + 1];
    for (std::size_t n = 1; n < col_offsets_.size(); ++n) col_offsets_[n] += col_offsets_[n - 1];
    col_rows_.resize(col_offsets_.back());
    col_values_.resize(col_offsets_.back());
    std::vector<std::size_t> fill(col_offsets_.begin(), col_offsets_.end() - 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto pos = rows_[r].positions();
      const auto val = rows_[r].values();
      for (std::size_t i = 0; i < pos.size(); ++i) {
        const std::size_t slot = fill[pos[i]]++;
        col_rows_[slot] = static_cast<std::uint32_t>(r);
        col_values_[slot] = val[i];
      }
    }
    sealed_ = true;
  }

  /// Positive cells of column n as (row, value), top to bottom.
  std::vector<std::pair<std::size_t, term_t>> column(std::size_t n) const {
    check_column(n);
    std::vector<std::pair<std::size_t, term_t>> out;
    if (sealed_) {
      for (std::size_t slot = col_offsets_[n]; slot < col_offsets_[n + 1]; ++slot)
        out.emplace_back(col_rows_[slot], col_values_[slot]);
      return out;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (const term_t v = rows_[r].at(n); v != 0) out.emplace_back(r, v);
    return out;
  }

 private:
  void check_column(std::size_t n) const {
    if (n == 0 || n > m_)
      throw std::out_of_range("SieveTable: column " + std::to_string(n) + " outside 1.." + std::to_string(m_));
  }

  void advance_cursor() {
    while (cursor_ <= m_ && marked_[cursor_]) ++cursor_;
  }

  std::size_t m_;
  std::vector<std::uint8_t> marked_;
  std::size_t cursor_ = 1;
  std::vector<index_t> headers_;
  std::vector<SparseTerms> rows_;

  bool sealed_ = false;
  std::vector<std::size_t> col_offsets_;
  std::vector<std::uint32_t> col_rows_;
  std::vector<term_t> col_values_;
};

inline std::optional<index_t> next_candidate(const SieveTable& table,
                                             CandidateScan scan = CandidateScan::marked_bits) {
  return table.next_candidate(scan);
}

/// Runs the sieve to completion: find a candidate, place its row, repeat.
/// Stops when no unmarked column remains at or below m.
inline SieveTable run_sieve(std::size_t m, CandidateScan scan = CandidateScan::marked_bits) {
  if (m == 0) throw std::invalid_argument("run_sieve: m must be >= 1");
  SieveTable table(m);
  while (const auto p = table.next_candidate(scan)) table.place_row(*p);
  table.seal();
  return table;
}

inline std::vector<index_t> primes(const SieveTable& table) {
  return {table.headers().begin(), table.headers().end()};
}

/// Reads column n: every row with a positive cell contributes header^cell.
inline Factorization read_factorization(const SieveTable& table, index_t n) {
  if (n == 0 || n > table.width())
    throw std::out_of_range("read_factorization: n = " + std::to_string(n) + " outside 1.." +
                            std::to_string(table.width()));
  Factorization f{n, {}};
  for (const auto& [row, value] : table.column(static_cast<std::size_t>(n)))
    f.factors.push_back({table.headers()[row], value});
  return f;
}

}  // namespace padic
