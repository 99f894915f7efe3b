#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Primality of the base handed to generate_dci is checked by trial division
// only when this is nonzero. Release builds trust the caller (the sieve).
#ifndef PADIC_VERIFY_PRIMALITY
#ifdef NDEBUG
#define PADIC_VERIFY_PRIMALITY 0
#else
#define PADIC_VERIFY_PRIMALITY 1
#endif
#endif

namespace padic {

using index_t = std::uint64_t;
using term_t = std::uint32_t;

// ---------------------------------------------------------------------------
// Reference oracles. These divide; the generators below never do.
// ---------------------------------------------------------------------------

/// Largest k such that p^k divides n, by repeated division.
inline unsigned valuation_oracle(index_t p, index_t n) {
  if (p < 2) throw std::invalid_argument("valuation_oracle: base must be >= 2");
  if (n == 0) throw std::invalid_argument("valuation_oracle: n must be >= 1");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline bool is_prime_trial(index_t n) {
  if (n < 2) return false;
  for (index_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Duplicate-concatenate-increment.
//
// Start from <0>. Each round appends p-1 copies of the current sequence and
// bumps the final term. The round that crosses m is cut off at m, and the
// increment is applied only if its target index (p^j) is inside the view.
// The exposed prefix is identical to the untruncated construction.
//
// Whole copies of a round are appended in one call. For a prime near m the
// first round is thousands of one-term copies, and handing them over one at
// a time made a full sieve quadratic in m.
//
// Storage is pluggable so the same procedure fills a dense row (exposed as a
// ValuationSequence) or a sparse row holding only the positive cells (what
// the sieve keeps per prime).
// ---------------------------------------------------------------------------

template <class S>
concept DciStorage = requires(S s, const S cs, std::size_t n) {
  { cs.size() } -> std::convertible_to<std::size_t>;
  s.start_single_zero();
  s.append_copies(n, n);
  s.append_prefix_copy(n, n);
  s.increment_last();
};

template <DciStorage Storage>
void duplicate_concatenate_increment(index_t p, std::size_t m, Storage& out) {
  if (p < 2) throw std::invalid_argument("generate_dci: p must be >= 2");
  if (m == 0) throw std::invalid_argument("generate_dci: m must be >= 1");

  out.start_single_zero();
  while (out.size() < m) {
    const std::size_t block = out.size();
    const std::size_t fit = (m - block) / block;
    const std::size_t wanted = static_cast<std::size_t>(p - 1);
    if (fit >= wanted) {
      out.append_copies(block, wanted);
      out.increment_last();
      continue;
    }
    // Last round: whole copies that fit, then a partial one up to m.
    out.append_copies(block, fit);
    if (out.size() < m) out.append_prefix_copy(block, m - out.size());
  }
}

/// Contiguous term storage, index n at offset n-1.
class DenseTerms {
 public:
  explicit DenseTerms(std::size_t capacity = 0) { terms_.reserve(capacity); }

  std::size_t size() const { return terms_.size(); }
  void start_single_zero() { terms_.assign(1, 0); }

  // Appends `copies` copies of the first `block` terms (the whole sequence).
  void append_copies(std::size_t block, std::size_t copies) {
    terms_.reserve(block * (copies + 1));
    for (std::size_t c = 0; c < copies; ++c) append_prefix_copy(block, block);
  }

  // Appends the first `take` of the first `block` terms.
  void append_prefix_copy(std::size_t /*block*/, std::size_t take) {
    const std::size_t old = terms_.size();
    terms_.resize(old + take);
    std::copy_n(terms_.begin(), take, terms_.begin() + static_cast<std::ptrdiff_t>(old));
  }

  void increment_last() { ++terms_.back(); }

  std::vector<term_t> release() && { return std::move(terms_); }

 private:
  std::vector<term_t> terms_;
};

/// Positive cells only: parallel (index, value) arrays in increasing index
/// order, plus the logical length. Copies shift indexes by addition.
class SparseTerms {
 public:
  std::size_t size() const { return length_; }

  void start_single_zero() {
    length_ = 1;
    positions_.clear();
    values_.clear();
  }

  // A block with no positive cells costs nothing to copy, however many times.
  void append_copies(std::size_t block, std::size_t copies) {
    const std::size_t count = positions_.size();
    if (count != 0) {
      positions_.reserve(count * (copies + 1));
      values_.reserve(count * (copies + 1));
      for (std::size_t c = 1; c <= copies; ++c)
        for (std::size_t i = 0; i < count; ++i) {
          positions_.push_back(positions_[i] + c * block);
          values_.push_back(values_[i]);
        }
    }
    length_ += copies * block;
  }

  void append_prefix_copy(std::size_t block, std::size_t take) {
    const std::size_t offset = length_;
    const std::size_t count = positions_.size();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t pos = positions_[i];
      if (pos > take || pos > block) break;
      const term_t value = values_[i];
      positions_.push_back(pos + offset);
      values_.push_back(value);
    }
    length_ += take;
  }

  void increment_last() {
    if (!positions_.empty() && positions_.back() == length_) {
      ++values_.back();
    } else {
      positions_.push_back(length_);
      values_.push_back(1);
    }
  }

  std::span<const std::size_t> positions() const { return positions_; }
  std::span<const term_t> values() const { return values_; }

  /// Value at 1-based index n (0 if no positive cell there).
  term_t at(std::size_t n) const {
    const auto it = std::lower_bound(positions_.begin(), positions_.end(), n);
    if (it == positions_.end() || *it != n) return 0;
    return values_[static_cast<std::size_t>(it - positions_.begin())];
  }

 private:
  std::size_t length_ = 0;
  std::vector<std::size_t> positions_;
  std::vector<term_t> values_;
};

// ---------------------------------------------------------------------------
// ValuationSequence
// ---------------------------------------------------------------------------

/// 1-indexed prefix v_p(1..m). Immutable once built.
class ValuationSequence {
 public:
  ValuationSequence(index_t p, std::vector<term_t> terms) : p_(p), terms_(std::move(terms)) {}

  index_t prime() const { return p_; }
  std::size_t size() const { return terms_.size(); }

  /// Unchecked 1-based access.
  term_t operator[](std::size_t n) const { return terms_[n - 1]; }

  term_t at(std::size_t n) const {
    if (n == 0 || n > terms_.size())
      throw std::out_of_range("ValuationSequence: index " + std::to_string(n) + " outside 1.." +
                              std::to_string(terms_.size()));
    return terms_[n - 1];
  }

  /// Zero-based view; element i holds the term for index i+1.
  std::span<const term_t> terms() const { return terms_; }

  friend bool operator==(const ValuationSequence&, const ValuationSequence&) = default;

 private:
  index_t p_;
  std::vector<term_t> terms_;
};

/// v_p(1..m) by duplicate-concatenate-increment; no division anywhere.
inline ValuationSequence generate_dci(index_t p, std::size_t m) {
  if (p < 2) throw std::invalid_argument("generate_dci: p must be >= 2");
  if (m == 0) throw std::invalid_argument("generate_dci: m must be >= 1");
  if (m > std::vector<term_t>().max_size())
    throw std::length_error("generate_dci: m exceeds addressable length");
#if PADIC_VERIFY_PRIMALITY
  if (!is_prime_trial(p)) throw std::invalid_argument("generate_dci: p = " + std::to_string(p) + " is not prime");
#endif
  DenseTerms storage(m);
  duplicate_concatenate_increment(p, m, storage);
  return ValuationSequence(p, std::move(storage).release());
}

// ---------------------------------------------------------------------------
// Odd and even parts
// ---------------------------------------------------------------------------

struct OddEvenDecomposition {
  index_t n;
  index_t even_part;  // 2^{v_2(n)}
  index_t odd_part;   // largest odd divisor

  friend bool operator==(const OddEvenDecomposition&, const OddEvenDecomposition&) = default;
};

inline OddEvenDecomposition odd_even_parts(index_t n) {
  if (n == 0) throw std::invalid_argument("odd_even_parts: n must be >= 1");
  const int twos = std::countr_zero(n);
  return {n, index_t{1} << twos, n >> twos};
}

/// Odd part of n reduced mod 4; always 1 or 3.
inline unsigned odd_part_mod4(index_t n) {
  return static_cast<unsigned>(odd_even_parts(n).odd_part & 3u);
}

}  // namespace padic
