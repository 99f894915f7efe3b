#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic/report.hpp"
#include "padic/valuation.hpp"

namespace padic {

// ---------------------------------------------------------------------------
// Decimation: skip p terms, keep one, repeat. The kept terms sit at indexes
// (p+1), 2(p+1), 3(p+1), ...
// ---------------------------------------------------------------------------

/// Raw entry point, usable on any term list (including decimated output and
/// negative controls). `terms[i]` is the term at index i+1.
template <class T>
std::vector<T> decimate_terms(std::span<const T> terms, index_t p) {
  if (p < 1) throw std::invalid_argument("decimate: p must be >= 1");
  if (terms.size() < p + 1)
    throw std::length_error("decimate: need at least " + std::to_string(p + 1) + " terms, have " +
                            std::to_string(terms.size()));
  std::vector<T> kept;
  kept.reserve(terms.size() / (p + 1));
  for (std::size_t index = p + 1; index <= terms.size(); index += p + 1) kept.push_back(terms[index - 1]);
  return kept;
}

inline std::vector<term_t> decimate(const ValuationSequence& seq) {
  return decimate_terms(seq.terms(), seq.prime());
}

/// Passes iff decimate(terms)[i] == terms[i] for 1 <= i <= count.
template <class T>
CheckReport check_self_containment_terms(std::span<const T> terms, index_t p, std::size_t count) {
  if (count == 0) throw std::invalid_argument("check_self_containment: count must be >= 1");
  const std::vector<T> kept = decimate_terms(terms, p);
  if (kept.size() < count)
    throw std::length_error("check_self_containment: only " + std::to_string(kept.size()) +
                            " terms survive decimation, " + std::to_string(count) + " requested");
  CheckReport report{"self-containment (p=" + std::to_string(p) + ")", count, std::nullopt};
  for (std::size_t i = 0; i < count; ++i) {
    if (kept[i] != terms[i]) {
      report.first_failure = Mismatch{i + 1, static_cast<std::int64_t>(terms[i]), static_cast<std::int64_t>(kept[i])};
      break;
    }
  }
  return report;
}

inline CheckReport check_self_containment(const ValuationSequence& seq, std::size_t count) {
  return check_self_containment_terms(seq.terms(), seq.prime(), count);
}

// ---------------------------------------------------------------------------
// Aperiodicity
// ---------------------------------------------------------------------------

/// Smallest i with terms[i] != terms[i+q] inside the available prefix; a
/// disproof of period q. nullopt if the prefix is q-periodic.
template <class T>
std::optional<index_t> aperiodicity_witness_terms(std::span<const T> terms, std::size_t q) {
  if (q == 0 || q >= terms.size())
    throw std::invalid_argument("aperiodicity_witness: period must be in 1.." + std::to_string(terms.size() - 1));
  for (std::size_t i = 0; i + q < terms.size(); ++i)
    if (terms[i] != terms[i + q]) return i + 1;
  return std::nullopt;
}

inline std::optional<index_t> aperiodicity_witness(const ValuationSequence& seq, std::size_t q) {
  return aperiodicity_witness_terms(seq.terms(), q);
}

// ---------------------------------------------------------------------------
// Odd part: decimation families and reconstruction
// ---------------------------------------------------------------------------

/// The first `count` indexes of the form o * 2^j with o odd, ascending.
inline std::vector<index_t> odd_part_decimation_indexes(unsigned j, std::size_t count) {
  constexpr unsigned width = std::numeric_limits<index_t>::digits;
  if (j >= width - 1) throw std::overflow_error("odd_part_decimation_indexes: 2^(j+1) overflows");
  const index_t first = index_t{1} << j;
  const index_t stride = first << 1;
  if (count > 0 && (count - 1) > (std::numeric_limits<index_t>::max() - first) / stride)
    throw std::overflow_error("odd_part_decimation_indexes: index overflows");
  std::vector<index_t> out;
  out.reserve(count);
  index_t index = first;
  for (std::size_t k = 0; k < count; ++k, index += stride) out.push_back(index);
  return out;
}

/// Builds o(1..max_index) by placing the odd integers at o * 2^j for
/// j = 0, 1, 2, ... Every index is written exactly once; a double write or
/// an unfilled slot is a logic error.
inline std::vector<index_t> reconstruct_odd_part(std::size_t max_index) {
  if (max_index == 0) throw std::invalid_argument("reconstruct_odd_part: max_index must be >= 1");
  std::vector<index_t> terms(max_index, 0);
  for (std::size_t first = 1; first <= max_index; first <<= 1) {
    const std::size_t stride = first << 1;
    index_t odd = 1;
    for (std::size_t index = first; index <= max_index; index += stride, odd += 2) {
      if (terms[index - 1] != 0)
        throw std::logic_error("reconstruct_odd_part: index " + std::to_string(index) + " written twice");
      terms[index - 1] = odd;
    }
    if (first > max_index / 2) break;
  }
  for (std::size_t i = 0; i < max_index; ++i)
    if (terms[i] == 0) throw std::logic_error("reconstruct_odd_part: index " + std::to_string(i + 1) + " never filled");
  return terms;
}

}  // namespace padic
