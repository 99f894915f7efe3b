#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic/report.hpp"
#include "padic/valuation.hpp"

namespace padic {

// Turn counts here are abstract (number of 90-degree counterclockwise
// turns). Geometry lives in turtle.hpp.

struct LevyTurnSequence {
  unsigned iterations = 0;
  std::vector<term_t> terms;  // terms[i] is the turn at vertex i+1

  std::size_t size() const { return terms.size(); }
  term_t operator[](std::size_t n) const { return terms[n - 1]; }
};

struct HeighwayTurnSequence {
  unsigned iterations = 0;
  std::vector<term_t> terms;  // over {1, 3}, boundary 0s stripped

  std::size_t size() const { return terms.size(); }
  term_t operator[](std::size_t n) const { return terms[n - 1]; }
};

namespace detail {

// Sequence length after `doublings` rounds of L -> 2L+1 from L = 1 (or
// equivalently 2^(doublings+1) - 1), guarded against overflow.
inline std::size_t doubled_length(unsigned exponent, const char* who) {
  constexpr unsigned width = std::numeric_limits<std::size_t>::digits;
  if (exponent >= width - 1 || (std::size_t{1} << exponent) - 1 > std::vector<term_t>().max_size())
    throw std::length_error(std::string(who) + ": 2^" + std::to_string(exponent) + " terms is not addressable");
  return (std::size_t{1} << exponent) - 1;
}

inline std::vector<term_t> levy_round(std::span<const term_t> seq) {
  std::vector<term_t> out(2 * seq.size() + 1, 3);
  for (std::size_t i = 0; i < seq.size(); ++i) out[2 * i + 1] = seq[i] + 1;
  return out;
}

// Between each adjacent pair insert 1 if the pair's first element sits at an
// odd 1-based index, else 3. Boundary 0s are part of the counted sequence.
inline std::vector<term_t> heighway_round(std::span<const term_t> seq) {
  std::vector<term_t> out(2 * seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    out[2 * i] = seq[i];
    out[2 * i + 1] = (i % 2 == 0) ? 1 : 3;
  }
  out.back() = seq.back();
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Levy dragon
// ---------------------------------------------------------------------------

/// One round of the Levy construction, kept for step-by-step inspection.
struct LevyRound {
  std::vector<term_t> start;
  std::vector<term_t> incremented;
  std::vector<term_t> result;
};

/// Start from <3>; each round increments every term, puts a 3 between each
/// neighbouring pair and a 3 at both ends.
inline LevyTurnSequence levy_turns(unsigned iterations) {
  detail::doubled_length(iterations + 1, "levy_turns");
  std::vector<term_t> seq{3};
  for (unsigned round = 0; round < iterations; ++round) seq = detail::levy_round(seq);
  return {iterations, std::move(seq)};
}

inline std::vector<LevyRound> levy_rounds(unsigned iterations) {
  detail::doubled_length(iterations + 1, "levy_rounds");
  std::vector<LevyRound> rounds;
  std::vector<term_t> seq{3};
  for (unsigned round = 0; round < iterations; ++round) {
    LevyRound r;
    r.start = seq;
    r.incremented = seq;
    for (term_t& t : r.incremented) ++t;
    seq = detail::levy_round(seq);
    r.result = seq;
    rounds.push_back(std::move(r));
  }
  return rounds;
}

/// Levy term i against v_2(8i) for every generated i.
inline CheckReport check_levy_theorem(unsigned iterations) {
  const LevyTurnSequence levy = levy_turns(iterations);
  CheckReport report{"levy turns = v2(8i)", levy.size(), std::nullopt};
  for (std::size_t i = 1; i <= levy.size(); ++i) {
    const unsigned expected = valuation_oracle(2, index_t{8} * i);
    if (levy[i] != expected) {
      report.first_failure = Mismatch{i, expected, levy[i]};
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Heighway dragon
// ---------------------------------------------------------------------------

/// Each round of the fold construction with the boundary 0s still attached.
inline std::vector<std::vector<term_t>> heighway_rounds(unsigned iterations) {
  if (iterations == 0) throw std::invalid_argument("heighway_rounds: iterations must be >= 1");
  detail::doubled_length(iterations, "heighway_rounds");
  std::vector<std::vector<term_t>> rows{{0, 0}};
  for (unsigned round = 0; round < iterations; ++round) rows.push_back(detail::heighway_round(rows.back()));
  return rows;
}

inline HeighwayTurnSequence heighway_turns(unsigned iterations) {
  if (iterations == 0) throw std::invalid_argument("heighway_turns: iterations must be >= 1");
  detail::doubled_length(iterations, "heighway_turns");
  std::vector<term_t> seq{0, 0};
  for (unsigned round = 0; round < iterations; ++round) seq = detail::heighway_round(seq);
  return {iterations, std::vector<term_t>(seq.begin() + 1, seq.end() - 1)};
}

/// Heighway term n against odd_part(n) mod 4 for n <= 2^j - 1.
inline CheckReport check_heighway_equivalence(unsigned iterations) {
  const HeighwayTurnSequence turns = heighway_turns(iterations);
  CheckReport report{"heighway turns = odd part mod 4", turns.size(), std::nullopt};
  for (std::size_t n = 1; n <= turns.size(); ++n) {
    const unsigned expected = odd_part_mod4(n);
    if (turns[n] != expected) {
      report.first_failure = Mismatch{n, expected, turns[n]};
      break;
    }
  }
  return report;
}

}  // namespace padic
