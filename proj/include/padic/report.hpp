#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace padic {

struct Mismatch {
  std::uint64_t index;
  std::int64_t expected;
  std::int64_t actual;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of checking one property over a finite range of indexes.
struct CheckReport {
  std::string property;
  std::size_t cases = 0;
  std::optional<Mismatch> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

}  // namespace padic
