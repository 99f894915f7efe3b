#pragma once

// Test-only reference computations. Nothing here calls into the library.

#include <array>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline unsigned valuation(std::uint64_t p, std::uint64_t n) {
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t odd_part(std::uint64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

/// Move-then-turn turtle on the integer lattice with 90-degree turns, done
/// by rotating the direction vector one quarter turn at a time.
inline std::vector<std::pair<long, long>> lattice_trace(const std::vector<long>& quarter_turns) {
  std::vector<std::pair<long, long>> pts{{0, 0}};
  long x = 0, y = 0, dx = 1, dy = 0;
  for (const long t : quarter_turns) {
    x += dx;
    y += dy;
    pts.emplace_back(x, y);
    long k = ((t % 4) + 4) % 4;
    while (k--) {
      const long ndx = -dy;
      dy = dx;
      dx = ndx;
    }
  }
  return pts;
}

inline std::vector<std::int64_t> read_bfile_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::vector<std::int64_t> out;
  std::int64_t index = 0, value = 0;
  while (in >> index >> value) out.push_back(value);
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace oracle
