#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "padic/dragon.hpp"
#include "padic/fractal.hpp"
#include "padic/report.hpp"
#include "padic/sieve.hpp"
#include "padic/turtle.hpp"
#include "padic/valuation.hpp"

namespace padic {

struct VerifyFailure {
  std::string property;
  Mismatch mismatch;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  double wall_ms = 0;
  std::vector<std::string> notes;  // deterministic extra lines, e.g. the prime list

  bool passed() const { return failures.empty(); }

  void add(const CheckReport& check) {
    cases += check.cases;
    if (check.first_failure) failures.push_back({check.property, *check.first_failure});
  }
};

struct VerifyLimits {
  std::size_t sieve = 100'000;
  std::size_t valuations = 1'000'000;
  std::size_t fractal = 100'000;
  std::size_t max_period = 1'000;
  std::vector<index_t> fractal_primes{2, 3, 5, 7};
  unsigned levy = 10;
  unsigned heighway = 16;
  std::size_t render_terms = 10'000;

  static VerifyLimits small() {
    VerifyLimits l;
    l.sieve = 10'000;
    l.valuations = 100'000;
    l.fractal = 10'000;
    l.max_period = 100;
    l.heighway = 12;
    l.render_terms = 1'000;
    return l;
  }
};

namespace detail {

template <class Fn>
VerifyReport timed(std::string suite, Fn&& body) {
  VerifyReport report;
  report.suite = std::move(suite);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Distinct prime factors of n with exponents, by trial division.
inline std::vector<PrimePower> trial_factor(index_t n) {
  std::vector<PrimePower> out;
  for (index_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    term_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<index_t> trial_primes(index_t limit) {
  std::vector<index_t> out;
  for (index_t n = 2; n <= limit; ++n)
    if (is_prime_trial(n)) out.push_back(n);
  return out;
}

}  // namespace detail

inline VerifyReport verify_sieve(std::size_t limit) {
  return detail::timed("sieve", [&](VerifyReport& report) {
    const SieveTable table = run_sieve(limit);
    const std::vector<index_t> found = primes(table);
    const std::vector<index_t> expected = detail::trial_primes(limit);

    CheckReport primes_check{"primes = trial division", expected.size(), std::nullopt};
    for (std::size_t k = 0; k < std::max(found.size(), expected.size()); ++k) {
      const std::int64_t want = k < expected.size() ? static_cast<std::int64_t>(expected[k]) : -1;
      const std::int64_t got = k < found.size() ? static_cast<std::int64_t>(found[k]) : -1;
      if (want != got) {
        primes_check.first_failure = Mismatch{k + 1, want, got};
        break;
      }
    }
    report.add(primes_check);

    CheckReport rebuild{"factorization product = n", 0, std::nullopt};
    CheckReport columns{"column entries = trial-division exponents", 0, std::nullopt};
    for (index_t n = 2; n <= limit; ++n) {
      const Factorization f = read_factorization(table, n);
      index_t product = 1;
      for (const PrimePower& pp : f.factors)
        for (term_t e = 0; e < pp.exponent; ++e) product *= pp.prime;
      ++rebuild.cases;
      if (!rebuild.first_failure && product != n)
        rebuild.first_failure = Mismatch{n, static_cast<std::int64_t>(n), static_cast<std::int64_t>(product)};

      ++columns.cases;
      if (!columns.first_failure && f.factors != detail::trial_factor(n))
        columns.first_failure = Mismatch{n, static_cast<std::int64_t>(detail::trial_factor(n).size()),
                                         static_cast<std::int64_t>(f.factors.size())};
    }
    report.add(rebuild);
    report.add(columns);

    if (found.size() <= 32) {
      std::string list = "primes [";
      for (std::size_t k = 0; k < found.size(); ++k) list += (k ? "," : "") + std::to_string(found[k]);
      report.notes.push_back(list + "]");
    } else {
      report.notes.push_back(std::to_string(found.size()) + " primes <= " + std::to_string(limit));
    }
  });
}

inline VerifyReport verify_valuations(std::size_t limit) {
  return detail::timed("valuations", [&](VerifyReport& report) {
    for (const index_t p : {2, 3, 5, 7, 11, 13}) {
      const ValuationSequence seq = generate_dci(p, limit);
      CheckReport oracle{"dci = oracle (p=" + std::to_string(p) + ")", limit, std::nullopt};
      for (std::size_t n = 1; n <= limit; ++n) {
        const unsigned want = valuation_oracle(p, n);
        if (seq[n] != want) {
          oracle.first_failure = Mismatch{n, want, seq[n]};
          break;
        }
      }
      report.add(oracle);

      CheckReport powers{"v_p(p^j) = j (p=" + std::to_string(p) + ")", 0, std::nullopt};
      term_t j = 0;
      for (index_t pj = 1; pj <= limit; pj *= p, ++j) {
        ++powers.cases;
        if (seq[pj] != j) {
          powers.first_failure = Mismatch{pj, j, seq[pj]};
          break;
        }
        if (pj > limit / p) break;
      }
      report.add(powers);
    }

    CheckReport identity{"2^v2(n) * odd(n) = n", limit, std::nullopt};
    for (index_t n = 1; n <= limit; ++n) {
      const index_t rebuilt = (index_t{1} << valuation_oracle(2, n)) * odd_even_parts(n).odd_part;
      if (rebuilt != n) {
        identity.first_failure = Mismatch{n, static_cast<std::int64_t>(n), static_cast<std::int64_t>(rebuilt)};
        break;
      }
    }
    report.add(identity);
  });
}

inline VerifyReport verify_fractal(const std::vector<index_t>& bases, std::size_t limit, std::size_t max_period) {
  return detail::timed("fractal", [&](VerifyReport& report) {
    for (const index_t p : bases) {
      const ValuationSequence seq = generate_dci(p, limit);
      const std::vector<term_t> once = decimate(seq);
      report.add(check_self_containment(seq, once.size()));

      // Nested levels: decimating the decimated output must still match.
      const std::vector<term_t> twice = decimate_terms(std::span<const term_t>(once), p);
      CheckReport nested{"nested decimation (p=" + std::to_string(p) + ")", twice.size(), std::nullopt};
      for (std::size_t i = 0; i < twice.size(); ++i) {
        if (twice[i] != seq.terms()[i]) {
          nested.first_failure = Mismatch{i + 1, seq.terms()[i], twice[i]};
          break;
        }
      }
      report.add(nested);

      CheckReport aperiodic{"aperiodicity witnesses (p=" + std::to_string(p) + ")", 0, std::nullopt};
      for (std::size_t q = 1; q <= max_period && q < seq.size(); ++q) {
        ++aperiodic.cases;
        if (!aperiodicity_witness(seq, q)) {
          aperiodic.first_failure = Mismatch{q, 1, 0};
          break;
        }
      }
      report.add(aperiodic);
    }

    const std::vector<index_t> odd = reconstruct_odd_part(limit);
    CheckReport rebuild{"odd-part reconstruction = odd part", limit, std::nullopt};
    for (index_t n = 1; n <= limit; ++n) {
      index_t want = n;
      while (want % 2 == 0) want /= 2;
      if (odd[n - 1] != want) {
        rebuild.first_failure = Mismatch{n, static_cast<std::int64_t>(want), static_cast<std::int64_t>(odd[n - 1])};
        break;
      }
    }
    report.add(rebuild);
  });
}

inline VerifyReport verify_levy(unsigned iterations) {
  return detail::timed("levy", [&](VerifyReport& report) { report.add(check_levy_theorem(iterations)); });
}

inline VerifyReport verify_heighway(unsigned iterations) {
  return detail::timed("heighway",
                       [&](VerifyReport& report) { report.add(check_heighway_equivalence(iterations)); });
}

inline VerifyReport verify_render(std::size_t terms) {
  return detail::timed("render", [&](VerifyReport& report) {
    const ValuationSequence v2 = generate_dci(2, terms);
    TurnProgram raw{{v2.terms().begin(), v2.terms().end()}, Angle{90}, TurnMapping::ccw_count};
    TurnProgram reduced = raw;
    for (std::int64_t& t : reduced.terms) t %= 4;
    const PolylinePath a = trace(raw);
    const PolylinePath b = trace(reduced);
    CheckReport invariance{"mod-4 trace invariance at 90", a.vertices.size(), std::nullopt};
    if (!path_equal(a, b, 0)) invariance.first_failure = Mismatch{0, 1, 0};
    report.add(invariance);

    for (const Angle angle : {Angle{120}, Angle{135}, Angle{60}}) {
      TurnProgram program = raw;
      program.angle = angle;
      const PolylinePath path = trace(program);
      CheckReport unit{"unit segments at " + std::to_string(angle.numerator()), path.vertices.size() - 1, std::nullopt};
      for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        const double len = std::hypot(path.vertices[i].x - path.vertices[i - 1].x,
                                      path.vertices[i].y - path.vertices[i - 1].y);
        if (std::abs(len - 1.0) > 1e-9) {
          unit.first_failure = Mismatch{i, 1, static_cast<std::int64_t>(std::llround(len * 1e9))};
          break;
        }
      }
      report.add(unit);
    }

    std::mt19937_64 rng(20240601);
    CheckReport count{"vertex count = terms + 1", 100, std::nullopt};
    for (std::size_t k = 0; k < 100; ++k) {
      TurnProgram program;
      program.terms.resize(1 + rng() % 300);
      for (std::int64_t& t : program.terms) t = static_cast<std::int64_t>(rng() % 17) - 4;
      program.angle = Angle{static_cast<std::int64_t>(1 + rng() % 180)};
      program.mapping = rng() % 2 ? TurnMapping::ccw_count : TurnMapping::categorical_mod4;
      const PolylinePath path = trace(program);
      if (path.vertices.size() != program.terms.size() + 1) {
        count.first_failure = Mismatch{k, static_cast<std::int64_t>(program.terms.size() + 1),
                                       static_cast<std::int64_t>(path.vertices.size())};
        break;
      }
    }
    report.add(count);

    CheckReport golden{"golden trace of v2 at 90", 5, std::nullopt};
    const std::vector<Point> want{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}};
    for (std::size_t i = 0; i < want.size() && i < a.vertices.size(); ++i) {
      if (a.vertices[i] != want[i]) {
        golden.first_failure = Mismatch{i, 0, 0};
        break;
      }
    }
    report.add(golden);
  });
}

enum class VerifyScope { sieve, valuations, fractal, levy, heighway, render, all };

/// Runs the suites in scope. With `parallel`, suites run concurrently but
/// reports come back in the fixed suite order.
inline std::vector<VerifyReport> run_verify(VerifyScope scope, const VerifyLimits& limits, bool parallel = false) {
  std::vector<std::function<VerifyReport()>> jobs;
  auto want = [&](VerifyScope s) { return scope == VerifyScope::all || scope == s; };
  if (want(VerifyScope::sieve)) jobs.emplace_back([&] { return verify_sieve(limits.sieve); });
  if (want(VerifyScope::valuations)) jobs.emplace_back([&] { return verify_valuations(limits.valuations); });
  if (want(VerifyScope::fractal))
    jobs.emplace_back([&] { return verify_fractal(limits.fractal_primes, limits.fractal, limits.max_period); });
  if (want(VerifyScope::levy)) jobs.emplace_back([&] { return verify_levy(limits.levy); });
  if (want(VerifyScope::heighway)) jobs.emplace_back([&] { return verify_heighway(limits.heighway); });
  if (want(VerifyScope::render)) jobs.emplace_back([&] { return verify_render(limits.render_terms); });

  std::vector<VerifyReport> reports;
  if (!parallel) {
    for (auto& job : jobs) reports.push_back(job());
    return reports;
  }
  std::vector<std::future<VerifyReport>> pending;
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

/// One status line per suite; wall time sits alone in the trailing
/// tab-separated field so the rest of the output is reproducible.
inline void print_report(std::ostream& out, const VerifyReport& report) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", report.wall_ms);
  out << (report.passed() ? "[PASS] " : "[FAIL] ") << report.suite << ": " << report.cases << " cases, "
      << report.failures.size() << " failures\ttime_ms=" << ms << '\n';
  for (const std::string& note : report.notes) out << "  " << note << '\n';
  for (const VerifyFailure& f : report.failures)
    out << "  " << f.property << ": first counterexample at index " << f.mismatch.index << " (expected "
        << f.mismatch.expected << ", actual " << f.mismatch.actual << ")\n";
}

}  // namespace padic
