// Command-line front end: sequences, the sieve table, factorizations,
// decimation reports, dragon turn sequences, SVG rendering, verification
// suites and a small benchmark.
//
// Exit status: 0 success, 1 verification failure or runtime error, 2 usage.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padic/padic.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_prime(std::uint64_t p) {
  if (!padic::is_prime_trial(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
}

// Relative output paths land under $PADIC_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& requested) {
  std::filesystem::path path(requested);
  if (const char* dir = std::getenv("PADIC_OUTPUT_DIR"); dir && *dir && path.is_relative())
    path = std::filesystem::path(dir) / path;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  return path;
}

template <class T>
void emit_bfile(const std::vector<T>& terms) {
  std::ostringstream buf;
  padic::write_bfile(buf, std::span<const T>(terms));
  std::cout << buf.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic valuation sieve, fractal sequence checks and dragon curves"};
  app.require_subcommand(1);

  // seq
  std::uint64_t seq_p = 2;
  std::size_t seq_limit = 16;
  auto* seq = app.add_subcommand("seq", "Emit v_p(1..m) as a b-file");
  seq->add_option("--p", seq_p, "Prime base")->required();
  seq->add_option("--limit", seq_limit, "Number of terms")->required();

  // sieve
  std::size_t sieve_limit = 16;
  bool sieve_literal = false;
  auto* sieve = app.add_subcommand("sieve", "Print the sieve table as TSV");
  sieve->add_option("--limit", sieve_limit, "Table width m")->required();
  sieve->add_flag("--literal-scan", sieve_literal, "Find candidates by inspecting whole columns");

  // factor
  std::uint64_t factor_n = 0;
  std::size_t factor_limit = 0;
  auto* factor = app.add_subcommand("factor", "Read a factorization out of the sieve table (JSON)");
  factor->add_option("n", factor_n, "Integer to factor")->required();
  factor->add_option("--limit", factor_limit, "Table width m (default n)");

  // decimate
  std::uint64_t dec_p = 2;
  std::size_t dec_limit = 48;
  unsigned dec_levels = 1;
  auto* decimate = app.add_subcommand("decimate", "Show v_p and its decimation");
  decimate->add_option("--p", dec_p, "Prime base")->required();
  decimate->add_option("--limit", dec_limit, "Number of terms")->required();
  decimate->add_option("--levels", dec_levels, "Decimation levels")->check(CLI::PositiveNumber);

  // levy / heighway
  unsigned levy_iterations = 3;
  bool levy_rounds = false;
  auto* levy = app.add_subcommand("levy", "Levy dragon turn sequence as a b-file");
  levy->add_option("--iterations", levy_iterations, "Expansion rounds")->required();
  levy->add_flag("--rounds", levy_rounds, "Print each round (start, increment, result) instead");

  unsigned heighway_iterations = 4;
  bool heighway_rounds = false;
  auto* heighway = app.add_subcommand("heighway", "Heighway dragon turn sequence as a b-file");
  heighway->add_option("--iterations", heighway_iterations, "Fold rounds")->required()->check(CLI::PositiveNumber);
  heighway->add_flag("--rounds", heighway_rounds, "Print each round with boundary zeros instead");

  // oddpart
  std::size_t odd_limit = 15;
  bool odd_mod4 = false;
  bool odd_reconstruct = false;
  auto* oddpart = app.add_subcommand("oddpart", "Odd part of n as a b-file");
  oddpart->add_option("--limit", odd_limit, "Number of terms")->required()->check(CLI::PositiveNumber);
  oddpart->add_flag("--mod4", odd_mod4, "Reduce mod 4");
  oddpart->add_flag("--reconstruct", odd_reconstruct, "Build by placing odd integers at o*2^j");

  // render
  std::uint64_t render_p = 2;
  std::size_t render_limit = 10'000;
  std::string render_angle = "90";
  std::string render_mapping = "ccw";
  std::int64_t render_mod = 0;
  bool render_mirror = false;
  std::string render_from;
  std::string render_out;
  padic::SvgOptions svg;
  auto* render = app.add_subcommand("render", "Trace a term sequence as turtle turns and write SVG");
  render->add_option("--p", render_p, "Prime base for v_p");
  render->add_option("--limit", render_limit, "Number of terms");
  render->add_option("--angle", render_angle, "Turn unit in degrees, e.g. 90, 137.5, 360/7");
  render->add_option("--mapping", render_mapping, "Term-to-turn mapping")->check(CLI::IsMember({"ccw", "mod4"}));
  render->add_option("--mod", render_mod, "Reduce terms mod R before tracing")->check(CLI::PositiveNumber);
  render->add_flag("--mirror", render_mirror, "Flip turn direction");
  render->add_option("--from-file", render_from, "Render terms from a b-file instead of v_p");
  render->add_option("-o,--output", render_out, "Output SVG path")->required();
  render->add_option("--stroke-width", svg.stroke_width, "Stroke width in path units (default: auto)");
  render->add_option("--margin", svg.margin, "Margin in path units");
  render->add_option("--canvas", svg.canvas_size, "Canvas size in pixels")->check(CLI::PositiveNumber);

  // verify
  std::string verify_scope = "all";
  std::size_t verify_limit = 0;
  unsigned verify_iterations = 0;
  std::vector<std::uint64_t> verify_p;
  std::size_t verify_max_period = 0;
  bool verify_small = false;
  bool verify_parallel = false;
  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 1 on any failure");
  verify->add_option("scope", verify_scope, "Suite to run")
      ->check(CLI::IsMember({"sieve", "valuations", "fractal", "levy", "heighway", "render", "all"}));
  verify->add_option("--limit", verify_limit, "Size limit for sieve/valuations/fractal/render");
  verify->add_option("--iterations", verify_iterations, "Rounds for levy/heighway");
  verify->add_option("--p", verify_p, "Prime base(s) for the fractal suite");
  verify->add_option("--max-period", verify_max_period, "Largest period to disprove");
  verify->add_flag("--small", verify_small, "Desk-scale limits for a quick run");
  verify->add_flag("--parallel", verify_parallel, "Run suites concurrently");

  // bench
  std::size_t bench_limit = 100'000;
  auto* bench = app.add_subcommand("bench", "Time DCI row generation against trial division (CSV)");
  bench->add_option("--limit", bench_limit, "Upper bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*seq) {
      require_prime(seq_p);
      const padic::ValuationSequence s = padic::generate_dci(seq_p, seq_limit);
      emit_bfile(std::vector<padic::term_t>(s.terms().begin(), s.terms().end()));
    } else if (*sieve) {
      const auto scan = sieve_literal ? padic::CandidateScan::literal_columns : padic::CandidateScan::marked_bits;
      std::ostringstream buf;
      padic::write_sieve_tsv(buf, padic::run_sieve(sieve_limit, scan));
      std::cout << buf.str();
    } else if (*factor) {
      if (factor_n == 0) throw UsageError("n must be >= 1");
      const std::size_t width = factor_limit ? factor_limit : factor_n;
      if (factor_n > width) throw UsageError("n exceeds --limit; the table cannot factor beyond its width");
      const padic::SieveTable table = padic::run_sieve(width);
      std::cout << padic::factorization_json(padic::read_factorization(table, factor_n)) << '\n';
    } else if (*decimate) {
      require_prime(dec_p);
      const padic::ValuationSequence s = padic::generate_dci(dec_p, dec_limit);
      padic::write_labelled_row(std::cout, "Original", s.terms());
      std::vector<padic::term_t> level(s.terms().begin(), s.terms().end());
      for (unsigned k = 1; k <= dec_levels; ++k) {
        level = padic::decimate_terms(std::span<const padic::term_t>(level), dec_p);
        const std::string label = dec_levels == 1 ? "Decimated" : "Decimated " + std::to_string(k);
        padic::write_labelled_row(std::cout, label, std::span<const padic::term_t>(level));
      }
    } else if (*levy) {
      if (levy_rounds) {
        for (const padic::LevyRound& r : padic::levy_rounds(levy_iterations)) {
          padic::write_labelled_row(std::cout, "Start", std::span<const padic::term_t>(r.start));
          padic::write_labelled_row(std::cout, "Increment", std::span<const padic::term_t>(r.incremented));
          padic::write_labelled_row(std::cout, "Insert 3s", std::span<const padic::term_t>(r.result));
        }
      } else {
        emit_bfile(padic::levy_turns(levy_iterations).terms);
      }
    } else if (*heighway) {
      if (heighway_rounds) {
        const auto rows = padic::heighway_rounds(heighway_iterations);
        for (std::size_t k = 0; k < rows.size(); ++k)
          padic::write_labelled_row(std::cout, "Round " + std::to_string(k), std::span<const padic::term_t>(rows[k]));
      } else {
        emit_bfile(padic::heighway_turns(heighway_iterations).terms);
      }
    } else if (*oddpart) {
      std::vector<std::uint64_t> terms;
      if (odd_reconstruct) {
        terms = padic::reconstruct_odd_part(odd_limit);
      } else {
        for (std::uint64_t n = 1; n <= odd_limit; ++n) terms.push_back(padic::odd_even_parts(n).odd_part);
      }
      if (odd_mod4)
        for (auto& t : terms) t &= 3u;
      emit_bfile(terms);
    } else if (*render) {
      padic::TurnProgram program;
      program.angle = padic::Angle::parse(render_angle);
      program.mapping = render_mapping == "mod4" ? padic::TurnMapping::categorical_mod4 : padic::TurnMapping::ccw_count;
      program.mirrored = render_mirror;
      if (!render_from.empty()) {
        std::ifstream in(render_from);
        if (!in) throw UsageError("cannot open " + render_from);
        program.terms = padic::read_bfile(in).terms;
      } else {
        require_prime(render_p);
        const padic::ValuationSequence s = padic::generate_dci(render_p, render_limit);
        program.terms.assign(s.terms().begin(), s.terms().end());
      }
      if (render_mod > 0)
        for (auto& t : program.terms) t = ((t % render_mod) + render_mod) % render_mod;
      const std::string doc = padic::to_svg(padic::trace(program), svg);
      const std::filesystem::path path = output_path(render_out);
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << doc;
      std::cout << "wrote " << path.string() << " (" << program.terms.size() + 1 << " vertices)\n";
    } else if (*verify) {
      padic::VerifyLimits limits = verify_small ? padic::VerifyLimits::small() : padic::VerifyLimits{};
      if (verify_limit) limits.sieve = limits.valuations = limits.fractal = limits.render_terms = verify_limit;
      if (verify_iterations) limits.levy = limits.heighway = verify_iterations;
      if (verify_max_period) limits.max_period = verify_max_period;
      if (!verify_p.empty()) {
        for (const auto p : verify_p) require_prime(p);
        limits.fractal_primes.assign(verify_p.begin(), verify_p.end());
      }
      static const std::map<std::string, padic::VerifyScope> scopes{
          {"sieve", padic::VerifyScope::sieve},       {"valuations", padic::VerifyScope::valuations},
          {"fractal", padic::VerifyScope::fractal},   {"levy", padic::VerifyScope::levy},
          {"heighway", padic::VerifyScope::heighway}, {"render", padic::VerifyScope::render},
          {"all", padic::VerifyScope::all}};
      const auto reports = padic::run_verify(scopes.at(verify_scope), limits, verify_parallel);
      bool ok = true;
      for (const auto& r : reports) {
        padic::print_report(std::cout, r);
        ok = ok && r.passed();
      }
      return ok ? 0 : kExitFailure;
    } else if (*bench) {
      std::cout << "task,limit,seconds\n";
      auto row = [&](const char* task, double secs) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", secs);
        std::cout << task << ',' << bench_limit << ',' << buf << '\n';
      };

      auto start = std::chrono::steady_clock::now();
      const padic::ValuationSequence v2 = padic::generate_dci(2, bench_limit);
      row("dci_row_p2", seconds_since(start));

      start = std::chrono::steady_clock::now();
      const padic::SieveTable table = padic::run_sieve(bench_limit);
      row("dci_all_rows", seconds_since(start));

      start = std::chrono::steady_clock::now();
      std::size_t factors = 0;
      for (std::uint64_t n = 2; n <= bench_limit; ++n) {
        std::uint64_t rest = n;
        for (std::uint64_t d = 2; d <= rest / d; ++d)
          while (rest % d == 0) {
            rest /= d;
            ++factors;
          }
        if (rest > 1) ++factors;
      }
      row("trial_division_all", seconds_since(start));
      if (v2.size() != bench_limit || factors == 0 || table.row_count() == 0) return kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
