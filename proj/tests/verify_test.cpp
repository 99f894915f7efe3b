#include <gtest/gtest.h>

#include <sstream>

#include "padic/verify.hpp"

TEST(Verify, SmallSuitesPass) {
  const auto reports = padic::run_verify(padic::VerifyScope::all, padic::VerifyLimits::small());
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_GT(r.cases, 0u) << r.suite;
  }
}

TEST(Verify, ParallelMatchesSequential) {
  const auto limits = padic::VerifyLimits::small();
  const auto seq = padic::run_verify(padic::VerifyScope::all, limits, false);
  const auto par = padic::run_verify(padic::VerifyScope::all, limits, true);
  ASSERT_EQ(seq.size(), par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_EQ(seq[i].suite, par[i].suite);
    EXPECT_EQ(seq[i].cases, par[i].cases);
    EXPECT_EQ(seq[i].notes, par[i].notes);
  }
}

TEST(Verify, SieveSixteenListsPrimes) {
  const auto r = padic::verify_sieve(16);
  ASSERT_TRUE(r.passed());
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes[0], "primes [2,3,5,7,11,13]");
}

TEST(Verify, LevyCaseCount) {
  const auto r = padic::verify_levy(10);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases, 2047u);
}

TEST(Verify, ReportFormatting) {
  padic::VerifyReport r;
  r.suite = "demo";
  r.cases = 3;
  r.add(padic::CheckReport{"prop", 2, padic::Mismatch{7, 3, 4}});
  std::ostringstream out;
  padic::print_report(out, r);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("[FAIL] demo: 5 cases, 1 failures\ttime_ms=", 0), 0u) << text;
  EXPECT_NE(text.find("prop: first counterexample at index 7 (expected 3, actual 4)"), std::string::npos);
}
